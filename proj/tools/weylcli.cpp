// weylcli: command-line front end for the Weyl algebra engine.
//
// Exit codes: 0 success, 1 input error, 2 failed verification.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weyl/acceptance.hpp"
#include "weyl/decomposition.hpp"
#include "weyl/format.hpp"
#include "weyl/ode_split.hpp"
#include "weyl/parser.hpp"
#include "weyl/report.hpp"

using namespace weyl;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;

// Input problems that are not parse errors (missing flags, bad values).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Args {
  std::size_t dim = 1;
  std::vector<unsigned> powers;
  std::vector<std::string> exprs;
  std::string poly;
  std::vector<std::string> factors;
  std::string order_bound = "auto";
  std::string format = "text";
  std::string out;
  bool quick = false;
};

unsigned single_power(const Args& a) {
  if (a.powers.size() != 1) throw UsageError("exactly one -n is required");
  return a.powers.front();
}

const std::string& require_poly(const Args& a) {
  if (a.poly.empty()) throw UsageError("-p is required");
  return a.poly;
}

std::vector<WeylOp> parse_all(const Args& a, std::size_t at_least) {
  if (a.exprs.size() < at_least) throw UsageError("at least " + std::to_string(at_least) + " -e expected");
  std::vector<WeylOp> ops;
  for (const auto& e : a.exprs) ops.push_back(parse_expr(e, a.dim));
  return ops;
}

json base_inputs(const Args& a) {
  json in = {{"d", a.dim}};
  if (!a.exprs.empty()) in["e"] = a.exprs;
  return in;
}

Report cmd_normalize(const Args& a) {
  Report r{"normalize"};
  r.inputs = base_inputs(a);
  auto ops = parse_all(a, 1);
  json items = json::array();
  for (const auto& p : ops) {
    items.push_back(op_json(p));
    r.text.push_back(print_canonical(p));
  }
  r.result = items.size() == 1 ? items.front() : json{{"form", "left"}, {"items", items}};
  return r;
}

Report cmd_mul(const Args& a) {
  Report r{"mul"};
  r.inputs = base_inputs(a);
  auto ops = parse_all(a, 2);
  WeylOp prod = ops.front();
  for (std::size_t k = 1; k < ops.size(); ++k) prod = prod * ops[k];
  r.result = op_json(prod);
  r.text.push_back(print_canonical(prod));
  return r;
}

Report cmd_reduce(const Args& a) {
  Report r{"reduce"};
  QuotientSpec spec(a.dim, single_power(a));
  r.inputs = base_inputs(a);
  r.inputs["n"] = spec.n;
  auto ops = parse_all(a, 1);
  json items = json::array();
  for (const auto& p : ops) {
    QuotientClass c = reduce_mod_mpow(p, spec);
    items.push_back(class_json(c));
    r.text.push_back(print_class(c));
  }
  r.result = items.size() == 1 ? items.front() : json{{"form", "right"}, {"items", items}};
  return r;
}

Report cmd_invariants(const Args& a) {
  Report r{"invariants"};
  QuotientSpec spec(a.dim, single_power(a));
  r.inputs = {{"d", a.dim}, {"n", spec.n}, {"order_bound", a.order_bound}};
  auto solve = [&]() -> InvariantBasis {
    if (a.order_bound == "auto") return invariants_auto(spec);
    unsigned bound = 0;
    try {
      std::size_t used = 0;
      long v = std::stol(a.order_bound, &used);
      if (used != a.order_bound.size() || v < 0) throw std::invalid_argument("");
      bound = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw UsageError("--order-bound expects a nonnegative integer or 'auto'");
    }
    return invariants_solver(spec, bound);
  };
  InvariantBasis basis = solve();
  r.result = invariants_json(basis);
  std::size_t expected = expected_invariant_dimension(spec);
  r.text.push_back("invariant dimension " + std::to_string(basis.dimension()) + " at order bound " +
                   std::to_string(basis.order_bound) + " (expected " + std::to_string(expected) + ")");
  for (const auto& v : basis.vectors) r.text.push_back("  " + print_class(v));
  r.checks.push_back({"dimension_at_most_expected", basis.dimension() <= expected, ""});
  if (a.order_bound == "auto")
    r.checks.push_back({"dimension_match", basis.stabilized && basis.dimension() == expected,
                        basis.stabilized ? "probe stable" : "probe found more invariants"});
  return r;
}

Report cmd_decompose(const Args& a) {
  Report r{"decompose"};
  QuotientSpec spec(a.dim, single_power(a));
  r.inputs = base_inputs(a);
  r.inputs["n"] = spec.n;
  DecompositionCertificate cert = build_certificate(spec);
  r.result = certificate_json(cert);
  r.checks = cert.checks;
  r.text.push_back("D/D m^" + std::to_string(spec.n + 1) + " in dimension " + std::to_string(spec.dim) + ": " +
                   std::to_string(cert.entries.size()) + " simple summands");
  for (const auto& e : cert.entries)
    r.text.push_back("  m" + e.alpha.to_string() + " = " + print_class(e.m_class) + "   weight " +
                     e.euler_weight.to_string());

  // Optional -e: decompose each class through psi^-1.
  json decomposed = json::array();
  for (const auto& text : a.exprs) {
    QuotientClass v = reduce_mod_mpow(parse_expr(text, a.dim), spec);
    Components comps = psi_invert(v, cert);
    json parts = json::array();
    r.text.push_back(print_class(v) + " =");
    for (const auto& [alpha, p] : comps) {
      if (p.is_zero()) continue;
      parts.push_back({{"alpha", alpha.to_vector()}, {"component", op_json(p)}});
      r.text.push_back("  (" + print_canonical(p) + ") . m" + alpha.to_string());
    }
    bool ok = psi_apply(comps, cert) == v;
    r.checks.push_back({"psi_round_trip[" + text + "]", ok, ""});
    decomposed.push_back({{"class", class_json(v)}, {"components", parts}});
  }
  if (!a.exprs.empty()) r.result["decomposed"] = decomposed;
  return r;
}

Report cmd_split(const Args& a) {
  Report r{"split"};
  Poly q = parse_univariate(require_poly(a));
  unsigned e = single_power(a);
  if (e == 0) throw UsageError("-n must be positive for split");
  r.inputs = {{"p", a.poly}, {"n", e}};
  split_prime_power_linear(q, e);  // rejects nonlinear q as an input error
  OdeSplit s = ode_split(q.pow(e), std::vector<SquarefreeFactor>{{q, e}});
  r.result = ode_split_json(s);
  r.checks = s.transcript;
  r.text.push_back("A_1 / A_1 (" + q.to_string("t") + ")^" + std::to_string(e) + " with t = d1:");
  for (const auto& g : *s.components.front().linear_split) r.text.push_back("  " + print_canonical(g));
  return r;
}

std::vector<SquarefreeFactor> parse_factors(const std::vector<std::string>& specs) {
  std::vector<SquarefreeFactor> out;
  for (const auto& f : specs) {
    auto colon = f.rfind(':');
    if (colon == std::string::npos) throw UsageError("--factor expects <poly>:<multiplicity>, got '" + f + "'");
    unsigned mult = 0;
    try {
      std::size_t used = 0;
      long v = std::stol(f.substr(colon + 1), &used);
      if (used != f.size() - colon - 1 || v <= 0) throw std::invalid_argument("");
      mult = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw UsageError("bad multiplicity in --factor '" + f + "'");
    }
    out.push_back({parse_univariate(f.substr(0, colon)), mult});
  }
  return out;
}

Report cmd_ode_split(const Args& a) {
  Report r{"ode-split"};
  Poly p = parse_univariate(require_poly(a));
  r.inputs = {{"p", a.poly}};
  std::optional<std::vector<SquarefreeFactor>> user;
  if (!a.factors.empty()) {
    user = parse_factors(a.factors);
    r.inputs["factors"] = a.factors;
  }
  OdeSplit s = ode_split(p, user);
  r.result = ode_split_json(s);
  r.checks = s.transcript;
  r.text.push_back("P(t) = " + s.spec.p.to_string("t") + ", t = d1");
  for (const auto& c : s.components) {
    std::string base = c.q.terms().size() > 1 ? "(" + c.q.to_string("t") + ")" : c.q.to_string("t");
    if (c.multiplicity > 1) base += "^" + std::to_string(c.multiplicity);
    std::string head = "  " + base + ": e = " + print_canonical(c.idempotent);
    r.text.push_back(head);
    if (c.linear_split) {
      for (const auto& g : c.embedded_split) r.text.push_back("    simple " + print_canonical(g));
    } else {
      r.text.push_back("    nonlinear block, not split further");
    }
  }
  r.text.push_back(std::to_string(s.simple_count()) + " simple generators, " + std::to_string(s.unsplit_blocks()) +
                   " unsplit blocks");
  return r;
}

Report cmd_cyclic(const Args& a) {
  Report r{"cyclic"};
  if (a.powers.empty()) throw UsageError("cyclic needs one -n per summand");
  std::vector<QuotientSpec> summands;
  for (unsigned n : a.powers) summands.emplace_back(a.dim, n);
  r.inputs = {{"d", a.dim}, {"n", a.powers}};
  CyclicResult c = cyclic_generator(summands);
  r.result = cyclic_json(c);
  r.checks = c.checks;
  std::string g = "generator (";
  for (std::size_t k = 0; k < c.generator.size(); ++k) g += (k ? ", " : "") + print_class(c.generator[k]);
  r.text.push_back(g + ")");
  for (std::size_t k = 0; k < c.recovery.size(); ++k)
    r.text.push_back("  unit " + std::to_string(k + 1) + " = (" + print_canonical(c.recovery[k]) + ") . g");
  return r;
}

void emit(const std::string& payload, const std::string& out) {
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::ios_base::failure("cannot open " + out + " for writing");
  f << payload;
  if (!f) throw std::ios_base::failure("write to " + out + " failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weyl algebra computations and decomposition certificates"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", args.out, "Write the report to a file");
  };
  auto add_dim = [&](CLI::App* sub) {
    sub->add_option("-d", args.dim, "Number of variables")->check(CLI::Range(1, 8));
  };
  auto add_exprs = [&](CLI::App* sub) { sub->add_option("-e", args.exprs, "Operator expression (repeatable)"); };
  auto add_power = [&](CLI::App* sub) { sub->add_option("-n", args.powers, "Power n of D/D m^(n+1)"); };

  auto* normalize = app.add_subcommand("normalize", "Print operators in left normal form");
  auto* mul = app.add_subcommand("mul", "Multiply operators left to right");
  auto* reduce = app.add_subcommand("reduce", "Canonical class modulo D m^(n+1)");
  auto* invariants = app.add_subcommand("invariants", "m-invariant subspace of D/D m^(n+1)");
  auto* decompose = app.add_subcommand("decompose", "Certified decomposition of D/D m^(n+1)");
  auto* split = app.add_subcommand("split", "Simple generators of A_1 / A_1 q^e for linear q");
  auto* ode = app.add_subcommand("ode-split", "Decompose A_1 / A_1 P(d) for constant-coefficient P");
  auto* cyclic = app.add_subcommand("cyclic", "Cyclic generator of a sum of D/D m^(n_k+1)");
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  for (auto* s : {normalize, mul, reduce, invariants, decompose, split, ode, cyclic, selftest}) add_common(s);
  for (auto* s : {normalize, mul, reduce, invariants, decompose, cyclic}) add_dim(s);
  for (auto* s : {normalize, mul, reduce, decompose}) add_exprs(s);
  for (auto* s : {reduce, invariants, decompose, split, cyclic}) add_power(s);
  invariants->add_option("--order-bound", args.order_bound, "Order bound (integer or auto)");
  for (auto* s : {split, ode}) s->add_option("-p", args.poly, "Polynomial in t standing for d1");
  ode->add_option("--factor", args.factors, "Factor as <poly>:<multiplicity> (repeatable)");
  selftest->add_flag("--quick", args.quick, "Skip the determinism rerun");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const bool as_json = args.format == "json";
  auto start = std::chrono::steady_clock::now();
  try {
    Report report;
    std::vector<CriterionResult> criteria;
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "normalize") report = cmd_normalize(args);
    else if (name == "mul") report = cmd_mul(args);
    else if (name == "reduce") report = cmd_reduce(args);
    else if (name == "invariants") report = cmd_invariants(args);
    else if (name == "decompose") report = cmd_decompose(args);
    else if (name == "split") report = cmd_split(args);
    else if (name == "ode-split") report = cmd_ode_split(args);
    else if (name == "cyclic") report = cmd_cyclic(args);
    else {
      AcceptanceOptions opts;
      opts.determinism = !args.quick;
      criteria = run_acceptance(opts);
      report = acceptance_report(criteria);
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    bool ok = report.verified();
    for (const auto& c : criteria) ok = ok && c.pass();

    std::string payload;
    if (as_json) {
      json j = to_json(report);
      if (!criteria.empty()) {
        json per = json::array();
        for (const auto& c : criteria)
          per.push_back({{"id", c.id}, {"seconds", c.seconds}, {"within_limit", c.seconds < c.limit_seconds}});
        j["timing"]["criteria"] = per;
      }
      payload = j.dump(2) + "\n";
    } else if (criteria.empty()) {
      payload = render_text(report);
    } else {
      payload = report.text.front();
    }
    emit(payload, args.out);
    return ok ? kExitOk : kExitVerify;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kExitVerify;
  }
}
