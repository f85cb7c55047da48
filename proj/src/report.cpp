#include "weyl/report.hpp"

#include <sstream>

#include "weyl/format.hpp"

namespace weyl {

using nlohmann::json;

namespace {

json index_json(const MultiIndex& m) { return m.to_vector(); }

json terms_json(const TermMap& terms, bool right) {
  json out = json::array();
  for (const auto& [k, c] : terms) {
    const MultiIndex& xs = right ? k.second : k.first;
    const MultiIndex& ds = right ? k.first : k.second;
    out.push_back({{"x", index_json(xs)}, {"d", index_json(ds)}, {"coeff", c.to_string()}});
  }
  return out;
}

}  // namespace

json op_json(const WeylOp& p) {
  return {{"form", "left"}, {"text", print_canonical(p)}, {"terms", terms_json(p.terms(), false)}};
}

json class_json(const QuotientClass& v) {
  return {{"form", "right"}, {"text", print_class(v)}, {"terms", terms_json(v.rep().terms(), true)}};
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json item = {{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    out.push_back(item);
  }
  return out;
}

json certificate_json(const DecompositionCertificate& cert) {
  json entries = json::array();
  for (const auto& e : cert.entries) {
    entries.push_back({{"alpha", index_json(e.alpha)},
                       {"layer", e.layer},
                       {"generator", op_json(e.generator_op)},
                       {"class", class_json(e.m_class)},
                       {"euler_weight", e.euler_weight.to_string()}});
  }
  return {{"d", cert.spec.dim},
          {"n", cert.spec.n},
          {"generator_count", cert.entries.size()},
          {"invariant_dimension", cert.invariant_dimension},
          {"invariants_stabilized", cert.invariants_stabilized},
          {"verified", cert.verified()},
          {"entries", entries}};
}

json invariants_json(const InvariantBasis& basis) {
  json vectors = json::array();
  for (const auto& v : basis.vectors) vectors.push_back(class_json(v));
  return {{"d", basis.spec.dim},
          {"n", basis.spec.n},
          {"order_bound", basis.order_bound},
          {"dimension", basis.dimension()},
          {"expected_dimension", expected_invariant_dimension(basis.spec)},
          {"stabilized", basis.stabilized},
          {"below_expected", basis.below_expected},
          {"basis", vectors}};
}

json ode_split_json(const OdeSplit& split) {
  json comps = json::array();
  for (const auto& c : split.components) {
    json item = {{"factor", c.q.to_string("t")},
                 {"multiplicity", c.multiplicity},
                 {"idempotent", op_json(c.idempotent)}};
    if (c.linear_split) {
      json local = json::array(), embedded = json::array();
      for (const auto& g : *c.linear_split) local.push_back(op_json(g));
      for (const auto& g : c.embedded_split) embedded.push_back(op_json(g));
      item["linear_split"] = local;
      item["embedded_split"] = embedded;
    } else {
      item["linear_split"] = nullptr;
    }
    comps.push_back(item);
  }
  return {{"p", split.spec.p.to_string("t")},
          {"components", comps},
          {"simple_count", split.simple_count()},
          {"unsplit_blocks", split.unsplit_blocks()},
          {"verified", split.verified()}};
}

json cyclic_json(const CyclicResult& r) {
  json summands = json::array(), generator = json::array(), recovery = json::array(), steps = json::array();
  for (const auto& s : r.summands) summands.push_back({{"d", s.dim}, {"n", s.n}});
  for (const auto& g : r.generator) generator.push_back(class_json(g));
  for (const auto& p : r.recovery) recovery.push_back(op_json(p));
  for (const auto& s : r.steps) {
    steps.push_back({{"summand", s.summand},
                     {"piece", index_json(s.piece_alpha)},
                     {"annihilator_x", index_json(s.annihilator)},
                     {"companion_d", index_json(s.companion)}});
  }
  return {{"summands", summands},
          {"generator", generator},
          {"steps", steps},
          {"recovery", recovery},
          {"invariant_dimension", r.invariant_dimension},
          {"expected_dimension", r.expected_dimension},
          {"verified", r.verified()}};
}

json to_json(const Report& report, bool include_timing) {
  json out = {{"command", report.command},
              {"inputs", report.inputs},
              {"result", report.result},
              {"checks", checks_json(report.checks)}};
  if (include_timing) out["timing"] = {{"elapsed_ms", report.elapsed_ms}};
  return out;
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  for (const auto& line : report.text) os << line << "\n";
  for (const auto& c : report.checks) {
    os << "[" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace weyl
