#include "weyl/ode_split.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "weyl/decomposition.hpp"

namespace weyl {

namespace {

std::string name(const Poly& q) { return q.to_string("t"); }

// "t", "t^2", "(t - 1)", "(t - 1)^3"
std::string power_name(const Poly& q, unsigned e) {
  std::string base = name(q);
  if (q.terms().size() > 1) base = "(" + base + ")";
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::size_t op_rank(const std::vector<WeylOp>& ops) {
  TermIndexer indexer;
  std::vector<SparseVector> cols;
  for (const auto& op : ops) cols.push_back(indexer.coordinates(op.terms()));
  SparseMatrix m(indexer.size(), ops.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.add_column(j, cols[j]);
  return sparse_rank(m);
}

bool is_linear(const Poly& q) { return degree(q) == 1; }

}  // namespace

WeylOp constcoeff_operator(const Poly& p) {
  if (p.dim() != 1) throw std::invalid_argument("constant-coefficient operator must be univariate");
  WeylOp out(1);
  for (const auto& [e, c] : p.terms()) out.add_term(MultiIndex{0}, e, c);
  return out;
}

WeylOp reduce_mod_constcoeff(const WeylOp& w, const Poly& p) {
  if (w.dim() != 1) throw std::invalid_argument("constant-coefficient reduction needs dimension 1");
  if (degree(p) < 1) throw std::invalid_argument("reduction modulo a constant polynomial");
  std::map<MultiIndex::value_type, Poly> by_x;
  for (const auto& [k, c] : w.terms()) {
    auto [it, _] = by_x.try_emplace(k.first[0], Poly(1));
    it->second.add_term(k.second, c);
  }
  WeylOp out(1);
  for (const auto& [a, coeff] : by_x) {
    Poly r = divmod(coeff, p).remainder;
    for (const auto& [e, c] : r.terms()) out.add_term(MultiIndex{a}, e, c);
  }
  return out;
}

ConstCoeffSpec make_constcoeff_spec(const Poly& p, std::vector<SquarefreeFactor> factors) {
  if (degree(p) < 1) throw std::invalid_argument("constant-coefficient operator must be nonconstant");
  for (auto& f : factors) {
    if (degree(f.factor) < 1 || f.multiplicity == 0) throw std::invalid_argument("factor must be nonconstant with positive multiplicity");
    f.factor = monic(f.factor);
  }
  if (!(expand_factors(factors) == monic(p))) {
    throw std::invalid_argument("factor list does not multiply to " + name(p));
  }
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (degree(gcd(factors[i].factor, factors[j].factor)) > 0)
        throw std::invalid_argument("factors " + name(factors[i].factor) + " and " + name(factors[j].factor) +
                                    " are not coprime");
  return {p, std::move(factors)};
}

ConstCoeffSpec default_factorization(const Poly& p) {
  if (degree(p) < 1) throw std::invalid_argument("constant-coefficient operator must be nonconstant");
  std::vector<SquarefreeFactor> linear, rest;
  for (const auto& sf : yun_squarefree(p)) {
    Poly cofactor = sf.factor;
    for (const auto& root : rational_roots(sf.factor)) {
      linear.push_back({linear_factor(root), sf.multiplicity});
      cofactor = divmod(cofactor, linear_factor(root)).quotient;
    }
    if (degree(cofactor) > 0) rest.push_back({monic(cofactor), sf.multiplicity});
  }
  // Linear factors by ascending root, then the remaining blocks.
  std::sort(linear.begin(), linear.end(), [](const auto& a, const auto& b) {
    return -a.factor.coefficient(MultiIndex{0}) < -b.factor.coefficient(MultiIndex{0});
  });
  linear.insert(linear.end(), rest.begin(), rest.end());
  return make_constcoeff_spec(p, std::move(linear));
}

std::size_t OdeSplit::simple_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.linear_split ? c.linear_split->size() : 1;
  return n;
}

std::size_t OdeSplit::unsplit_blocks() const {
  return static_cast<std::size_t>(
      std::count_if(components.begin(), components.end(), [](const auto& c) { return !c.linear_split; }));
}

OdeSplit crt_split(const ConstCoeffSpec& spec) {
  const Poly pm = monic(spec.p);
  OdeSplit out;
  out.spec = spec;
  std::vector<Poly> powers;
  for (const auto& f : spec.factors) powers.push_back(f.factor.pow(f.multiplicity));

  WeylOp sum(1);
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    Poly others = Poly::constant(1, 1);
    for (std::size_t j = 0; j < powers.size(); ++j)
      if (j != i) others = others * powers[j];
    BezoutResult b = bezout(powers[i], others);
    if (degree(b.gcd) != 0) throw std::invalid_argument("factor list is not pairwise coprime");
    Poly e = divmod(b.v * others, pm).remainder;

    PrimePowerComponent comp;
    comp.q = spec.factors[i].factor;
    comp.multiplicity = spec.factors[i].multiplicity;
    comp.idempotent = constcoeff_operator(e);
    sum += comp.idempotent;

    std::string tag = "[" + power_name(comp.q, comp.multiplicity) + "]";
    WeylOp killed = reduce_mod_constcoeff(constcoeff_operator(powers[i]) * comp.idempotent, pm);
    out.transcript.push_back({"crt_kill" + tag, killed.is_zero(), "q^e * e_i == 0 mod A1 P"});
    out.transcript.push_back({"crt_nonzero" + tag, !reduce_mod_constcoeff(comp.idempotent, pm).is_zero(), ""});
    out.components.push_back(std::move(comp));
  }
  WeylOp residual = reduce_mod_constcoeff(sum - WeylOp::constant(1, 1), pm);
  out.transcript.push_back({"crt_sum_is_one", residual.is_zero(), "sum e_i == 1 mod A1 P"});
  return out;
}

std::vector<WeylOp> split_prime_power_linear(const Poly& q, unsigned multiplicity) {
  if (degree(q) != 1) throw std::invalid_argument("fine splitting needs a linear factor, got " + name(q));
  if (multiplicity == 0) throw std::invalid_argument("multiplicity must be positive");
  Poly qm = monic(q);
  Rational root = -qm.coefficient(MultiIndex{0});
  Poly modulus = qm.pow(multiplicity);
  DecompositionCertificate cert = build_certificate(QuotientSpec(1, multiplicity - 1));
  std::vector<WeylOp> out;
  for (const auto& e : cert.entries) {
    WeylOp pulled = fourier_inverse(translate_x(e.generator_op, 0, root));
    out.push_back(reduce_mod_constcoeff(pulled, modulus));
  }
  return out;
}

OdeSplit ode_split(const Poly& p, std::optional<std::vector<SquarefreeFactor>> user_factors) {
  ConstCoeffSpec spec = user_factors ? make_constcoeff_spec(p, std::move(*user_factors)) : default_factorization(p);
  OdeSplit out = crt_split(spec);
  const Poly pm = monic(p);
  std::vector<WeylOp> all_embedded;
  for (auto& comp : out.components) {
    std::string tag = "[" + power_name(comp.q, comp.multiplicity) + "]";
    if (!is_linear(comp.q)) {
      out.transcript.push_back({"unsplit_block" + tag, true, "nonlinear factor kept as one block"});
      continue;
    }
    const Poly local_mod = comp.q.pow(comp.multiplicity);
    const WeylOp q_op = constcoeff_operator(comp.q);
    auto local = split_prime_power_linear(comp.q, comp.multiplicity);

    bool kill = true, nonzero = true;
    for (const auto& g : local) {
      kill = kill && reduce_mod_constcoeff(q_op * g, local_mod).is_zero();
      nonzero = nonzero && !g.is_zero();
    }
    out.transcript.push_back({"simple_count" + tag, local.size() == comp.multiplicity,
                              std::to_string(local.size()) + " generators"});
    out.transcript.push_back({"simple_kill" + tag, kill, "q * g == 0 mod A1 q^e"});
    out.transcript.push_back({"simple_nonzero" + tag, nonzero, ""});
    out.transcript.push_back({"simple_independent" + tag, op_rank(local) == local.size(), ""});

    bool ekill = true, enonzero = true;
    for (const auto& g : local) {
      WeylOp embedded = reduce_mod_constcoeff(g * comp.idempotent, pm);
      ekill = ekill && reduce_mod_constcoeff(q_op * embedded, pm).is_zero();
      enonzero = enonzero && !embedded.is_zero();
      comp.embedded_split.push_back(embedded);
      all_embedded.push_back(embedded);
    }
    out.transcript.push_back({"embedded_kill" + tag, ekill, "q * g e_i == 0 mod A1 P"});
    out.transcript.push_back({"embedded_nonzero" + tag, enonzero, ""});
    comp.linear_split = std::move(local);
  }
  if (!all_embedded.empty()) {
    out.transcript.push_back({"embedded_independent", op_rank(all_embedded) == all_embedded.size(),
                              std::to_string(all_embedded.size()) + " simple generators"});
  }
  return out;
}

}  // namespace weyl
