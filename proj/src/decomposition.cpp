#include "weyl/decomposition.hpp"

#include <set>
#include <stdexcept>

namespace weyl {

WeylOp rising_factorial(const WeylOp& a, unsigned m) {
  WeylOp out = WeylOp::constant(a.dim(), 1);
  for (unsigned k = 0; k < m; ++k) out = out * (a + WeylOp::constant(a.dim(), Rational(static_cast<long>(k))));
  return out;
}

PochhammerOp build_pochhammer(std::size_t dim, unsigned n) {
  WeylOp q = WeylOp::constant(dim, 1);
  for (std::size_t i = 0; i < dim; ++i) {
    WeylOp shifted = WeylOp::constant(dim, 1) + WeylOp::d(dim, i) * WeylOp::x(dim, i);
    q = q * rising_factorial(shifted, n);
  }
  return {dim, n, std::move(q)};
}

std::optional<std::string> DecompositionCertificate::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name;
  return std::nullopt;
}

const GeneratorEntry& DecompositionCertificate::entry(const MultiIndex& alpha) const {
  for (const auto& e : entries)
    if (e.alpha == alpha) return e;
  throw std::out_of_range("no generator for multi-index " + alpha.to_string());
}

Rational euler_check(const GeneratorEntry& entry, const QuotientSpec& spec) {
  QuotientClass image = reduce_mod_mpow(entry.generator_op * euler_operator(spec.dim), spec);
  if (entry.m_class.is_zero()) throw std::logic_error("Euler check on a zero generator class");
  const auto& [key, lead] = *entry.m_class.rep().terms().begin();
  Rational w = image.rep().coefficient(key.first, key.second) / lead;
  if (!(image == entry.m_class * w)) {
    throw std::logic_error("generator " + entry.alpha.to_string() + " is not an Euler eigenvector");
  }
  return w;
}

DecompositionCertificate build_certificate(const QuotientSpec& spec) {
  const std::size_t d = spec.dim;
  DecompositionCertificate cert;
  cert.spec = spec;

  std::vector<WeylOp> pochhammers;
  for (unsigned k = 0; k <= spec.n; ++k) pochhammers.push_back(build_pochhammer(d, k).op);

  for (const auto& alpha : monomials_up_to(d, spec.n)) {
    GeneratorEntry e{alpha, static_cast<unsigned>(alpha.total()), WeylOp(d), QuotientClass(spec), Rational(0)};
    e.generator_op = pochhammers[spec.n - e.layer] * WeylOp::monomial(alpha, MultiIndex(d));
    e.m_class = reduce_mod_mpow(e.generator_op, spec);
    cert.entries.push_back(std::move(e));
  }

  // (a) x_i Q_{n-j,d} X^a lies in D m^{n+1} for every i.
  Check well_defined{"well_defined", true, ""};
  for (const auto& e : cert.entries) {
    for (std::size_t i = 0; i < d; ++i) {
      if (!is_in_ideal(WeylOp::x(d, i) * e.generator_op, spec)) {
        well_defined.pass = false;
        well_defined.detail = "x" + std::to_string(i + 1) + " does not kill m" + e.alpha.to_string();
      }
    }
  }
  cert.checks.push_back(well_defined);

  // (b) every generator class is nonzero.
  Check nonzero{"nonzero", true, ""};
  for (const auto& e : cert.entries) {
    if (e.m_class.is_zero()) {
      nonzero.pass = false;
      nonzero.detail = "m" + e.alpha.to_string() + " vanishes";
    }
  }
  cert.checks.push_back(nonzero);

  // (c) Q-linear independence.
  std::vector<QuotientClass> classes;
  for (const auto& e : cert.entries) classes.push_back(e.m_class);
  std::size_t rank = classes_rank(classes);
  cert.checks.push_back({"independent", rank == classes.size(),
                         "rank " + std::to_string(rank) + " of " + std::to_string(classes.size())});

  // (d) the invariant space has exactly as many dimensions as there are
  // summands, so the injective psi is onto.
  InvariantBasis inv = invariants_auto(spec);
  cert.invariant_dimension = inv.dimension();
  cert.invariants_stabilized = inv.stabilized;
  std::size_t expected = expected_invariant_dimension(spec);
  bool dims_ok = inv.stabilized && inv.dimension() == expected && cert.entries.size() == expected;
  cert.checks.push_back({"dimension_match", dims_ok,
                         "invariants " + std::to_string(inv.dimension()) + " (bound " +
                             std::to_string(inv.order_bound) + (inv.stabilized ? ", stable" : ", NOT stable") +
                             "), expected " + std::to_string(expected) + ", entries " +
                             std::to_string(cert.entries.size())});

  // (e) right multiplication by the Euler operator acts on m_a by -(d + |a|).
  Check euler{"euler_weights", true, ""};
  std::map<unsigned, std::set<Rational>> weights_by_layer;
  for (auto& e : cert.entries) {
    try {
      e.euler_weight = euler_check(e, spec);
    } catch (const std::logic_error& err) {
      euler.pass = false;
      euler.detail = err.what();
      continue;
    }
    Rational expected_weight = -Rational(static_cast<long>(d + e.layer));
    if (e.euler_weight != expected_weight) {
      euler.pass = false;
      euler.detail = "m" + e.alpha.to_string() + " has weight " + e.euler_weight.to_string();
    }
    weights_by_layer[e.layer].insert(e.euler_weight);
  }
  std::set<Rational> layer_weights;
  for (const auto& [layer, ws] : weights_by_layer) {
    if (ws.size() != 1) euler.pass = false;
    layer_weights.insert(ws.begin(), ws.end());
  }
  if (layer_weights.size() != weights_by_layer.size()) {
    euler.pass = false;
    if (euler.detail.empty()) euler.detail = "weights collide across layers";
  }
  cert.checks.push_back(euler);
  return cert;
}

QuotientClass psi_apply(const Components& components, const DecompositionCertificate& cert) {
  QuotientClass out(cert.spec);
  for (const auto& [alpha, p] : components) {
    if (alpha.total() > cert.spec.n) throw std::invalid_argument("component index " + alpha.to_string() + " exceeds n");
    if (p.dim() != cert.spec.dim) throw std::invalid_argument("component dimension mismatch");
    out += act_on_class(p, cert.entry(alpha).m_class);
  }
  return out;
}

Components psi_invert(const QuotientClass& v, const DecompositionCertificate& cert, unsigned max_escalations) {
  if (!(v.spec() == cert.spec)) throw std::invalid_argument("class does not belong to the certificate's quotient");
  const std::size_t d = cert.spec.dim;
  unsigned bound = static_cast<unsigned>(std::max(0L, v.rep().order())) + static_cast<unsigned>(d) * cert.spec.n;

  // psi is multigraded: d^g m_a has x-minus-d degree a - g. Only unknowns in
  // the degrees that occur in v can carry a nonzero coefficient.
  std::set<std::vector<long>> degrees;
  for (const auto& [k, _] : v.rep().terms()) {
    std::vector<long> mu(d);
    for (std::size_t i = 0; i < d; ++i) mu[i] = static_cast<long>(k.second[i]) - static_cast<long>(k.first[i]);
    degrees.insert(mu);
  }

  for (unsigned attempt = 0; attempt <= max_escalations; ++attempt, ++bound) {
    struct Unknown {
      std::size_t entry;
      MultiIndex gamma;
    };
    std::vector<Unknown> unknowns;
    std::vector<SparseVector> columns;
    TermIndexer rows;
    for (const auto& mu : degrees) {
      for (std::size_t k = 0; k < cert.entries.size(); ++k) {
        const MultiIndex& alpha = cert.entries[k].alpha;
        MultiIndex gamma(d);
        bool admissible = true;
        for (std::size_t i = 0; i < d && admissible; ++i) {
          long g = static_cast<long>(alpha[i]) - mu[i];
          admissible = g >= 0;
          if (admissible) gamma[i] = static_cast<MultiIndex::value_type>(g);
        }
        if (!admissible || gamma.total() > bound) continue;
        unknowns.push_back({k, gamma});
        columns.push_back(rows.coordinates(left_multiply_d(gamma, cert.entries[k].m_class).rep()));
      }
    }
    SparseVector rhs = rows.coordinates(v.rep());
    SparseMatrix system(rows.size(), unknowns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) system.add_column(j, columns[j]);
    auto solution = sparse_solve(system, rhs);
    if (!solution) continue;

    Components out;
    for (const auto& e : cert.entries) out.emplace(e.alpha, WeylOp(d));
    for (const auto& [j, c] : *solution) {
      const auto& u = unknowns[j];
      out.at(cert.entries[u.entry].alpha).add_term(MultiIndex(d), u.gamma, c);
    }
    return out;
  }
  throw std::runtime_error("psi inversion found no solution within the order bound");
}

}  // namespace weyl
