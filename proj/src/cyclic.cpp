#include <stdexcept>

#include "weyl/decomposition.hpp"

namespace weyl {

std::vector<QuotientClass> act_on_sum(const WeylOp& p, const std::vector<QuotientClass>& element) {
  std::vector<QuotientClass> out;
  out.reserve(element.size());
  for (const auto& v : element) out.push_back(act_on_class(p, v));
  return out;
}

namespace {

bool all_zero(const std::vector<QuotientClass>& element) {
  for (const auto& v : element)
    if (!v.is_zero()) return false;
  return true;
}

std::vector<QuotientClass> zero_element(const std::vector<QuotientSpec>& summands) {
  std::vector<QuotientClass> out;
  for (const auto& s : summands) out.emplace_back(s);
  return out;
}

// Finds P = sum c_{ab} x^a d^b with |a|, |b| <= window and P . g == target.
std::optional<WeylOp> solve_in_window(const std::vector<QuotientClass>& g, const std::vector<QuotientClass>& target,
                                      unsigned window) {
  const std::size_t d = g.front().spec().dim;
  const std::size_t parts = g.size();
  std::vector<TermIndexer> rows(parts);
  std::vector<std::pair<MultiIndex, MultiIndex>> unknowns;
  std::vector<std::vector<SparseVector>> columns;
  const auto monos = monomials_up_to(d, window);
  for (const auto& b : monos) {
    std::vector<QuotientClass> db;
    for (const auto& v : g) db.push_back(left_multiply_d(b, v));
    for (const auto& a : monos) {
      auto image = act_on_sum(WeylOp::monomial(a, MultiIndex(d)), db);
      std::vector<SparseVector> col;
      for (std::size_t k = 0; k < parts; ++k) col.push_back(rows[k].coordinates(image[k].rep()));
      unknowns.emplace_back(a, b);
      columns.push_back(std::move(col));
    }
  }
  std::vector<SparseVector> rhs_parts;
  for (std::size_t k = 0; k < parts; ++k) rhs_parts.push_back(rows[k].coordinates(target[k].rep()));

  std::vector<std::size_t> offset(parts);
  std::size_t total = 0;
  for (std::size_t k = 0; k < parts; ++k) {
    offset[k] = total;
    total += rows[k].size();
  }
  SparseMatrix system(total, unknowns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t k = 0; k < parts; ++k)
      for (const auto& [r, v] : columns[j][k]) system.add(offset[k] + r, j, v);
  SparseVector rhs;
  for (std::size_t k = 0; k < parts; ++k)
    for (const auto& [r, v] : rhs_parts[k]) rhs[offset[k] + r] = v;

  auto sol = sparse_solve(system, rhs);
  if (!sol) return std::nullopt;
  WeylOp p(d);
  for (const auto& [j, c] : *sol) p.add_term(unknowns[j].first, unknowns[j].second, c);
  return p;
}

}  // namespace

CyclicResult cyclic_generator(const std::vector<QuotientSpec>& summands, const CyclicOptions& options) {
  if (summands.empty()) throw std::invalid_argument("cyclic generator of an empty direct sum");
  const std::size_t d = summands.front().dim;
  for (const auto& s : summands)
    if (s.dim != d) throw std::invalid_argument("summands must share the ambient dimension");

  CyclicResult result;
  result.summands = summands;

  // Simple pieces D m_a of every summand, in summand order.
  struct Piece {
    std::size_t summand;
    MultiIndex alpha;
    std::vector<QuotientClass> element;
  };
  std::vector<Piece> pieces;
  std::vector<DecompositionCertificate> certs;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    certs.push_back(build_certificate(summands[k]));
    for (const auto& e : certs.back().entries) {
      auto element = zero_element(summands);
      element[k] = e.m_class;
      pieces.push_back({k, e.alpha, std::move(element)});
    }
  }

  // Length induction: M = L (+) M', g generates M', L = D m0 simple.
  std::vector<QuotientClass> g = pieces.back().element;
  for (std::size_t t = pieces.size() - 1; t-- > 0;) {
    const auto& m0 = pieces[t].element;
    std::optional<MultiIndex> annihilator;
    for (unsigned deg = 1; deg <= options.monomial_bound && !annihilator; ++deg) {
      for (const auto& delta : monomials_of_degree(d, deg)) {
        if (all_zero(act_on_sum(WeylOp::monomial(delta, MultiIndex(d)), g))) {
          annihilator = delta;
          break;
        }
      }
    }
    if (!annihilator) throw std::runtime_error("no monomial annihilator within the search bound");
    WeylOp q = WeylOp::monomial(*annihilator, MultiIndex(d));

    std::optional<MultiIndex> companion;
    for (const auto& gamma : monomials_up_to(d, options.monomial_bound)) {
      std::vector<QuotientClass> pm0;
      for (const auto& v : m0) pm0.push_back(left_multiply_d(gamma, v));
      if (!all_zero(act_on_sum(q, pm0))) {
        companion = gamma;
        for (std::size_t k = 0; k < g.size(); ++k) g[k] += pm0[k];
        break;
      }
    }
    if (!companion) throw std::runtime_error("no companion operator within the search bound");
    result.steps.push_back({pieces[t].summand, pieces[t].alpha, *annihilator, *companion});
  }
  result.generator = g;

  // Recover the unit vector of each summand from g.
  bool recovered_all = true;
  std::string missing;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    auto target = zero_element(summands);
    target[k] = reduce_mod_mpow(WeylOp::constant(d, 1), summands[k]);
    std::optional<WeylOp> p;
    for (unsigned s = 0; s <= options.recovery_bound && !p; ++s) p = solve_in_window(g, target, s);
    if (p && act_on_sum(*p, g) == target) {
      result.recovery.push_back(*p);
    } else {
      recovered_all = false;
      result.recovery.push_back(WeylOp(d));
      missing += (missing.empty() ? "" : ",") + std::to_string(k);
    }
  }
  result.checks.push_back({"unit_vectors_recovered", recovered_all,
                           recovered_all ? "every summand generator lies in D g" : "missing summands " + missing});

  for (const auto& s : summands) {
    result.expected_dimension += expected_invariant_dimension(s);
    result.invariant_dimension += invariants_auto(s).dimension();
  }
  bool dims_ok = recovered_all && result.invariant_dimension == result.expected_dimension;
  result.checks.push_back({"invariant_dimension", dims_ok,
                           std::to_string(result.invariant_dimension) + " of " +
                               std::to_string(result.expected_dimension)});
  return result;
}

}  // namespace weyl
