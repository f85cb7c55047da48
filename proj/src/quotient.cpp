#include "weyl/quotient.hpp"

namespace weyl {

std::size_t expected_invariant_dimension(const QuotientSpec& spec) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), spec.n + spec.dim, spec.dim);
  return out.get_ui();
}

QuotientClass::QuotientClass(const QuotientSpec& spec) : spec_(spec), rep_(spec.dim) {}

QuotientClass::QuotientClass(const QuotientSpec& spec, RightForm rep) : spec_(spec), rep_(std::move(rep)) {
  if (rep_.dim() != spec_.dim) throw std::invalid_argument("class dimension mismatch");
  rep_.erase_if_x_degree_above(spec_.n);
}

void QuotientClass::check_spec(const QuotientClass& other) const {
  if (!(spec_ == other.spec_)) throw std::invalid_argument("classes from different quotients");
}

QuotientClass& QuotientClass::operator+=(const QuotientClass& other) {
  check_spec(other);
  rep_ += other.rep_;
  return *this;
}

QuotientClass& QuotientClass::operator-=(const QuotientClass& other) {
  check_spec(other);
  rep_ -= other.rep_;
  return *this;
}

QuotientClass& QuotientClass::operator*=(const Rational& c) {
  rep_ *= c;
  return *this;
}

QuotientClass reduce_mod_mpow(const WeylOp& p, const QuotientSpec& spec) {
  if (p.dim() != spec.dim) throw std::invalid_argument("operator and quotient dimension mismatch");
  return QuotientClass(spec, to_right_form(p));
}

bool is_in_ideal(const WeylOp& p, const QuotientSpec& spec) { return reduce_mod_mpow(p, spec).is_zero(); }

QuotientClass act_on_class(const WeylOp& p, const QuotientClass& v) {
  if (p.dim() != v.spec().dim) throw std::invalid_argument("operator and class dimension mismatch");
  return reduce_mod_mpow(p * v.lift(), v.spec());
}

QuotientClass left_multiply_d(const MultiIndex& gamma, const QuotientClass& v) {
  if (gamma.dim() != v.spec().dim) throw std::invalid_argument("operator and class dimension mismatch");
  RightForm shifted(v.spec().dim);
  for (const auto& [k, c] : v.rep().terms()) shifted.add_term(k.first + gamma, k.second, c);
  return QuotientClass(v.spec(), std::move(shifted));
}

std::size_t TermIndexer::index(const TermKey& key) {
  auto [it, inserted] = ids_.try_emplace(key, keys_.size());
  if (inserted) keys_.push_back(key);
  return it->second;
}

std::optional<std::size_t> TermIndexer::find(const TermKey& key) const {
  auto it = ids_.find(key);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

SparseVector TermIndexer::coordinates(const TermMap& terms) {
  SparseVector v;
  for (const auto& [k, c] : terms) v[index(k)] = c;
  return v;
}

std::size_t classes_rank(const std::vector<QuotientClass>& classes) {
  TermIndexer indexer;
  std::vector<SparseVector> columns;
  for (const auto& c : classes) columns.push_back(indexer.coordinates(c.rep()));
  SparseMatrix m(indexer.size(), classes.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.add_column(j, columns[j]);
  return sparse_rank(m);
}

bool classes_independent(const std::vector<QuotientClass>& classes) {
  return classes_rank(classes) == classes.size();
}

InvariantBasis invariants_solver(const QuotientSpec& spec, unsigned order_bound) {
  const std::size_t d = spec.dim;
  std::vector<TermKey> unknowns;
  for (const auto& beta : monomials_up_to(d, order_bound))
    for (const auto& alpha : monomials_up_to(d, spec.n)) unknowns.push_back(TermKey{beta, alpha});

  // One block of equations per axis: coefficients of x_i . v in the canonical basis.
  std::vector<TermIndexer> rows(d);
  std::vector<std::vector<std::pair<std::size_t, SparseVector>>> images(d);
  for (std::size_t i = 0; i < d; ++i) {
    WeylOp xi = WeylOp::x(d, i);
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      RightForm basis(d);
      basis.add_term(unknowns[j].first, unknowns[j].second, 1);
      QuotientClass image = act_on_class(xi, QuotientClass(spec, std::move(basis)));
      images[i].emplace_back(j, rows[i].coordinates(image.rep()));
    }
  }
  std::size_t total_rows = 0;
  std::vector<std::size_t> offset(d);
  for (std::size_t i = 0; i < d; ++i) {
    offset[i] = total_rows;
    total_rows += rows[i].size();
  }
  SparseMatrix system(total_rows, unknowns.size());
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& [j, col] : images[i])
      for (const auto& [r, v] : col) system.add(offset[i] + r, j, v);

  InvariantBasis basis;
  basis.spec = spec;
  basis.order_bound = order_bound;
  for (const auto& kv : sparse_kernel(system)) {
    RightForm rep(d);
    for (const auto& [j, c] : kv) rep.add_term(unknowns[j].first, unknowns[j].second, c);
    basis.vectors.emplace_back(spec, std::move(rep));
  }
  basis.below_expected = basis.dimension() < expected_invariant_dimension(spec);
  return basis;
}

InvariantBasis invariants_auto(const QuotientSpec& spec) {
  unsigned bound = static_cast<unsigned>(spec.dim) * spec.n;
  InvariantBasis basis = invariants_solver(spec, bound);
  InvariantBasis probe = invariants_solver(spec, bound + 1);
  basis.stabilized = probe.dimension() == basis.dimension();
  return basis;
}

}  // namespace weyl
