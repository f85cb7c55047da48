#include "weyl/weyl_op.hpp"

#include <stdexcept>

namespace weyl {

namespace {

void add_to(TermMap& terms, const TermKey& key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void require_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("Weyl algebra dimension mismatch");
}

void require_valid_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) throw std::invalid_argument("Weyl algebra dimension out of range");
}

// Visits every r with 0 <= r_i <= bound_i, passing the product of
// per-axis weights weight(i, r_i). Zero weights prune the branch.
template <class Weight, class Visit>
void for_each_box(const MultiIndex& bound, Weight&& weight, Visit&& visit) {
  const std::size_t dim = bound.dim();
  MultiIndex r(dim);
  auto rec = [&](auto&& self, std::size_t axis, const Rational& acc) -> void {
    if (axis == dim) {
      visit(r, acc);
      return;
    }
    for (MultiIndex::value_type k = 0; k <= bound[axis]; ++k) {
      Rational w = weight(axis, k);
      if (w.is_zero()) continue;
      r[axis] = k;
      self(self, axis + 1, acc * w);
    }
    r[axis] = 0;
  };
  rec(rec, 0, Rational(1));
}

MultiIndex componentwise_min(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex m(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m[i] = std::min(a[i], b[i]);
  return m;
}

}  // namespace

// ---------------------------------------------------------------- WeylOp

WeylOp::WeylOp(std::size_t dim) : dim_(dim) { require_valid_dim(dim); }

WeylOp WeylOp::constant(std::size_t dim, const Rational& c) {
  WeylOp p(dim);
  p.add_term(MultiIndex(dim), MultiIndex(dim), c);
  return p;
}

WeylOp WeylOp::x(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw std::invalid_argument("axis out of range");
  return monomial(MultiIndex::unit(dim, axis), MultiIndex(dim));
}

WeylOp WeylOp::d(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw std::invalid_argument("axis out of range");
  return monomial(MultiIndex(dim), MultiIndex::unit(dim, axis));
}

WeylOp WeylOp::monomial(const MultiIndex& xs, const MultiIndex& ds, const Rational& c) {
  require_dim(xs.dim(), ds.dim());
  WeylOp p(xs.dim());
  p.add_term(xs, ds, c);
  return p;
}

WeylOp WeylOp::from_poly(const Poly& f) {
  WeylOp p(f.dim());
  MultiIndex zero(f.dim());
  for (const auto& [e, c] : f.terms()) p.add_term(e, zero, c);
  return p;
}

long WeylOp::order() const {
  long best = -1;
  for (const auto& [k, _] : terms_) best = std::max(best, static_cast<long>(k.second.total()));
  return best;
}

long WeylOp::x_degree() const {
  long best = -1;
  for (const auto& [k, _] : terms_) best = std::max(best, static_cast<long>(k.first.total()));
  return best;
}

Rational WeylOp::coefficient(const MultiIndex& xs, const MultiIndex& ds) const {
  auto it = terms_.find(TermKey{xs, ds});
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylOp::add_term(const MultiIndex& xs, const MultiIndex& ds, const Rational& c) {
  if (xs.dim() != dim_ || ds.dim() != dim_) throw std::invalid_argument("Weyl algebra dimension mismatch");
  add_to(terms_, TermKey{xs, ds}, c);
}

WeylOp WeylOp::operator-() const {
  WeylOp r(*this);
  for (auto& [_, c] : r.terms_) c = -c;
  return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& other) {
  require_dim(dim_, other.dim_);
  for (const auto& [k, c] : other.terms_) add_to(terms_, k, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& other) {
  require_dim(dim_, other.dim_);
  for (const auto& [k, c] : other.terms_) add_to(terms_, k, -c);
  return *this;
}

WeylOp& WeylOp::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= c;
  return *this;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b) { return weyl_mul(a, b); }

WeylOp WeylOp::pow(unsigned exponent) const {
  WeylOp out = constant(dim_, 1);
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

WeylOp weyl_mul(const WeylOp& p, const WeylOp& q) {
  require_dim(p.dim(), q.dim());
  const std::size_t dim = p.dim();
  WeylOp out(dim);
  TermMap acc;
  for (const auto& [lk, lc] : p.terms()) {
    const MultiIndex& alpha = lk.first;
    const MultiIndex& beta = lk.second;
    for (const auto& [rk, rc] : q.terms()) {
      const MultiIndex& gamma = rk.first;
      const MultiIndex& delta = rk.second;
      Rational base = lc * rc;
      // d^beta x^gamma = sum_r prod_i C(beta_i, r_i) gamma_i!/(gamma_i - r_i)! x^{gamma-r} d^{beta-r}
      for_each_box(
          componentwise_min(beta, gamma),
          [&](std::size_t i, unsigned k) { return binomial(beta[i], k) * falling_factorial(gamma[i], k); },
          [&](const MultiIndex& r, const Rational& w) {
            add_to(acc, TermKey{alpha + (gamma - r), (beta - r) + delta}, base * w);
          });
    }
  }
  for (const auto& [k, c] : acc) out.add_term(k.first, k.second, c);
  return out;
}

// ------------------------------------------------------------- RightForm

RightForm::RightForm(std::size_t dim) : dim_(dim) { require_valid_dim(dim); }

long RightForm::order() const {
  long best = -1;
  for (const auto& [k, _] : terms_) best = std::max(best, static_cast<long>(k.first.total()));
  return best;
}

Rational RightForm::coefficient(const MultiIndex& ds, const MultiIndex& xs) const {
  auto it = terms_.find(TermKey{ds, xs});
  return it == terms_.end() ? Rational(0) : it->second;
}

void RightForm::add_term(const MultiIndex& ds, const MultiIndex& xs, const Rational& c) {
  if (xs.dim() != dim_ || ds.dim() != dim_) throw std::invalid_argument("Weyl algebra dimension mismatch");
  add_to(terms_, TermKey{ds, xs}, c);
}

void RightForm::erase_if_x_degree_above(unsigned n) {
  std::erase_if(terms_, [n](const auto& kv) { return kv.first.second.total() > n; });
}

RightForm RightForm::operator-() const {
  RightForm r(*this);
  for (auto& [_, c] : r.terms_) c = -c;
  return r;
}

RightForm& RightForm::operator+=(const RightForm& other) {
  require_dim(dim_, other.dim_);
  for (const auto& [k, c] : other.terms_) add_to(terms_, k, c);
  return *this;
}

RightForm& RightForm::operator-=(const RightForm& other) {
  require_dim(dim_, other.dim_);
  for (const auto& [k, c] : other.terms_) add_to(terms_, k, -c);
  return *this;
}

RightForm& RightForm::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= c;
  return *this;
}

RightForm to_right_form(const WeylOp& p) {
  // x^a d^b = sum_r (-1)^{|r|} C(a, r) b!/(b-r)! d^{b-r} x^{a-r}
  RightForm out(p.dim());
  for (const auto& [k, c] : p.terms()) {
    const MultiIndex& alpha = k.first;
    const MultiIndex& beta = k.second;
    for_each_box(
        componentwise_min(alpha, beta),
        [&](std::size_t i, unsigned r) {
          Rational w = binomial(alpha[i], r) * falling_factorial(beta[i], r);
          return (r % 2) ? -w : w;
        },
        [&](const MultiIndex& r, const Rational& w) { out.add_term(beta - r, alpha - r, c * w); });
  }
  return out;
}

WeylOp from_right_form(const RightForm& rf) {
  // d^b x^a = sum_r C(b, r) a!/(a-r)! x^{a-r} d^{b-r}
  WeylOp out(rf.dim());
  for (const auto& [k, c] : rf.terms()) {
    const MultiIndex& beta = k.first;
    const MultiIndex& alpha = k.second;
    for_each_box(
        componentwise_min(alpha, beta),
        [&](std::size_t i, unsigned r) { return binomial(beta[i], r) * falling_factorial(alpha[i], r); },
        [&](const MultiIndex& r, const Rational& w) { out.add_term(alpha - r, beta - r, c * w); });
  }
  return out;
}

Poly apply_to_poly(const WeylOp& p, const Poly& f) {
  require_dim(p.dim(), f.dim());
  Poly out(f.dim());
  for (const auto& [k, c] : p.terms()) {
    const MultiIndex& alpha = k.first;
    const MultiIndex& beta = k.second;
    for (const auto& [gamma, fc] : f.terms()) {
      if (!beta.divides(gamma)) continue;
      Rational w = c * fc;
      for (std::size_t i = 0; i < beta.dim(); ++i) w *= falling_factorial(gamma[i], beta[i]);
      out.add_term(alpha + (gamma - beta), w);
    }
  }
  return out;
}

WeylOp commutator(const WeylOp& p, const WeylOp& q) { return p * q - q * p; }

WeylOp substitute(const WeylOp& p, const std::vector<WeylOp>& x_images, const std::vector<WeylOp>& d_images) {
  const std::size_t dim = p.dim();
  if (x_images.size() != dim || d_images.size() != dim) throw std::invalid_argument("substitution image count mismatch");
  const std::size_t target_dim = x_images.empty() ? dim : x_images.front().dim();
  // Power caches, grown on demand.
  std::vector<std::vector<WeylOp>> xpow(dim), dpow(dim);
  auto power = [&](std::vector<WeylOp>& cache, const WeylOp& base, unsigned e) -> const WeylOp& {
    if (cache.empty()) cache.push_back(WeylOp::constant(target_dim, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  WeylOp out(target_dim);
  for (const auto& [k, c] : p.terms()) {
    WeylOp term = WeylOp::constant(target_dim, c);
    for (std::size_t i = 0; i < dim; ++i)
      if (k.first[i]) term = term * power(xpow[i], x_images[i], k.first[i]);
    for (std::size_t i = 0; i < dim; ++i)
      if (k.second[i]) term = term * power(dpow[i], d_images[i], k.second[i]);
    out += term;
  }
  return out;
}

WeylOp fourier(const WeylOp& p) {
  std::vector<WeylOp> xs, ds;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    xs.push_back(WeylOp::d(p.dim(), i));
    ds.push_back(-WeylOp::x(p.dim(), i));
  }
  return substitute(p, xs, ds);
}

WeylOp fourier_inverse(const WeylOp& p) {
  std::vector<WeylOp> xs, ds;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    xs.push_back(-WeylOp::d(p.dim(), i));
    ds.push_back(WeylOp::x(p.dim(), i));
  }
  return substitute(p, xs, ds);
}

WeylOp translate_x(const WeylOp& p, std::size_t axis, const Rational& shift) {
  if (axis >= p.dim()) throw std::invalid_argument("translation axis out of range");
  std::vector<WeylOp> xs, ds;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    WeylOp xi = WeylOp::x(p.dim(), i);
    if (i == axis) xi += WeylOp::constant(p.dim(), shift);
    xs.push_back(xi);
    ds.push_back(WeylOp::d(p.dim(), i));
  }
  return substitute(p, xs, ds);
}

WeylOp euler_operator(std::size_t dim) {
  WeylOp e(dim);
  for (std::size_t i = 0; i < dim; ++i) e.add_term(MultiIndex::unit(dim, i), MultiIndex::unit(dim, i), 1);
  return e;
}

}  // namespace weyl
