#include "weyl/poly.hpp"

#include <sstream>

namespace weyl {

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) s += ",";
    s += std::to_string(exps_[i]);
  }
  return s + ")";
}

namespace {

void fill_degree(std::size_t dim, std::size_t axis, unsigned remaining, MultiIndex& cur,
                 std::vector<MultiIndex>& out) {
  if (axis + 1 == dim) {
    cur[axis] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[axis] = e;
    fill_degree(dim, axis + 1, remaining - e, cur, out);
  }
  cur[axis] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t dim, unsigned total) {
  std::vector<MultiIndex> out;
  MultiIndex cur(dim);
  fill_degree(dim, 0, total, cur, out);
  return out;
}

std::vector<MultiIndex> monomials_up_to(std::size_t dim, unsigned bound) {
  std::vector<MultiIndex> out;
  for (unsigned t = 0; t <= bound; ++t) {
    auto layer = monomials_of_degree(dim, t);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Poly Poly::constant(std::size_t dim, const Rational& c) {
  Poly p(dim);
  p.add_term(MultiIndex(dim), c);
  return p;
}

Poly Poly::variable(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw std::invalid_argument("variable axis out of range");
  return monomial(MultiIndex::unit(dim, axis));
}

Poly Poly::monomial(const MultiIndex& exps, const Rational& c) {
  Poly p(exps.dim());
  p.add_term(exps, c);
  return p;
}

long Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(terms_.begin()->first.total());
}

Rational Poly::coefficient(const MultiIndex& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const MultiIndex& exps, const Rational& c) {
  if (exps.dim() != dim_) throw std::invalid_argument("polynomial dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_dim(const Poly& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("polynomial dimension mismatch");
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [_, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  check_dim(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_dim(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_dim(b);
  Poly r(a.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(dim_, 1);
  Poly base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t axis) const {
  if (axis >= dim_) throw std::invalid_argument("derivative axis out of range");
  Poly r(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    MultiIndex lowered = e;
    lowered[axis] -= 1;
    r.add_term(lowered, c * Rational(static_cast<long>(e[axis])));
  }
  return r;
}

std::string Poly::to_string(const std::string& univariate_symbol) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += dim_ == 1 ? univariate_symbol : "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag;
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << mag << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace weyl
