#pragma once

#include <map>
#include <string>

#include "weyl/multi_index.hpp"
#include "weyl/rational.hpp"

namespace weyl {

/// Sparse polynomial in Q[x_1, ..., x_d]. No zero coefficient is ever stored.
class Poly {
 public:
  using TermMap = std::map<MultiIndex, Rational, GrlexDescending>;

  explicit Poly(std::size_t dim = 1) : dim_(dim) {
    if (dim == 0 || dim > kMaxDim) throw std::invalid_argument("polynomial dimension out of range");
  }

  static Poly constant(std::size_t dim, const Rational& c);
  /// x_i, 0-based axis.
  static Poly variable(std::size_t dim, std::size_t axis);
  static Poly monomial(const MultiIndex& exps, const Rational& c = Rational(1));

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; -1 for the zero polynomial.
  long total_degree() const;
  Rational coefficient(const MultiIndex& exps) const;

  /// Adds c * x^exps, dropping the term if it cancels.
  void add_term(const MultiIndex& exps, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  Poly pow(unsigned exponent) const;
  /// Partial derivative along a 0-based axis.
  Poly derivative(std::size_t axis) const;

  /// Rendering with a single variable name for d == 1 (e.g. "t"), x1..xd otherwise.
  std::string to_string(const std::string& univariate_symbol = "x1") const;

 private:
  void check_dim(const Poly& other) const;

  std::size_t dim_;
  TermMap terms_;
};

}  // namespace weyl
