#pragma once

#include <map>
#include <vector>

#include "weyl/multi_index.hpp"
#include "weyl/poly.hpp"
#include "weyl/rational.hpp"

namespace weyl {

/// Pair of exponent vectors identifying one normal-form monomial. For a
/// WeylOp `first` holds the x-exponents and `second` the d-exponents; for a
/// RightForm the roles are swapped (d first, then x), following print order.
struct TermKey {
  MultiIndex first;
  MultiIndex second;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Descending graded-lex order on the concatenated exponent vector.
struct TermKeyOrder {
  bool operator()(const TermKey& a, const TermKey& b) const {
    auto ta = a.first.total() + a.second.total();
    auto tb = b.first.total() + b.second.total();
    if (ta != tb) return ta > tb;
    int c = compare_grlex_flat(a.first, b.first);
    if (c != 0) return c > 0;
    return compare_grlex_flat(a.second, b.second) > 0;
  }

 private:
  static int compare_grlex_flat(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
};

using TermMap = std::map<TermKey, Rational, TermKeyOrder>;

/// Element of the Weyl algebra A_d(Q) stored in left normal form
/// sum c_{ab} x^a d^b (every x to the left of every d).
class WeylOp {
 public:
  explicit WeylOp(std::size_t dim = 1);

  static WeylOp constant(std::size_t dim, const Rational& c);
  /// x_i, 0-based axis.
  static WeylOp x(std::size_t dim, std::size_t axis);
  /// d_i, 0-based axis.
  static WeylOp d(std::size_t dim, std::size_t axis);
  /// c x^xs d^ds
  static WeylOp monomial(const MultiIndex& xs, const MultiIndex& ds, const Rational& c = Rational(1));
  /// Multiplication operator by a polynomial.
  static WeylOp from_poly(const Poly& p);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// max |b| over stored terms; -1 for zero.
  long order() const;
  /// max |a| over stored terms; -1 for zero.
  long x_degree() const;
  Rational coefficient(const MultiIndex& xs, const MultiIndex& ds) const;

  void add_term(const MultiIndex& xs, const MultiIndex& ds, const Rational& c);

  WeylOp operator-() const;
  WeylOp& operator+=(const WeylOp& other);
  WeylOp& operator-=(const WeylOp& other);
  WeylOp& operator*=(const Rational& c);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(WeylOp a, const Rational& c) { return a *= c; }
  friend WeylOp operator*(const Rational& c, WeylOp a) { return a *= c; }
  /// Noncommutative product, see weyl_mul.
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  WeylOp pow(unsigned exponent) const;

 private:
  std::size_t dim_;
  TermMap terms_;
};

/// Same operator written as sum c_{ba} d^b x^a (every d to the left).
class RightForm {
 public:
  explicit RightForm(std::size_t dim = 1);

  std::size_t dim() const { return dim_; }
  /// Keys are (d-exponents, x-exponents).
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long order() const;
  Rational coefficient(const MultiIndex& ds, const MultiIndex& xs) const;

  void add_term(const MultiIndex& ds, const MultiIndex& xs, const Rational& c);
  void erase_if_x_degree_above(unsigned n);

  RightForm operator-() const;
  RightForm& operator+=(const RightForm& other);
  RightForm& operator-=(const RightForm& other);
  RightForm& operator*=(const Rational& c);
  friend RightForm operator+(RightForm a, const RightForm& b) { return a += b; }
  friend RightForm operator-(RightForm a, const RightForm& b) { return a -= b; }
  friend RightForm operator*(RightForm a, const Rational& c) { return a *= c; }
  friend bool operator==(const RightForm& a, const RightForm& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

 private:
  std::size_t dim_;
  TermMap terms_;
};

/// Product P*Q via componentwise Leibniz expansion
/// d^b x^g = sum_{r <= min(b,g)} C(b,r) g!/(g-r)! x^{g-r} d^{b-r}.
/// Throws std::invalid_argument on dimension mismatch.
WeylOp weyl_mul(const WeylOp& p, const WeylOp& q);

RightForm to_right_form(const WeylOp& p);
WeylOp from_right_form(const RightForm& r);

/// Natural action of A_d on Q[x_1..x_d].
Poly apply_to_poly(const WeylOp& p, const Poly& f);

/// [P, Q] = PQ - QP
WeylOp commutator(const WeylOp& p, const WeylOp& q);

/// Algebra endomorphism determined by x_i -> x_images[i], d_i -> d_images[i].
/// The caller is responsible for the images satisfying the defining relations.
WeylOp substitute(const WeylOp& p, const std::vector<WeylOp>& x_images, const std::vector<WeylOp>& d_images);

/// Fourier automorphism x_i -> d_i, d_i -> -x_i.
WeylOp fourier(const WeylOp& p);
/// Inverse Fourier automorphism x_i -> -d_i, d_i -> x_i.
WeylOp fourier_inverse(const WeylOp& p);
/// x_axis -> x_axis + shift, all d fixed. `axis` is 0-based.
WeylOp translate_x(const WeylOp& p, std::size_t axis, const Rational& shift);

/// Euler operator sum_i x_i d_i.
WeylOp euler_operator(std::size_t dim);

}  // namespace weyl
