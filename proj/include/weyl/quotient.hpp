#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "weyl/linalg.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

/// The cyclic module D / D m^{n+1} with m = (x_1, ..., x_d).
struct QuotientSpec {
  std::size_t dim = 1;
  unsigned n = 0;

  QuotientSpec() = default;
  QuotientSpec(std::size_t d, unsigned power) : dim(d), n(power) {
    if (d == 0 || d > kMaxDim) throw std::invalid_argument("quotient dimension out of range");
  }
  friend bool operator==(const QuotientSpec&, const QuotientSpec&) = default;
};

/// C(n+d, d): number of monomials of degree <= n in d variables.
std::size_t expected_invariant_dimension(const QuotientSpec& spec);

/// Element of D / D m^{n+1}, held as its canonical representative: the right
/// normal form sum d^b a_b(x) with every x-monomial of degree <= n.
class QuotientClass {
 public:
  explicit QuotientClass(const QuotientSpec& spec);
  /// Truncates `rep` to x-degree <= n.
  QuotientClass(const QuotientSpec& spec, RightForm rep);

  const QuotientSpec& spec() const { return spec_; }
  const RightForm& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  /// The representative as a left-normal-form operator.
  WeylOp lift() const { return from_right_form(rep_); }

  QuotientClass operator-() const { return QuotientClass(spec_, -rep_); }
  QuotientClass& operator+=(const QuotientClass& other);
  QuotientClass& operator-=(const QuotientClass& other);
  QuotientClass& operator*=(const Rational& c);
  friend QuotientClass operator+(QuotientClass a, const QuotientClass& b) { return a += b; }
  friend QuotientClass operator-(QuotientClass a, const QuotientClass& b) { return a -= b; }
  friend QuotientClass operator*(QuotientClass a, const Rational& c) { return a *= c; }
  friend QuotientClass operator*(const Rational& c, QuotientClass a) { return a *= c; }
  friend bool operator==(const QuotientClass& a, const QuotientClass& b) {
    return a.spec_ == b.spec_ && a.rep_ == b.rep_;
  }

 private:
  void check_spec(const QuotientClass& other) const;

  QuotientSpec spec_;
  RightForm rep_;
};

/// Canonical class of P modulo D m^{n+1}: right normal form, then drop every
/// term whose x-degree exceeds n.
QuotientClass reduce_mod_mpow(const WeylOp& p, const QuotientSpec& spec);
bool is_in_ideal(const WeylOp& p, const QuotientSpec& spec);
/// Left action P . v computed on any lift of v.
QuotientClass act_on_class(const WeylOp& p, const QuotientClass& v);
/// d^gamma . v; in right normal form this only shifts the d-exponents.
QuotientClass left_multiply_d(const MultiIndex& gamma, const QuotientClass& v);

/// Assigns dense coordinates to normal-form monomials on first sight, so that
/// classes can be fed to the sparse solver.
class TermIndexer {
 public:
  std::size_t index(const TermKey& key);
  std::optional<std::size_t> find(const TermKey& key) const;
  std::size_t size() const { return keys_.size(); }
  const TermKey& key(std::size_t i) const { return keys_[i]; }

  SparseVector coordinates(const RightForm& r) { return coordinates(r.terms()); }
  SparseVector coordinates(const TermMap& terms);

 private:
  std::map<TermKey, std::size_t, TermKeyOrder> ids_;
  std::vector<TermKey> keys_;
};

/// Q-linear independence of a family of classes (rank == size).
bool classes_independent(const std::vector<QuotientClass>& classes);
/// Rank of the span of a family of classes.
std::size_t classes_rank(const std::vector<QuotientClass>& classes);

struct InvariantBasis {
  QuotientSpec spec;
  std::vector<QuotientClass> vectors;
  unsigned order_bound = 0;
  /// Dimension did not grow when the bound was raised by one.
  bool stabilized = true;
  /// dim < C(n+d, d): the bound is too small.
  bool below_expected = false;

  std::size_t dimension() const { return vectors.size(); }
};

/// Basis of the m-invariant classes with d-order <= order_bound, found by
/// solving x_i . v = 0 (all i) for an unknown v over the monomial basis
/// { d^b x^a : |b| <= order_bound, |a| <= n }.
InvariantBasis invariants_solver(const QuotientSpec& spec, unsigned order_bound);
/// invariants_solver at bound d*n, with a +1 probe filling `stabilized`.
InvariantBasis invariants_auto(const QuotientSpec& spec);

}  // namespace weyl
