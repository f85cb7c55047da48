#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// Largest supported number of variables.
inline constexpr std::size_t kMaxDim = 8;

/// Exponent vector alpha = (alpha_1, ..., alpha_d) with inline storage.
class MultiIndex {
 public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : dim_(check_dim(dim)) {}
  MultiIndex(std::initializer_list<value_type> exps) : dim_(check_dim(exps.size())) {
    std::copy(exps.begin(), exps.end(), exps_.begin());
  }
  explicit MultiIndex(const std::vector<value_type>& exps) : dim_(check_dim(exps.size())) {
    std::copy(exps.begin(), exps.end(), exps_.begin());
  }

  /// e_i: the unit vector along axis i (0-based).
  static MultiIndex unit(std::size_t dim, std::size_t axis) {
    MultiIndex m(dim);
    m[axis] = 1;
    return m;
  }

  std::size_t dim() const { return dim_; }
  value_type operator[](std::size_t i) const { return exps_[i]; }
  value_type& operator[](std::size_t i) { return exps_[i]; }

  const value_type* begin() const { return exps_.data(); }
  const value_type* end() const { return exps_.data() + dim_; }

  /// |alpha|
  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto e : *this) s += e;
    return s;
  }
  bool is_zero() const { return total() == 0; }

  /// alpha!
  Rational factorial() const {
    Rational r(1);
    for (auto e : *this) r *= weyl::factorial(e);
    return r;
  }

  /// Componentwise alpha <= beta.
  bool divides(const MultiIndex& other) const {
    for (std::size_t i = 0; i < dim_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  MultiIndex operator+(const MultiIndex& other) const {
    same_dim(other);
    MultiIndex r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r.exps_[i] = exps_[i] + other.exps_[i];
    return r;
  }

  /// Componentwise difference; requires other <= *this.
  MultiIndex operator-(const MultiIndex& other) const {
    same_dim(other);
    if (!other.divides(*this)) throw std::domain_error("multi-index difference would be negative");
    MultiIndex r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r.exps_[i] = exps_[i] - other.exps_[i];
    return r;
  }

  std::vector<value_type> to_vector() const { return {begin(), end()}; }
  std::string to_string() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.dim_ == b.dim_ && std::equal(a.begin(), a.end(), b.begin());
  }

 private:
  static std::size_t check_dim(std::size_t dim) {
    if (dim > kMaxDim) throw std::invalid_argument("dimension exceeds " + std::to_string(kMaxDim));
    return dim;
  }
  void same_dim(const MultiIndex& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("multi-index dimension mismatch");
  }

  std::array<value_type, kMaxDim> exps_{};
  std::size_t dim_ = 0;
};

/// Graded lexicographic comparison: total degree first, then lex with
/// x_1 most significant. Returns <0, 0, >0.
inline int compare_grlex(const MultiIndex& a, const MultiIndex& b) {
  auto ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb ? -1 : 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

/// Map ordering that iterates in descending graded-lex order.
struct GrlexDescending {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return compare_grlex(a, b) > 0; }
};

/// All multi-indices of dimension d with |alpha| == total, in descending lex order.
std::vector<MultiIndex> monomials_of_degree(std::size_t dim, unsigned total);
/// All multi-indices with |alpha| <= bound, ascending degree, descending lex within a degree.
std::vector<MultiIndex> monomials_up_to(std::size_t dim, unsigned bound);

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const noexcept {
    std::size_t h = m.dim();
    for (auto e : m) h = h * 1000003u ^ std::hash<std::uint32_t>{}(e);
    return h;
  }
};

}  // namespace weyl
