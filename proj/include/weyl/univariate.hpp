#pragma once

#include <utility>
#include <vector>

#include "weyl/poly.hpp"

namespace weyl {

// Univariate algorithms. Inputs are Poly values of dimension 1; the single
// variable is printed as "t" by the frontend.

/// Builds c_0 + c_1 t + ... from coefficients in ascending degree.
Poly univariate(const std::vector<Rational>& ascending);
/// t - a
Poly linear_factor(const Rational& root);

/// Degree, -1 for zero.
long degree(const Poly& p);
Rational leading_coefficient(const Poly& p);
Poly monic(const Poly& p);

struct DivMod {
  Poly quotient;
  Poly remainder;
};
/// Euclidean division f = q g + r with deg r < deg g. Throws on g == 0.
DivMod divmod(const Poly& f, const Poly& g);

struct BezoutResult {
  Poly gcd;  ///< monic
  Poly u;
  Poly v;
};
/// Extended Euclid: u f + v g = gcd(f, g). Throws std::invalid_argument if both are zero.
BezoutResult bezout(const Poly& f, const Poly& g);
Poly gcd(const Poly& f, const Poly& g);

struct SquarefreeFactor {
  Poly factor;  ///< monic, squarefree
  unsigned multiplicity;
};
/// Yun's squarefree decomposition, ordered by increasing multiplicity.
/// The product of factor^multiplicity equals monic(p). Throws on p == 0.
std::vector<SquarefreeFactor> yun_squarefree(const Poly& p);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Poly& p);

/// Product of factor^multiplicity.
Poly expand_factors(const std::vector<SquarefreeFactor>& factors);

}  // namespace weyl
