#pragma once

#include <optional>
#include <vector>

#include "weyl/checks.hpp"
#include "weyl/univariate.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

// Constant-coefficient operators P(d) in A_1(Q). Univariate polynomials in
// the symbol t stand for polynomials in d.

/// P(t) -> P(d) as an element of A_1.
WeylOp constcoeff_operator(const Poly& p);

/// Canonical class of W modulo A_1 P(d): every d-coefficient of the left
/// normal form is reduced modulo P. Throws std::invalid_argument for constant P.
WeylOp reduce_mod_constcoeff(const WeylOp& w, const Poly& p);

struct ConstCoeffSpec {
  Poly p{1};
  /// Pairwise coprime monic factors q_i with multiplicities e_i.
  std::vector<SquarefreeFactor> factors;
};

/// Validates a user factor list: product equals P up to a unit, pairwise coprime.
ConstCoeffSpec make_constcoeff_spec(const Poly& p, std::vector<SquarefreeFactor> factors);
/// Squarefree decomposition with every rational root split off as a linear factor.
ConstCoeffSpec default_factorization(const Poly& p);

struct PrimePowerComponent {
  Poly q{1};
  unsigned multiplicity = 1;
  /// e_i mod A_1 P, with sum e_i == 1 and q^e e_i == 0.
  WeylOp idempotent;
  /// Present for linear q: e simple generators mod A_1 q^e, each killed by q.
  std::optional<std::vector<WeylOp>> linear_split;
  /// linear_split transported into A_1 / A_1 P by right multiplication with e_i.
  std::vector<WeylOp> embedded_split;
};

struct OdeSplit {
  ConstCoeffSpec spec;
  std::vector<PrimePowerComponent> components;
  std::vector<Check> transcript;

  bool verified() const { return all_pass(transcript); }
  /// Simple generators produced (linear components) plus unsplit nonlinear blocks.
  std::size_t simple_count() const;
  std::size_t unsplit_blocks() const;
};

/// CRT idempotents from Bezout cofactors of (q_i^{e_i}, P / q_i^{e_i}).
OdeSplit crt_split(const ConstCoeffSpec& spec);

/// Simple generators of A_1 / A_1 q^e for q = d - a, obtained by pulling the
/// Pochhammer generators of D / D x^e back along x -> a - d, d -> x.
/// Throws std::invalid_argument for nonlinear q.
std::vector<WeylOp> split_prime_power_linear(const Poly& q, unsigned multiplicity);

OdeSplit ode_split(const Poly& p, std::optional<std::vector<SquarefreeFactor>> user_factors = std::nullopt);

}  // namespace weyl
