#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weyl/checks.hpp"
#include "weyl/quotient.hpp"

namespace weyl {

/// Rising factorial (a)_m = a (a+1) ... (a+m-1) of an operator; (a)_0 = 1.
WeylOp rising_factorial(const WeylOp& a, unsigned m);

/// Q_{n,d} = prod_i (1 + d_i x_i)_n.
struct PochhammerOp {
  std::size_t dim = 1;
  unsigned n = 0;
  WeylOp op;
};

PochhammerOp build_pochhammer(std::size_t dim, unsigned n);

/// Generator Q_{n-|a|,d} X^a of the summand indexed by a, together with its
/// class in D / D m^{n+1}.
struct GeneratorEntry {
  MultiIndex alpha;
  unsigned layer = 0;  ///< |alpha|
  WeylOp generator_op;
  QuotientClass m_class;
  Rational euler_weight;
};

/// Verified data of the isomorphism
///   psi : (+)_{|a| <= n} D/Dm  ->  D/Dm^{n+1},  (P_a) |-> sum_a P_a Q_{n-|a|,d} X^a.
struct DecompositionCertificate {
  QuotientSpec spec;
  std::vector<GeneratorEntry> entries;  ///< ascending |a|, descending lex within a layer
  std::size_t invariant_dimension = 0;
  bool invariants_stabilized = false;
  /// well_defined, nonzero, independent, dimension_match, euler_weights
  std::vector<Check> checks;

  bool verified() const { return all_pass(checks); }
  std::optional<std::string> first_failure() const;
  const GeneratorEntry& entry(const MultiIndex& alpha) const;
};

DecompositionCertificate build_certificate(const QuotientSpec& spec);

/// Weight w with reduce(generator_op * Euler) == w * m_class. Throws
/// std::logic_error when the class is not an eigenvector.
Rational euler_check(const GeneratorEntry& entry, const QuotientSpec& spec);

/// Component operators P_a keyed by a.
using Components = std::map<MultiIndex, WeylOp, GrlexDescending>;

/// sum_a P_a . m_a in D / D m^{n+1}. Keys must satisfy |a| <= n.
QuotientClass psi_apply(const Components& components, const DecompositionCertificate& cert);

/// Constant-coefficient components P_a in Q[d_1..d_d] with psi_apply(result) == v.
/// Solves over { d^g : |g| <= B } per component starting from
/// B = order(v) + d n and raising B until consistent; gives up with
/// std::runtime_error after `max_escalations` raises.
Components psi_invert(const QuotientClass& v, const DecompositionCertificate& cert, unsigned max_escalations = 8);

// ---------------------------------------------------------------- cyclic

struct CyclicOptions {
  /// Largest total degree tried for the witnesses x^delta and d^gamma.
  unsigned monomial_bound = 16;
  /// Largest window s (operators x^a d^b with |a|, |b| <= s) used when
  /// recovering the unit vectors from the generator.
  unsigned recovery_bound = 10;
};

/// One induction step: g_new = g_old + P m0 where Q g_old = 0 and Q P m0 != 0.
struct InductionStep {
  std::size_t summand = 0;
  MultiIndex piece_alpha;  ///< simple piece m0 = m_alpha of that summand
  MultiIndex annihilator;  ///< Q = x^delta
  MultiIndex companion;    ///< P = d^gamma
};

struct CyclicResult {
  std::vector<QuotientSpec> summands;
  std::vector<QuotientClass> generator;  ///< one class per summand
  std::vector<InductionStep> steps;
  /// recovery[k] * generator == unit vector of summand k (class of 1 there, 0 elsewhere).
  std::vector<WeylOp> recovery;
  std::size_t invariant_dimension = 0;
  std::size_t expected_dimension = 0;
  std::vector<Check> checks;

  bool verified() const { return all_pass(checks); }
};

/// Left action on a direct-sum element, componentwise.
std::vector<QuotientClass> act_on_sum(const WeylOp& p, const std::vector<QuotientClass>& element);

/// Cyclic generator of (+)_k D / D m^{n_k+1}, built by the length induction
/// over simple pieces. Throws std::runtime_error when the monomial search is
/// exhausted.
CyclicResult cyclic_generator(const std::vector<QuotientSpec>& summands, const CyclicOptions& options = {});

}  // namespace weyl
