#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "weyl/report.hpp"

namespace weyl {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool exact = false;  ///< every exact comparison held
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();  ///< deterministic payload

  bool pass() const { return exact && seconds < limit_seconds; }
};

struct AcceptanceOptions {
  /// Run criterion 12 (repeats 1-11 and compares the serialized payloads).
  bool determinism = true;
};

/// Runs the acceptance criteria in order; 1-11 always, 12 if requested.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// Individual criteria, exposed for targeted tests.
CriterionResult criterion_leibniz_faithfulness();
CriterionResult criterion_shift_identity();
CriterionResult criterion_pochhammer_identity();
CriterionResult criterion_ideal_membership();
CriterionResult criterion_invariant_dimension();
CriterionResult criterion_certificates();
CriterionResult criterion_psi_bijectivity();
CriterionResult criterion_example_reproduction();
CriterionResult criterion_ode_splitting();
CriterionResult criterion_cyclic_generator();
CriterionResult criterion_closed_form_audit();

/// "selftest" report: one check per criterion.
Report acceptance_report(const std::vector<CriterionResult>& results);
/// One "[PASS] 1 name (0.12 s < 5 s): detail" line per criterion.
std::string acceptance_lines(const std::vector<CriterionResult>& results);

}  // namespace weyl
