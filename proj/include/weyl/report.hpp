#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "weyl/checks.hpp"
#include "weyl/decomposition.hpp"
#include "weyl/ode_split.hpp"

namespace weyl {

/// Command report. Serialization is deterministic apart from `elapsed_ms`,
/// which lives under the top-level "timing" key.
struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<Check> checks;
  std::vector<std::string> text;  ///< human-readable lines for --format text
  double elapsed_ms = 0.0;

  bool verified() const { return all_pass(checks); }
};

nlohmann::json to_json(const Report& report, bool include_timing = true);
std::string render_text(const Report& report);

/// {"form": "left", "text": ..., "terms": [{"x": [...], "d": [...], "coeff": "p/q"}, ...]}
nlohmann::json op_json(const WeylOp& p);
/// Same schema with "form": "right"; terms are canonical class representatives.
nlohmann::json class_json(const QuotientClass& v);
nlohmann::json checks_json(const std::vector<Check>& checks);
nlohmann::json certificate_json(const DecompositionCertificate& cert);
nlohmann::json invariants_json(const InvariantBasis& basis);
nlohmann::json ode_split_json(const OdeSplit& split);
nlohmann::json cyclic_json(const CyclicResult& result);

}  // namespace weyl
