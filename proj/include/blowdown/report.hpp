#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "blowdown/scenario.hpp"

namespace blowdown {

struct CheckResult {
  std::string field;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json actual;
  bool pass = false;
  std::string detail;      ///< first differing path when the check fails
  Provenance provenance = Provenance::Text;  ///< least trusted datum the value depends on
};

struct Report {
  std::string scenario;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::vector<CheckResult> checks;
  std::string error_stage;  ///< empty when every stage ran
  std::string error;
  bool input_error = false;

  bool passed() const;
  /// 0 pass, 1 mismatch or pipeline error, 2 input error.
  int exit_code() const;
};

/// Replays blow-ups, validates, classifies chains, computes boundary and
/// Milnor homology, discrepancies, pullback degrees, K^2, H1(Z0) and the
/// Mayer-Vietoris group, then compares against the expected block.
Report run(const Scenario& s);

/// Runs independent scenarios in parallel; output order follows input order.
std::vector<Report> run_all(std::span<const Scenario> scenarios);

/// A report for a scenario that failed to load.
Report input_failure(const std::string& label, const std::string& message);

nlohmann::ordered_json report_json(const Report& r);
/// Multi-line summary; the last line is "h1_blowdown: <group>".
std::string report_text(const Report& r, bool color = false);

/// Whether every key of `expected` matches `actual`: objects compare on the
/// expected keys only, arrays elementwise with equal length, scalars exactly.
bool json_subset_match(const nlohmann::ordered_json& expected, const nlohmann::ordered_json& actual,
                       const std::string& path, std::string& detail);

}  // namespace blowdown
