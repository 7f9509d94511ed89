#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blowdown/config.hpp"
#include "blowdown/tsingular.hpp"

namespace blowdown {

/// Scenario file format, version 1. See README.md for the schema.
struct Scenario {
  struct CurveSpec {
    std::string name;
    long genus = 0;
    long self_int = 0;
  };
  struct PointSpecData {
    std::string name;
    std::vector<std::pair<std::string, long>> branches;
    Provenance provenance = Provenance::Text;
    std::string citation;
  };
  struct BlowupSpec {
    std::string exceptional;
    std::optional<std::string> point;  ///< existing point, or
    std::vector<std::string> on;       ///< a fresh point on these curves
    Provenance provenance = Provenance::Asserted;  ///< text by default for an existing point
    std::string citation;
  };
  struct ChainSpec {
    std::string name;
    std::vector<std::string> curves;
    std::optional<Coeffs> coeffs;
  };
  struct ClassSpec {
    std::string name;
    std::map<std::string, long> combination;
    std::optional<std::map<std::string, long>> intersections;
    Provenance provenance = Provenance::Text;
    std::string citation;
  };
  struct RelationSpec {
    std::string name;
    std::string generator;
    long multiple = 0;
    std::optional<std::string> meridian;  ///< equals the meridian of this chain curve, or
    std::optional<std::vector<long>> element;  ///< an explicit boundary element (none: zero)
    std::string citation;
  };
  struct CertificateSpec {
    std::string name;
    std::vector<long> element;
  };
  struct AnnotationSpec {
    std::string claim;
    std::vector<std::string> conditional_on;
  };

  std::string name;
  std::string description;
  std::string surface;
  long k2 = 0;
  long b2 = 0;
  std::vector<long> h1;
  std::vector<std::string> h1_generators;
  std::vector<CurveSpec> curves;
  std::vector<PointSpecData> points;
  std::vector<BlowupSpec> blowups;
  std::vector<ChainSpec> chains;
  std::optional<std::vector<ClassSpec>> h2_generators;  ///< none: every curve
  std::vector<RelationSpec> declared_relations;
  std::vector<CertificateSpec> membership_certificates;
  std::vector<std::string> test_curves;
  std::vector<std::string> assumptions;
  std::vector<AnnotationSpec> annotations;
  nlohmann::ordered_json expected = nlohmann::ordered_json::object();
};

/// Annotation names a conditional claim may depend on.
const std::vector<std::string>& certificate_names();

/// Parses and validates a scenario; errors are InputError with a JSON path.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// The ambient configuration with the scenario's blow-ups replayed.
Configuration build_configuration(const Scenario& s);

/// Chains bound to the curves of `cfg`, coefficients read off the curves.
std::vector<Chain> bind_chains(const Scenario& s, const Configuration& cfg);

}  // namespace blowdown
