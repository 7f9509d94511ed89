#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blowdown/exactalg.hpp"

namespace blowdown {

using CurveId = int;
using PointId = int;

enum class Origin { Given, Exceptional };

/// Where a datum comes from. Ordered from most to least trusted.
enum class Provenance { Text = 0, Asserted = 1, Figure = 2 };

const char* to_string(Origin o);
const char* to_string(Provenance p);
Provenance parse_provenance(const std::string& s);
inline Provenance worst(Provenance a, Provenance b) { return a < b ? b : a; }

struct Curve {
  CurveId id = 0;
  std::string name;
  long genus = 0;
  long self_int = 0;
  long k_degree = 0;  ///< K.C, kept in step with adjunction
  Origin origin = Origin::Given;
  int transforms = 0;  ///< number of blow-ups this curve passed through a centre of
};

struct Branch {
  CurveId curve = 0;
  long multiplicity = 1;
};

struct IntersectionPoint {
  PointId id = 0;
  std::string name;
  std::vector<Branch> branches;
  Provenance provenance = Provenance::Text;
  std::string citation;
};

struct BlowupRecord {
  std::string point;
  CurveId exceptional = 0;
  std::vector<Branch> branches;
  Provenance provenance = Provenance::Text;
};

class Configuration {
 public:
  Configuration() = default;
  Configuration(std::string surface, long k2, long b2, FinAbGroup h1_ambient);

  const std::string& surface() const noexcept { return surface_; }
  long k2() const noexcept { return k2_; }
  long b2() const noexcept { return b2_; }
  long initial_k2() const noexcept { return initial_k2_; }
  long initial_b2() const noexcept { return initial_b2_; }
  const FinAbGroup& h1_ambient() const noexcept { return h1_ambient_; }

  /// K.C is filled in from adjunction.
  CurveId add_curve(std::string name, long genus, long self_int, Origin origin = Origin::Given);
  /// Throws InputError for unknown curves, duplicate names or multiplicity < 1.
  PointId add_point(std::string name, std::vector<Branch> branches,
                    Provenance provenance = Provenance::Text, std::string citation = {});

  const Curve& curve(CurveId id) const;
  const IntersectionPoint& point(PointId id) const;
  std::optional<CurveId> find_curve(const std::string& name) const;
  std::optional<PointId> find_point(const std::string& name) const;
  /// As find_curve, but throws InputError naming the curve.
  CurveId curve_id(const std::string& name) const;
  PointId point_id(const std::string& name) const;

  const std::map<CurveId, Curve>& curves() const noexcept { return curves_; }
  const std::map<PointId, IntersectionPoint>& points() const noexcept { return points_; }
  const std::vector<BlowupRecord>& history() const noexcept { return history_; }

  /// Direct access for fixtures that need to corrupt a configuration.
  std::map<CurveId, Curve>& mutable_curves() noexcept { return curves_; }
  std::map<PointId, IntersectionPoint>& mutable_points() noexcept { return points_; }

 private:
  friend struct BlowupAccess;

  std::string surface_;
  long k2_ = 0;
  long b2_ = 0;
  long initial_k2_ = 0;
  long initial_b2_ = 0;
  FinAbGroup h1_ambient_;
  std::map<CurveId, Curve> curves_;
  std::map<PointId, IntersectionPoint> points_;
  std::vector<BlowupRecord> history_;
  CurveId next_curve_ = 1;
  PointId next_point_ = 1;
};

struct PointRef {
  PointId point = 0;
};

/// A point not yet recorded: free on one curve, or a new crossing of two.
struct FreshPoint {
  std::vector<Branch> branches;
  Provenance provenance = Provenance::Asserted;
  std::string citation;
};

using PointSpec = std::variant<PointRef, FreshPoint>;

struct BlowupResult {
  Configuration cfg;
  CurveId exceptional = 0;
};

/// Blows up `p`. A curve C of multiplicity m at p (summed over its branches)
/// loses m^2 of self-intersection and m(m-1)/2 of arithmetic genus. Each branch
/// becomes one point "<exceptional>:<C>" on the exceptional curve, with a "#k"
/// suffix when C has several. Empty name picks "e<k>".
BlowupResult blow_up(const Configuration& cfg, const PointSpec& p, std::string exceptional_name = {});

long intersection_number(const Configuration& cfg, CurveId a, CurveId b);
long canonical_degree(const Configuration& cfg, CurveId c);

/// Human-readable invariant violations; empty when the configuration is sound.
std::vector<std::string> validate(const Configuration& cfg);

/// Dual graph: nodes labelled name/self-intersection, edges labelled with the
/// intersection number when it exceeds one.
std::string to_dot(const Configuration& cfg);

}  // namespace blowdown
