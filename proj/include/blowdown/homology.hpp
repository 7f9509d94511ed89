#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blowdown/config.hpp"
#include "blowdown/exactalg.hpp"
#include "blowdown/tsingular.hpp"

namespace blowdown {

/// Direct sum of the boundary groups of the chains, one cyclic coordinate per
/// chain, in chain order.
struct BoundaryGroup {
  std::vector<FinAbGroup> summands;
  IntVector moduli;
  std::vector<std::vector<IntVector>> meridians;  ///< [chain][position]

  std::size_t size() const noexcept { return moduli.size(); }
  Integer order() const;
  FinAbGroup canonical() const;
  IntVector reduce(IntVector x) const;
  /// "Z/72 ⊕ Z/4 ⊕ Z/4", summands in chain order.
  std::string to_string() const;
};

/// A curve, a formal combination of curves, or a class given directly by its
/// intersection numbers with chain curves.
struct RelationClass {
  std::string name;
  std::map<CurveId, long> combination;
  std::optional<std::map<CurveId, long>> intersections;
  Provenance provenance = Provenance::Text;
};

BoundaryGroup boundary_group(std::span<const Chain> chains);

/// sum_j (class.u_j) meridian(u_j), reduced.
IntVector boundary_image(const Configuration& cfg, std::span<const Chain> chains,
                         const BoundaryGroup& bg, const RelationClass& cls);

/// The class of a single curve. Its provenance is the worst provenance of the
/// points where it meets chain curves.
RelationClass curve_class(const Configuration& cfg, std::span<const Chain> chains, CurveId c);

struct PartialImage {
  IntVector moduli;
  std::vector<IntVector> generators;

  bool contains(std::span<const Integer> x) const;
  /// |B / image| and its canonical form.
  Integer index() const;
  FinAbGroup quotient() const;
  Integer order() const;
};

PartialImage partial_image_subgroup(const Configuration& cfg, std::span<const Chain> chains,
                                    const BoundaryGroup& bg, std::span<const RelationClass> classes);

/// multiple * (lift of ambient generator) = boundary element.
struct LiftRelation {
  std::string name;
  std::string generator;
  Integer multiple;
  IntVector boundary_element;
  std::string citation;
};

struct Z0Result {
  Integer order;
  std::optional<FinAbGroup> group;     ///< set only when declared relations fix it
  std::vector<FinAbGroup> candidates;  ///< every extension group of that order, sorted
  PresentedGroup presentation;         ///< boundary generators g1..gk, then ambient lifts
  std::string basis_note;
  bool candidates_complete = true;
};

/// Order |B / image| * |H1(ambient)|; the group itself when `declared` pins
/// every ambient lift, otherwise the candidate set. Throws ConsistencyError if
/// the declared relations give a different order, InputError for unknown
/// generator names or a non-finite ambient group.
Z0Result h1_z0(const BoundaryGroup& bg, const PartialImage& image, const FinAbGroup& h1_ambient,
               const std::vector<std::string>& ambient_names, std::span<const LiftRelation> declared);

/// Cokernel of (+) H1(dM_i) -> z0 (+) (+) H1(M_i), canonical generator i going
/// to (image_in_z0[i], boundary_to_milnor_i(1)).
FinAbGroup mv_blowdown_h1(const PresentedGroup& z0, std::span<const GroupMap> to_milnor,
                          std::span<const IntVector> image_in_z0);

}  // namespace blowdown
