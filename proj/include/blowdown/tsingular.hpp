#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "blowdown/config.hpp"
#include "blowdown/exactalg.hpp"

namespace blowdown {

using Coeffs = std::vector<long>;

/// Chain [b_1, ..., b_r] of rational curves with self-intersections -b_i,
/// optionally bound to curves of a configuration.
struct Chain {
  std::string name;
  Coeffs coeffs;
  std::vector<CurveId> curves;

  bool bound() const noexcept { return !curves.empty(); }
};

struct ClassT {
  Integer d, n, a;
  friend bool operator==(const ClassT&, const ClassT&) = default;
};

struct CyclicQuotientType {
  Integer p, q;
  bool rdp = false;               ///< all b_i = 2
  std::optional<ClassT> class_t;  ///< present for 1/(dn^2)(1, dna-1)

  bool is_class_t() const noexcept { return rdp || class_t.has_value(); }
};

/// p/q = b_1 - 1/(b_2 - 1/(... - 1/b_r)), in lowest terms. Throws InputError on
/// an empty chain or an entry below 2.
std::pair<Integer, Integer> hj_eval(std::span<const long> chain);
/// Inverse of hj_eval. Throws InputError unless 0 < q < p and gcd(p, q) = 1.
Coeffs hj_expand(const Integer& p, const Integer& q);

/// Word-size versions; nullopt / false on overflow. No validation.
std::optional<std::pair<std::int64_t, std::int64_t>> hj_eval_small(std::span<const long> chain);
/// Writes the expansion into out[0..len); false if it would exceed `cap`.
bool hj_expand_small(std::int64_t p, std::int64_t q, long* out, std::size_t cap, std::size_t& len);

CyclicQuotientType classify_class_t(std::span<const long> chain);

/// All class-T chains of length <= max_len (at most 12), sorted by length then
/// lexicographically. RDP chains [2,...,2] are included unless `include_rdp`
/// is false.
std::vector<Coeffs> wahl_enumerate(std::size_t max_len, bool include_rdp = true);

/// Intersection matrix: -b_i on the diagonal, 1 between neighbours.
IntMatrix chain_matrix(std::span<const long> chain);

struct BoundaryHomology {
  FinAbGroup group;
  std::vector<IntVector> meridians;  ///< class of the normal circle of u_j
  IntMatrix projection;
};

/// Cokernel of the chain matrix in the SNF basis; always cyclic of order p.
BoundaryHomology boundary_homology(std::span<const long> chain);

/// Z/n for class T, trivial for RDP. DomainError otherwise.
FinAbGroup milnor_h1(const CyclicQuotientType& t);

/// Z/p -> Z/n sending the canonical generator to the canonical generator.
GroupMap boundary_to_milnor(const CyclicQuotientType& t);

/// Violations of the binding of `chain` to `cfg` (self-intersections, genus,
/// consecutive curves meeting once, others disjoint).
std::vector<std::string> check_chain_binding(const Configuration& cfg, const Chain& chain);

/// Coefficients read off the bound curves.
Coeffs chain_coeffs(const Configuration& cfg, std::span<const CurveId> curves);

/// "7,3,2,2,2,2" or "[7,3,2,2,2,2]"; throws InputError on malformed input.
Coeffs parse_chain(const std::string& s);
std::string format_chain(std::span<const long> chain);

}  // namespace blowdown
