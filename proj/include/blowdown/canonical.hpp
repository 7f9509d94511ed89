#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "blowdown/config.hpp"
#include "blowdown/tsingular.hpp"

namespace blowdown {

using QDivisor = std::map<CurveId, Rational>;

/// Solves sum_i c_i (u_i.u_j) = -K.u_j over the bound chain curves.
QDivisor discrepancies(const Configuration& cfg, const Chain& chain);
/// Same system for a bare chain, with K.u_j = b_j - 2.
RatVector discrepancies(std::span<const long> chain);

struct PullbackDegree {
  Rational value;
  bool chain_member = false;  ///< value is 0 by construction
};

/// K.c + sum over chain curves u of c_u (u.c).
PullbackDegree pullback_degree(const Configuration& cfg, std::span<const Chain> chains, CurveId c);
/// Formal integer combination of curves.
PullbackDegree pullback_degree(const Configuration& cfg, std::span<const Chain> chains,
                               const std::map<CurveId, long>& combination);

enum class Sign { Negative, Zero, Positive };
const char* to_string(Sign s);
Sign sign_of(const Rational& r);

struct NefEntry {
  CurveId curve = 0;
  std::string name;
  Rational degree;
  Sign sign = Sign::Zero;
  bool chain_member = false;
};

struct NefReport {
  std::vector<NefEntry> entries;
  bool nef_on_list = true;     ///< every listed degree >= 0
  bool strict_on_list = true;  ///< every listed non-chain degree > 0
  /// Every discrepancy coefficient is > 0 (a coefficient-positivity
  /// certificate, not a global nefness claim).
  bool coefficients_positive = true;
};

NefReport nef_report(const Configuration& cfg, std::span<const Chain> chains,
                     std::span<const CurveId> test_curves);

/// K^2 + sum over chains of sum_i c_i (K.u_i). Throws InputError when two
/// chains share or meet a curve.
Rational k_squared_contracted(const Configuration& cfg, std::span<const Chain> chains);

std::string to_string(const Rational& r);

}  // namespace blowdown
