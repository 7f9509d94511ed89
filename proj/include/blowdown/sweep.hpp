#pragma once

// Exhaustive and randomised property sweeps. Each sweep has a serial
// reference loop and an OpenMP loop; both report the same counts and the same
// (lowest-index) first failure.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blowdown/exactalg.hpp"
#include "blowdown/tsingular.hpp"

namespace blowdown {

enum class Exec { Serial, Parallel };

struct SweepResult {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool ok() const noexcept { return failures == 0; }
  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// hj_expand(hj_eval(c)) == c for every chain of length <= max_len with
/// entries in [2, max_entry].
SweepResult hj_roundtrip_sweep(std::size_t max_len, long max_entry, Exec exec);

/// classify_class_t agrees with membership in wahl_enumerate(max_len) on every
/// chain of length <= max_len with entries in [2, max_entry], and every
/// enumerated chain within that box is met.
SweepResult classify_vs_wahl_sweep(std::size_t max_len, long max_entry, Exec exec);

/// |coker(chain matrix)| == hj numerator.
SweepResult coker_order_sweep(std::span<const Coeffs> chains, Exec exec);

/// U A V == S, U U^-1 == I, |det U| == |det V| == 1, S diagonal, nonnegative,
/// with a divisibility chain.
SweepResult snf_sweep(std::span<const IntMatrix> matrices, Exec exec);

/// (K + sum c_i u_i).u_j == 0 exactly; coefficients in [0, 1), positive unless RDP.
SweepResult discrepancy_sweep(std::span<const Coeffs> chains, Exec exec);

std::vector<Coeffs> random_chains(std::size_t count, std::size_t max_len, long max_entry,
                                  std::uint64_t seed);
/// Random matrices of size between 1x1 and max_dim x max_dim, entries in
/// [-max_abs, max_abs].
std::vector<IntMatrix> random_matrices(std::size_t count, std::size_t max_dim, long max_abs,
                                       std::uint64_t seed);

/// Number of chains of length <= max_len with entries in [2, max_entry].
std::uint64_t chain_box_size(std::size_t max_len, long max_entry);

}  // namespace blowdown
