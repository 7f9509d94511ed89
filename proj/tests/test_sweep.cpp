#include <doctest.h>

#include "blowdown/sweep.hpp"
#include "oracles.hpp"

using namespace blowdown;

TEST_SUITE("sweep") {

TEST_CASE("box size matches enumeration") {
  CHECK(chain_box_size(3, 5) == oracle::all_chains(3, 5).size());
  CHECK(chain_box_size(1, 2) == 1);
}

TEST_CASE("serial and parallel sweeps agree") {
  CHECK(hj_roundtrip_sweep(4, 6, Exec::Serial) == hj_roundtrip_sweep(4, 6, Exec::Parallel));
  CHECK(hj_roundtrip_sweep(4, 6, Exec::Serial).checked == chain_box_size(4, 6));
  const auto a = classify_vs_wahl_sweep(4, 8, Exec::Serial);
  CHECK(a.ok());
  CHECK(a == classify_vs_wahl_sweep(4, 8, Exec::Parallel));
  const auto chains = random_chains(50, 6, 7, 9);
  CHECK(coker_order_sweep(chains, Exec::Serial) == coker_order_sweep(chains, Exec::Parallel));
  CHECK(discrepancy_sweep(chains, Exec::Serial).checked == 50);
  const auto mats = random_matrices(40, 5, 9, 9);
  CHECK(snf_sweep(mats, Exec::Serial) == snf_sweep(mats, Exec::Parallel));
}

TEST_CASE("generators are reproducible") {
  CHECK(random_chains(20, 5, 9, 1) == random_chains(20, 5, 9, 1));
  CHECK(random_chains(20, 5, 9, 1) != random_chains(20, 5, 9, 2));
  const auto m = random_matrices(10, 8, 5, 4);
  for (const auto& x : m) {
    CHECK(x.rows() >= 1);
    CHECK(x.rows() <= 8);
    CHECK(x.cols() <= 8);
  }
}

}  // TEST_SUITE
