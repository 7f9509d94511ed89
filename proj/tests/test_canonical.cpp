#include <doctest.h>

#include "blowdown/canonical.hpp"
#include "blowdown/errors.hpp"
#include "oracles.hpp"

using namespace blowdown;

namespace {

std::vector<std::string> strings(const RatVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

// A chain of rational curves with the given coefficients, bound in a fresh configuration.
struct Bound {
  Configuration cfg;
  Chain chain;
};

Bound bound_chain(const Coeffs& coeffs) {
  Bound b{Configuration("S", 0, 0, FinAbGroup()), Chain{"C", coeffs, {}}};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    b.chain.curves.push_back(b.cfg.add_curve("u" + std::to_string(i + 1), 0, -coeffs[i]));
    if (i)
      b.cfg.add_point("p" + std::to_string(i), {Branch{b.chain.curves[i - 1], 1}, Branch{b.chain.curves[i], 1}});
  }
  return b;
}

}  // namespace

TEST_SUITE("canonical") {

TEST_CASE("discrepancies of bare chains") {
  CHECK(strings(discrepancies(Coeffs{7, 3, 2, 2, 2, 2})) ==
        std::vector<std::string>{"5/6", "5/6", "2/3", "1/2", "1/3", "1/6"});
  CHECK(strings(discrepancies(Coeffs{4})) == std::vector<std::string>{"1/2"});
  CHECK(strings(discrepancies(Coeffs{2, 2})) == std::vector<std::string>{"0", "0"});
  CHECK(strings(discrepancies(Coeffs{5, 3, 2, 2})) == std::vector<std::string>{"3/4", "3/4", "1/2", "1/4"});
}

TEST_CASE("re-substitution on enumerated chains") {
  for (const auto& c : wahl_enumerate(6)) {
    const RatVector d = discrepancies(c);
    for (const auto& r : oracle::discrepancy_residual(c, d)) CHECK(r == 0);
  }
}

TEST_CASE("bound chain agrees with the bare chain") {
  const Coeffs c{6, 2, 2};
  const Bound b = bound_chain(c);
  const QDivisor d = discrepancies(b.cfg, b.chain);
  const RatVector bare = discrepancies(c);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(d.at(b.chain.curves[i]) == bare[i]);
}

TEST_CASE("pullback degrees and nef report") {
  Bound b = bound_chain(Coeffs{4});
  const CurveId e = b.cfg.add_curve("e", 0, -1);
  b.cfg.add_point("q", {Branch{e, 1}, Branch{b.chain.curves[0], 1}});
  const std::vector<Chain> chains{b.chain};
  CHECK(pullback_degree(b.cfg, chains, e).value == Rational(-1, 2));
  CHECK(pullback_degree(b.cfg, chains, b.chain.curves[0]).chain_member);
  CHECK(pullback_degree(b.cfg, chains, b.chain.curves[0]).value == 0);
  const std::vector<CurveId> tests{e};
  const NefReport n = nef_report(b.cfg, chains, tests);
  CHECK_FALSE(n.nef_on_list);
  CHECK(n.coefficients_positive);
  CHECK(n.entries.at(0).sign == Sign::Negative);
  const std::map<CurveId, long> twice{{e, 2}};
  CHECK(pullback_degree(b.cfg, chains, twice).value == Rational(-1));
}

TEST_CASE("k squared after contraction") {
  Bound b = bound_chain(Coeffs{4});
  const std::vector<Chain> one{b.chain};
  // K.u = 2 for a (-4)-curve, coefficient 1/2
  CHECK(k_squared_contracted(b.cfg, one) == 1);
  const std::vector<Chain> twice{b.chain, b.chain};
  CHECK_THROWS_AS(k_squared_contracted(b.cfg, twice), InputError);
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(4, 6)) == "2/3");
  CHECK(to_string(Rational(-3, 1)) == "-3");
  CHECK(sign_of(Rational(0)) == Sign::Zero);
}

}  // TEST_SUITE
