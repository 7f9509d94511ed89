#include <doctest.h>

#include <algorithm>
#include <set>

#include "blowdown/errors.hpp"
#include "blowdown/tsingular.hpp"
#include "oracles.hpp"

using namespace blowdown;

TEST_SUITE("tsingular") {

TEST_CASE("known chains") {
  const Coeffs c{7, 3, 2, 2, 2, 2};
  const auto [p, q] = hj_eval(c);
  CHECK(p == 72);
  CHECK(q == 11);
  CHECK(hj_expand(72, 11) == c);
  const auto t = classify_class_t(c);
  REQUIRE(t.class_t.has_value());
  CHECK(*t.class_t == ClassT{2, 6, 1});
  const Coeffs four{4};
  CHECK(*classify_class_t(four).class_t == ClassT{1, 2, 1});
  const Coeffs two{2, 2, 2};
  const auto rdp = classify_class_t(two);
  CHECK(rdp.rdp);
  CHECK(rdp.is_class_t());
  CHECK_FALSE(rdp.class_t.has_value());
  const Coeffs three{3};
  CHECK_FALSE(classify_class_t(three).is_class_t());
}

TEST_CASE("hj agrees with the rational oracle") {
  for (const auto& c : oracle::all_chains(4, 7)) {
    const auto [p, q] = hj_eval(c);
    const mpq_class v = oracle::hj_value(c);
    CHECK(p == v.get_num());
    CHECK(q == v.get_den());
    const auto small = hj_eval_small(c);
    REQUIRE(small.has_value());
    CHECK(small->first == p.get_si());
    CHECK(hj_expand(p, q) == Coeffs(c.begin(), c.end()));
  }
}

TEST_CASE("long chains fall back to big integers") {
  const Coeffs big(40, 1000000);
  CHECK_FALSE(hj_eval_small(big).has_value());
  const auto [p, q] = hj_eval(big);
  CHECK(p == oracle::hj_value(big).get_num());
  CHECK(hj_expand(p, q) == big);
}

TEST_CASE("classification agrees with the divisor search") {
  for (const auto& c : oracle::all_chains(4, 8)) {
    const auto t = classify_class_t(c);
    const auto [p, q] = hj_eval(c);
    const bool all_two = std::all_of(c.begin(), c.end(), [](long b) { return b == 2; });
    const auto found = oracle::class_t_search(p.get_si(), q.get_si());
    CHECK(t.rdp == all_two);
    CHECK(t.class_t.has_value() == found.has_value());
    if (found && t.class_t) CHECK(*t.class_t == ClassT{found->d, found->n, found->a});
  }
}

TEST_CASE("wahl enumeration") {
  const auto three = wahl_enumerate(3);
  const std::set<Coeffs> s(three.begin(), three.end());
  CHECK(s.count(Coeffs{4}));
  CHECK(s.count(Coeffs{5, 2}));
  CHECK(s.count(Coeffs{2, 5}));
  CHECK(s.count(Coeffs{3, 3}));
  CHECK(s.count(Coeffs{6, 2, 2}));
  CHECK(s.count(Coeffs{2, 2}));
  CHECK_FALSE(s.count(Coeffs{3}));
  CHECK(three.front() == Coeffs{2});
  const auto no_rdp = wahl_enumerate(3, false);
  CHECK(no_rdp.front() == Coeffs{4});
  CHECK(no_rdp.size() + 3 == three.size());
  CHECK(std::is_sorted(three.begin(), three.end(), [](const Coeffs& a, const Coeffs& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }));
  for (const auto& c : wahl_enumerate(7)) CHECK(classify_class_t(c).is_class_t());
  CHECK_THROWS_AS(wahl_enumerate(13), InputError);
}

TEST_CASE("boundary and milnor homology") {
  const Coeffs c{7, 3, 2, 2, 2, 2};
  const auto bh = boundary_homology(c);
  CHECK(bh.group.to_string() == "Z/72");
  REQUIRE(bh.meridians.size() == 6);
  const IntVector m1 = bh.group.reduce(bh.meridians[0]);
  CHECK(gcd(m1[0], Integer(72)) == 1);
  const auto t = classify_class_t(c);
  CHECK(milnor_h1(t).to_string() == "Z/6");
  const GroupMap f = boundary_to_milnor(t);
  CHECK(f.is_surjective());
  CHECK(f.kernel_order() == Integer(12));
  const Coeffs two{2};
  CHECK(milnor_h1(classify_class_t(two)).is_trivial());
  const Coeffs three{3};
  CHECK_THROWS_AS(milnor_h1(classify_class_t(three)), DomainError);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(hj_eval(Coeffs{}), InputError);
  CHECK_THROWS_AS(hj_eval(Coeffs{3, 1}), InputError);
  CHECK_THROWS_AS(hj_expand(4, 2), InputError);
  CHECK_THROWS_AS(hj_expand(4, 4), InputError);
  CHECK(parse_chain("[7,3,2]") == Coeffs{7, 3, 2});
  CHECK(parse_chain("7, 3,2") == Coeffs{7, 3, 2});
  CHECK_THROWS_AS(parse_chain("7,,3"), InputError);
  CHECK_THROWS_AS(parse_chain("abc"), InputError);
  CHECK(format_chain(Coeffs{5, 2}) == "[5,2]");
}

}  // TEST_SUITE
