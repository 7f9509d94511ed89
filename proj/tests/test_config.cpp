#include <doctest.h>

#include <algorithm>

#include "blowdown/config.hpp"
#include "blowdown/errors.hpp"

using namespace blowdown;

namespace {

Configuration two_lines() {
  Configuration cfg("P2", 9, 1, FinAbGroup());
  const CurveId a = cfg.add_curve("A", 0, 1);
  const CurveId b = cfg.add_curve("B", 0, 1);
  cfg.add_point("A.B", {Branch{a, 1}, Branch{b, 1}});
  return cfg;
}

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("adjunction fills K.C") {
  const Configuration cfg = two_lines();
  CHECK(cfg.curve(cfg.curve_id("A")).k_degree == -3);
  CHECK(canonical_degree(cfg, cfg.curve_id("A")) == -3);
  CHECK(validate(cfg).empty());
  CHECK(intersection_number(cfg, cfg.curve_id("A"), cfg.curve_id("B")) == 1);
  CHECK(intersection_number(cfg, cfg.curve_id("A"), cfg.curve_id("A")) == 1);
}

TEST_CASE("blowing up a transverse crossing") {
  const Configuration cfg = two_lines();
  const BlowupResult r = blow_up(cfg, PointRef{cfg.point_id("A.B")}, "e");
  const Configuration& z = r.cfg;
  const CurveId a = z.curve_id("A"), b = z.curve_id("B");
  CHECK(z.curve(a).self_int == 0);
  CHECK(z.curve(a).k_degree == -2);
  CHECK(intersection_number(z, a, b) == 0);
  CHECK(intersection_number(z, a, r.exceptional) == 1);
  CHECK(intersection_number(z, b, r.exceptional) == 1);
  CHECK(z.curve(r.exceptional).self_int == -1);
  CHECK(z.k2() == 8);
  CHECK(z.b2() == 2);
  CHECK(z.history().size() == 1);
  CHECK(z.find_point("e:A").has_value());
  CHECK_FALSE(z.find_point("A.B").has_value());
  CHECK(validate(z).empty());
  // the input is untouched
  CHECK(cfg.k2() == 9);
}

TEST_CASE("blowing up a singular point of a curve") {
  Configuration cfg("P2", 9, 1, FinAbGroup());
  const CurveId c = cfg.add_curve("C", 1, 9);  // plane cubic
  const BlowupResult r = blow_up(cfg, FreshPoint{{Branch{c, 2}}, Provenance::Asserted, "node"}, "e");
  CHECK(r.cfg.curve(c).genus == 0);
  CHECK(r.cfg.curve(c).self_int == 5);
  CHECK(intersection_number(r.cfg, c, r.exceptional) == 2);
  CHECK(validate(r.cfg).empty());
  CHECK_THROWS_AS(blow_up(r.cfg, FreshPoint{{Branch{c, 2}}, Provenance::Asserted, ""}), InputError);
}

TEST_CASE("blowing up a node with two branches on one curve") {
  Configuration cfg("P2", 9, 1, FinAbGroup());
  const CurveId c = cfg.add_curve("C", 1, 9);  // nodal cubic
  cfg.add_point("node", {Branch{c, 1}, Branch{c, 1}});
  const BlowupResult r = blow_up(cfg, PointRef{cfg.point_id("node")}, "e");
  CHECK(r.cfg.curve(c).self_int == 5);
  CHECK(intersection_number(r.cfg, c, r.exceptional) == 2);
  CHECK(r.cfg.find_point("e:C").has_value());
  CHECK(r.cfg.find_point("e:C#2").has_value());
  CHECK(r.cfg.curve(c).genus == 0);
  CHECK(validate(r.cfg).empty());
}

TEST_CASE("successive blow-ups keep the dual graph a chain") {
  Configuration cfg = two_lines();
  cfg = blow_up(cfg, PointRef{cfg.point_id("A.B")}, "e1").cfg;
  cfg = blow_up(cfg, PointRef{cfg.point_id("e1:A")}, "e2").cfg;
  const CurveId e1 = cfg.curve_id("e1"), e2 = cfg.curve_id("e2"), a = cfg.curve_id("A");
  CHECK(cfg.curve(e1).self_int == -2);
  CHECK(intersection_number(cfg, e1, a) == 0);
  CHECK(intersection_number(cfg, e2, a) == 1);
  CHECK(intersection_number(cfg, e2, e1) == 1);
  CHECK(cfg.k2() == 7);
  CHECK(validate(cfg).empty());
}

TEST_CASE("tampered configurations are reported") {
  Configuration cfg = two_lines();
  cfg.mutable_curves().at(cfg.curve_id("A")).self_int = 4;
  CHECK(mentions(validate(cfg), "adjunction"));

  Configuration dangling = two_lines();
  dangling.mutable_points().begin()->second.branches.push_back(Branch{99, 1});
  CHECK(mentions(validate(dangling), "missing curve"));

  Configuration z = blow_up(two_lines(), PointRef{1}, "e").cfg;
  z.mutable_curves().erase(z.curve_id("e"));
  const auto v = validate(z);
  CHECK(mentions(v, "exceptional curve missing"));
  CHECK(mentions(v, "missing curve"));
}

TEST_CASE("input errors") {
  Configuration cfg = two_lines();
  CHECK_THROWS_AS(cfg.add_curve("A", 0, 1), InputError);
  CHECK_THROWS_AS(cfg.add_curve("N", -1, 1), InputError);
  CHECK_THROWS_AS(cfg.add_point("P", {Branch{42, 1}}), InputError);
  CHECK_THROWS_AS(cfg.add_point("Q", {Branch{1, 0}}), InputError);
  CHECK_THROWS_AS(cfg.add_point("A.B", {Branch{1, 1}}), InputError);
  CHECK_THROWS_AS(cfg.curve_id("Z"), InputError);
  CHECK_THROWS_AS(parse_provenance("photo"), InputError);
  CHECK(parse_provenance("figure") == Provenance::Figure);
  CHECK(worst(Provenance::Text, Provenance::Asserted) == Provenance::Asserted);
}

TEST_CASE("dot export") {
  const std::string dot = to_dot(two_lines());
  CHECK(dot.find("graph \"P2\"") == 0);
  CHECK(dot.find("A/1") != std::string::npos);
  CHECK(dot.find(" -- ") != std::string::npos);
}

}  // TEST_SUITE
