#include "blowdown/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "blowdown/errors.hpp"

namespace blowdown {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InputError(path + ": " + msg);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

long as_long(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<long>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

std::string opt_string(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  return it == obj.end() ? std::string{} : as_string(*it, path + "." + key);
}

std::vector<std::string> string_list(const json& v, const std::string& path) {
  std::vector<std::string> out;
  const json& a = as_array(v, path);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(as_string(a[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<long> long_list(const json& v, const std::string& path) {
  std::vector<long> out;
  const json& a = as_array(v, path);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(as_long(a[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::map<std::string, long> weight_map(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object of curve weights");
  std::map<std::string, long> out;
  for (auto it = v.begin(); it != v.end(); ++it) out[it.key()] = as_long(it.value(), path + "." + it.key());
  return out;
}

Provenance provenance_of(const json& obj, const std::string& path, Provenance fallback,
                         std::string& citation) {
  Provenance p = fallback;
  if (auto it = obj.find("provenance"); it != obj.end()) {
    try {
      p = parse_provenance(as_string(*it, path + ".provenance"));
    } catch (const InputError& e) {
      fail(path + ".provenance", e.what());
    }
  }
  citation = opt_string(obj, "citation", path);
  if (p != Provenance::Text && citation.empty())
    fail(path + ".citation", std::string("required for ") + to_string(p) + " data");
  return p;
}

}  // namespace

const std::vector<std::string>& certificate_names() {
  static const std::vector<std::string> names = {"config_valid",  "chains_bound",
                                                 "all_class_t",   "nef_on_list",
                                                 "strict_on_list", "coefficients_positive",
                                                 "k2_positive",   "membership"};
  return names;
}

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("$: syntax error: ") + e.what());
  }
  const std::string root = "$";
  if (!doc.is_object()) fail(root, "expected an object");
  const json& schema = field(doc, "schema", root);
  if (as_long(schema, "$.schema") != 1) fail("$.schema", "unsupported version (expected 1)");

  Scenario s;
  s.name = as_string(field(doc, "name", root), "$.name");
  s.description = opt_string(doc, "description", root);

  const json& surf = field(doc, "surface", root);
  s.surface = as_string(field(surf, "name", "$.surface"), "$.surface.name");
  s.k2 = as_long(field(surf, "k2", "$.surface"), "$.surface.k2");
  s.b2 = as_long(field(surf, "b2", "$.surface"), "$.surface.b2");
  if (s.b2 < 0) fail("$.surface.b2", "must be non-negative");
  if (auto it = surf.find("h1"); it != surf.end()) s.h1 = long_list(*it, "$.surface.h1");
  for (std::size_t i = 0; i < s.h1.size(); ++i)
    if (s.h1[i] < 1) fail("$.surface.h1[" + std::to_string(i) + "]", "cyclic orders must be >= 1");
  if (auto it = surf.find("h1_generators"); it != surf.end())
    s.h1_generators = string_list(*it, "$.surface.h1_generators");

  const json& curves = as_array(field(doc, "curves", root), "$.curves");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string p = "$.curves[" + std::to_string(i) + "]";
    s.curves.push_back({as_string(field(curves[i], "name", p), p + ".name"),
                        curves[i].contains("genus") ? as_long(curves[i]["genus"], p + ".genus") : 0,
                        as_long(field(curves[i], "self_int", p), p + ".self_int")});
  }

  if (auto it = doc.find("points"); it != doc.end()) {
    const json& pts = as_array(*it, "$.points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::string p = "$.points[" + std::to_string(i) + "]";
      Scenario::PointSpecData d;
      d.name = as_string(field(pts[i], "name", p), p + ".name");
      const auto names = string_list(field(pts[i], "curves", p), p + ".curves");
      std::vector<long> mult(names.size(), 1);
      if (auto m = pts[i].find("multiplicities"); m != pts[i].end()) {
        mult = long_list(*m, p + ".multiplicities");
        if (mult.size() != names.size()) fail(p + ".multiplicities", "one entry per curve required");
      }
      for (std::size_t k = 0; k < names.size(); ++k) d.branches.emplace_back(names[k], mult[k]);
      d.provenance = provenance_of(pts[i], p, Provenance::Text, d.citation);
      s.points.push_back(std::move(d));
    }
  }

  if (auto it = doc.find("blowups"); it != doc.end()) {
    const json& bl = as_array(*it, "$.blowups");
    for (std::size_t i = 0; i < bl.size(); ++i) {
      const std::string p = "$.blowups[" + std::to_string(i) + "]";
      Scenario::BlowupSpec b;
      b.exceptional = as_string(field(bl[i], "exceptional", p), p + ".exceptional");
      if (auto pt = bl[i].find("point"); pt != bl[i].end()) {
        b.point = as_string(*pt, p + ".point");
        b.provenance = provenance_of(bl[i], p, Provenance::Text, b.citation);
      } else if (auto on = bl[i].find("on"); on != bl[i].end()) {
        b.on = string_list(*on, p + ".on");
        if (b.on.empty() || b.on.size() > 2) fail(p + ".on", "a fresh centre lies on one or two curves");
        b.provenance = provenance_of(bl[i], p, Provenance::Asserted, b.citation);
      } else {
        fail(p, "needs either 'point' or 'on'");
      }
      s.blowups.push_back(std::move(b));
    }
  }

  if (auto it = doc.find("chains"); it != doc.end()) {
    const json& ch = as_array(*it, "$.chains");
    for (std::size_t i = 0; i < ch.size(); ++i) {
      const std::string p = "$.chains[" + std::to_string(i) + "]";
      Scenario::ChainSpec c;
      c.name = ch[i].contains("name") ? as_string(ch[i]["name"], p + ".name") : "C" + std::to_string(i + 1);
      c.curves = string_list(field(ch[i], "curves", p), p + ".curves");
      if (c.curves.empty()) fail(p + ".curves", "a chain needs at least one curve");
      if (auto co = ch[i].find("coeffs"); co != ch[i].end()) {
        c.coeffs = long_list(*co, p + ".coeffs");
        if (c.coeffs->size() != c.curves.size()) fail(p + ".coeffs", "one coefficient per curve required");
      }
      s.chains.push_back(std::move(c));
    }
  }

  if (auto it = doc.find("h2_generators"); it != doc.end() && !(it->is_string() && *it == "all")) {
    const json& gs = as_array(*it, "$.h2_generators");
    std::vector<Scenario::ClassSpec> out;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const std::string p = "$.h2_generators[" + std::to_string(i) + "]";
      Scenario::ClassSpec c;
      if (gs[i].is_string()) {
        c.name = gs[i].get<std::string>();
        c.combination[c.name] = 1;
        c.provenance = Provenance::Text;
      } else {
        c.name = as_string(field(gs[i], "name", p), p + ".name");
        if (auto co = gs[i].find("combination"); co != gs[i].end())
          c.combination = weight_map(*co, p + ".combination");
        if (auto in = gs[i].find("intersections"); in != gs[i].end())
          c.intersections = weight_map(*in, p + ".intersections");
        if (c.combination.empty() && !c.intersections)
          fail(p, "needs 'combination' or 'intersections'");
        c.provenance = provenance_of(gs[i], p, Provenance::Text, c.citation);
      }
      out.push_back(std::move(c));
    }
    s.h2_generators = std::move(out);
  }

  if (auto it = doc.find("declared_relations"); it != doc.end()) {
    const json& rs = as_array(*it, "$.declared_relations");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string p = "$.declared_relations[" + std::to_string(i) + "]";
      Scenario::RelationSpec r;
      r.name = as_string(field(rs[i], "name", p), p + ".name");
      r.generator = as_string(field(rs[i], "generator", p), p + ".generator");
      r.multiple = as_long(field(rs[i], "multiple", p), p + ".multiple");
      const json& eq = field(rs[i], "equals", p);
      if (eq.is_string() && eq == "zero") {
      } else if (eq.is_object() && eq.contains("meridian")) {
        r.meridian = as_string(eq["meridian"], p + ".equals.meridian");
      } else if (eq.is_object() && eq.contains("element")) {
        r.element = long_list(eq["element"], p + ".equals.element");
      } else {
        fail(p + ".equals", "expected \"zero\", {\"meridian\": curve} or {\"element\": [...]}");
      }
      r.citation = as_string(field(rs[i], "citation", p), p + ".citation");
      if (std::find(s.h1_generators.begin(), s.h1_generators.end(), r.generator) == s.h1_generators.end())
        fail(p + ".generator", "unknown ambient generator '" + r.generator + "'");
      s.declared_relations.push_back(std::move(r));
    }
  }

  if (auto it = doc.find("membership_certificates"); it != doc.end()) {
    const json& cs = as_array(*it, "$.membership_certificates");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string p = "$.membership_certificates[" + std::to_string(i) + "]";
      s.membership_certificates.push_back(
          {cs[i].contains("name") ? as_string(cs[i]["name"], p + ".name") : "cert" + std::to_string(i + 1),
           long_list(field(cs[i], "element", p), p + ".element")});
      if (s.membership_certificates.back().element.size() != s.chains.size())
        fail(p + ".element", "needs one coordinate per chain");
    }
  }

  if (auto it = doc.find("test_curves"); it != doc.end()) s.test_curves = string_list(*it, "$.test_curves");
  if (auto it = doc.find("assumptions"); it != doc.end()) s.assumptions = string_list(*it, "$.assumptions");
  if (auto it = doc.find("annotations"); it != doc.end()) {
    const json& as = as_array(*it, "$.annotations");
    for (std::size_t i = 0; i < as.size(); ++i) {
      const std::string p = "$.annotations[" + std::to_string(i) + "]";
      Scenario::AnnotationSpec a{as_string(field(as[i], "claim", p), p + ".claim"),
                                 string_list(field(as[i], "conditional_on", p), p + ".conditional_on")};
      for (std::size_t k = 0; k < a.conditional_on.size(); ++k) {
        const auto& names = certificate_names();
        if (std::find(names.begin(), names.end(), a.conditional_on[k]) == names.end())
          fail(p + ".conditional_on[" + std::to_string(k) + "]",
               "unknown certificate '" + a.conditional_on[k] + "'");
      }
      s.annotations.push_back(std::move(a));
    }
  }
  if (auto it = doc.find("expected"); it != doc.end()) {
    if (!it->is_object()) fail("$.expected", "expected an object");
    s.expected = *it;
  }

  // Reference checks. Replaying the blow-ups resolves every point and curve name.
  {
    std::set<std::string> names;
    for (std::size_t i = 0; i < s.curves.size(); ++i)
      if (!names.insert(s.curves[i].name).second)
        fail("$.curves[" + std::to_string(i) + "].name", "duplicate curve '" + s.curves[i].name + "'");
    for (std::size_t i = 0; i < s.blowups.size(); ++i)
      if (!names.insert(s.blowups[i].exceptional).second)
        fail("$.blowups[" + std::to_string(i) + "].exceptional",
             "name '" + s.blowups[i].exceptional + "' already used");
    if (s.h1_generators.size() != FinAbGroup::from_cyclic_orders(
                                      IntVector(s.h1.begin(), s.h1.end())).num_coordinates())
      fail("$.surface.h1_generators", "one name per invariant factor of h1 required");
  }

  const Configuration cfg = build_configuration(s);

  std::set<std::string> used;
  for (std::size_t i = 0; i < s.chains.size(); ++i)
    for (std::size_t k = 0; k < s.chains[i].curves.size(); ++k) {
      const std::string p = "$.chains[" + std::to_string(i) + "].curves[" + std::to_string(k) + "]";
      const std::string& n = s.chains[i].curves[k];
      if (!cfg.find_curve(n)) fail(p, "unknown curve '" + n + "'");
      if (!used.insert(n).second) fail(p, "curve '" + n + "' appears in more than one chain position");
    }
  if (s.h2_generators)
    for (std::size_t i = 0; i < s.h2_generators->size(); ++i) {
      const auto& c = (*s.h2_generators)[i];
      const std::string p = "$.h2_generators[" + std::to_string(i) + "]";
      for (const auto& [n, w] : c.combination)
        if (!cfg.find_curve(n)) fail(p, "unknown curve '" + n + "'");
      if (c.intersections)
        for (const auto& [n, w] : *c.intersections)
          if (!cfg.find_curve(n)) fail(p + ".intersections", "unknown curve '" + n + "'");
    }
  for (std::size_t i = 0; i < s.declared_relations.size(); ++i) {
    const auto& r = s.declared_relations[i];
    const std::string p = "$.declared_relations[" + std::to_string(i) + "].equals";
    if (r.meridian && used.count(*r.meridian) == 0)
      fail(p + ".meridian", "'" + *r.meridian + "' is not a chain curve");
    if (r.element && r.element->size() != s.chains.size())
      fail(p + ".element", "needs one coordinate per chain");
  }
  for (std::size_t i = 0; i < s.test_curves.size(); ++i)
    if (!cfg.find_curve(s.test_curves[i]))
      fail("$.test_curves[" + std::to_string(i) + "]", "unknown curve '" + s.test_curves[i] + "'");
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Configuration build_configuration(const Scenario& s) {
  Configuration cfg(s.surface, s.k2, s.b2,
                    FinAbGroup::from_cyclic_orders(IntVector(s.h1.begin(), s.h1.end())));
  for (const auto& c : s.curves) cfg.add_curve(c.name, c.genus, c.self_int);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto& p = s.points[i];
    const std::string path = "$.points[" + std::to_string(i) + "]";
    std::vector<Branch> br;
    for (const auto& [n, m] : p.branches) {
      auto id = cfg.find_curve(n);
      if (!id) fail(path + ".curves", "unknown curve '" + n + "'");
      if (m < 1) fail(path + ".multiplicities", "multiplicity < 1");
      br.push_back({*id, m});
    }
    if (cfg.find_point(p.name)) fail(path + ".name", "duplicate point '" + p.name + "'");
    cfg.add_point(p.name, std::move(br), p.provenance, p.citation);
  }
  for (std::size_t i = 0; i < s.blowups.size(); ++i) {
    const auto& b = s.blowups[i];
    const std::string path = "$.blowups[" + std::to_string(i) + "]";
    PointSpec spec;
    if (b.point) {
      auto id = cfg.find_point(*b.point);
      if (!id) fail(path + ".point", "unknown point '" + *b.point + "'");
      auto& pt = cfg.mutable_points().at(*id);
      if (pt.provenance < b.provenance) {
        pt.provenance = b.provenance;
        pt.citation = b.citation;
      }
      spec = PointRef{*id};
    } else {
      FreshPoint f{{}, b.provenance, b.citation};
      for (const auto& n : b.on) {
        auto id = cfg.find_curve(n);
        if (!id) fail(path + ".on", "unknown curve '" + n + "'");
        f.branches.push_back({*id, 1});
      }
      spec = f;
    }
    try {
      cfg = blow_up(cfg, spec, b.exceptional).cfg;
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }
  return cfg;
}

std::vector<Chain> bind_chains(const Scenario& s, const Configuration& cfg) {
  std::vector<Chain> out;
  for (const auto& c : s.chains) {
    Chain ch;
    ch.name = c.name;
    for (const auto& n : c.curves) ch.curves.push_back(cfg.curve_id(n));
    ch.coeffs = c.coeffs ? *c.coeffs : chain_coeffs(cfg, ch.curves);
    out.push_back(std::move(ch));
  }
  return out;
}

}  // namespace blowdown
