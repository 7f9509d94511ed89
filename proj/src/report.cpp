#include "blowdown/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "blowdown/canonical.hpp"
#include "blowdown/errors.hpp"
#include "blowdown/homology.hpp"

namespace blowdown {

using json = nlohmann::ordered_json;

namespace {

json int_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json vec_json(std::span<const Integer> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

json group_list(const std::vector<FinAbGroup>& gs) {
  json a = json::array();
  for (const auto& g : gs) a.push_back(g.to_string());
  return a;
}

std::size_t find_chain_position(std::span<const Chain> chains, CurveId c, std::size_t& pos) {
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = 0; j < chains[i].curves.size(); ++j)
      if (chains[i].curves[j] == c) {
        pos = j;
        return i;
      }
  return chains.size();
}

Provenance chain_provenance(const Configuration& cfg, std::span<const Chain> chains) {
  Provenance p = Provenance::Text;
  auto member = [&](CurveId c) {
    std::size_t pos = 0;
    return find_chain_position(chains, c, pos);
  };
  for (const auto& [id, pt] : cfg.points()) {
    std::map<std::size_t, int> hits;
    for (const auto& b : pt.branches) {
      const std::size_t ch = member(b.curve);
      if (ch < chains.size()) ++hits[ch];
    }
    for (const auto& [ch, n] : hits)
      if (n >= 2) p = worst(p, pt.provenance);
  }
  for (const auto& rec : cfg.history())
    for (const auto& b : rec.branches)
      if (member(b.curve) < chains.size()) p = worst(p, rec.provenance);
  return p;
}

}  // namespace

bool json_subset_match(const json& expected, const json& actual, const std::string& path,
                       std::string& detail) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      detail = path + ": expected an object";
      return false;
    }
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      auto a = actual.find(it.key());
      if (a == actual.end()) {
        detail = path + "." + it.key() + ": not computed";
        return false;
      }
      if (!json_subset_match(it.value(), *a, path + "." + it.key(), detail)) return false;
    }
    return true;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size()) {
      detail = path + ": expected " + expected.dump() + ", got " + actual.dump();
      return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (!json_subset_match(expected[i], actual[i], path + "[" + std::to_string(i) + "]", detail))
        return false;
    return true;
  }
  if (expected != actual) {
    detail = path + ": expected " + expected.dump() + ", got " + actual.dump();
    return false;
  }
  return true;
}

bool Report::passed() const {
  return error_stage.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int Report::exit_code() const {
  if (input_error) return 2;
  return passed() ? 0 : 1;
}

Report input_failure(const std::string& label, const std::string& message) {
  Report r;
  r.scenario = label;
  r.error_stage = "parse";
  r.error = message;
  r.input_error = true;
  return r;
}

Report run(const Scenario& s) {
  Report rep;
  rep.scenario = s.name;
  json& d = rep.data;
  std::string stage;
  std::map<std::string, Provenance> prov;
  std::map<std::string, bool> certs;

  try {
    stage = "replay";
    const Configuration cfg = build_configuration(s);
    d["scenario"] = s.name;
    d["surface"] = {{"name", s.surface},
                    {"k2", s.k2},
                    {"b2", s.b2},
                    {"h1", cfg.h1_ambient().to_string()}};
    d["blowups"] = cfg.history().size();
    d["k2_blown_up"] = cfg.k2();
    d["b2_blown_up"] = cfg.b2();

    stage = "validate";
    const std::vector<std::string> violations = validate(cfg);
    d["config_violations"] = violations;
    certs["config_valid"] = violations.empty();
    const std::vector<Chain> chains = bind_chains(s, cfg);
    const Provenance cprov = chain_provenance(cfg, chains);

    stage = "classify";
    std::vector<CyclicQuotientType> types;
    json jchains = json::array();
    bool bound = true, all_t = true;
    for (const auto& ch : chains) {
      const auto t = classify_class_t(ch.coeffs);
      types.push_back(t);
      json names = json::array();
      for (CurveId c : ch.curves) names.push_back(cfg.curve(c).name);
      json jt = nullptr;
      if (t.rdp)
        jt = "rdp";
      else if (t.class_t)
        jt = {{"d", int_json(t.class_t->d)}, {"n", int_json(t.class_t->n)}, {"a", int_json(t.class_t->a)}};
      const auto bv = check_chain_binding(cfg, ch);
      bound = bound && bv.empty();
      all_t = all_t && t.is_class_t();
      jchains.push_back({{"name", ch.name},
                         {"curves", names},
                         {"coeffs", ch.coeffs},
                         {"p", int_json(t.p)},
                         {"q", int_json(t.q)},
                         {"class_t", jt},
                         {"binding_violations", bv}});
    }
    d["chains"] = jchains;
    certs["chains_bound"] = bound;
    certs["all_class_t"] = all_t;
    prov["chains"] = cprov;

    stage = "boundary";
    const BoundaryGroup bg = boundary_group(chains);
    d["boundary_h1"] = group_list(bg.summands);
    d["boundary_h1_canonical"] = bg.canonical().to_string();
    json mer = json::object();
    for (std::size_t i = 0; i < chains.size(); ++i) {
      json m = json::array();
      for (const auto& v : bg.meridians[i]) m.push_back(int_json(v[i]));
      mer[chains[i].name] = m;
    }
    d["meridians"] = mer;
    json milnor = json::array();
    std::vector<GroupMap> to_milnor;
    for (const auto& t : types) {
      if (!t.is_class_t()) {
        milnor.push_back(nullptr);
        continue;
      }
      milnor.push_back(milnor_h1(t).to_string());
      to_milnor.push_back(boundary_to_milnor(t));
    }
    d["milnor_h1"] = milnor;
    prov["boundary_h1"] = prov["boundary_h1_canonical"] = prov["milnor_h1"] = prov["meridians"] = cprov;

    stage = "discrepancies";
    json disc = json::object();
    for (const auto& ch : chains) {
      const QDivisor q = discrepancies(cfg, ch);
      json c = json::array();
      for (CurveId u : ch.curves) c.push_back(to_string(q.at(u)));
      disc[ch.name] = c;
    }
    d["discrepancies"] = disc;
    prov["discrepancies"] = cprov;

    stage = "pullback";
    std::vector<CurveId> tests;
    for (const auto& n : s.test_curves) tests.push_back(cfg.curve_id(n));
    const NefReport nef = nef_report(cfg, chains, tests);
    json pb = json::object();
    json entries = json::array();
    Provenance pprov = cprov;
    for (const auto& e : nef.entries) {
      pb[e.name] = to_string(e.degree);
      entries.push_back({{"curve", e.name},
                         {"degree", to_string(e.degree)},
                         {"sign", to_string(e.sign)},
                         {"chain_member", e.chain_member}});
      pprov = worst(pprov, curve_class(cfg, chains, e.curve).provenance);
    }
    d["pullback_degrees"] = pb;
    d["nef"] = {{"entries", entries},
                {"nef_on_list", nef.nef_on_list},
                {"strict_on_list", nef.strict_on_list},
                {"coefficients_positive", nef.coefficients_positive}};
    certs["nef_on_list"] = nef.nef_on_list;
    certs["strict_on_list"] = nef.strict_on_list;
    certs["coefficients_positive"] = nef.coefficients_positive;
    prov["pullback_degrees"] = prov["nef"] = pprov;

    stage = "k2";
    const Rational k2 = k_squared_contracted(cfg, chains);
    d["k2_contracted"] = to_string(k2);
    certs["k2_positive"] = sgn(k2) > 0;
    prov["k2_contracted"] = cprov;

    stage = "h1_z0";
    std::vector<RelationClass> classes;
    if (s.h2_generators) {
      for (const auto& spec : *s.h2_generators) {
        RelationClass c{spec.name, {}, std::nullopt, spec.provenance};
        for (const auto& [n, w] : spec.combination) {
          const CurveId id = cfg.curve_id(n);
          c.combination[id] = w;
          if (!spec.intersections) c.provenance = worst(c.provenance, curve_class(cfg, chains, id).provenance);
        }
        if (spec.intersections) {
          std::map<CurveId, long> m;
          for (const auto& [n, w] : *spec.intersections) m[cfg.curve_id(n)] = w;
          c.intersections = m;
        }
        classes.push_back(std::move(c));
      }
    } else {
      for (const auto& [id, c] : cfg.curves()) classes.push_back(curve_class(cfg, chains, id));
    }
    std::vector<RelationClass> text_classes;
    std::map<std::string, int> class_counts{{"text", 0}, {"asserted", 0}, {"figure", 0}};
    Provenance hprov = cprov;
    for (const auto& c : classes) {
      ++class_counts[to_string(c.provenance)];
      hprov = worst(hprov, c.provenance);
      if (c.provenance == Provenance::Text) text_classes.push_back(c);
    }
    const PartialImage image = partial_image_subgroup(cfg, chains, bg, classes);
    const PartialImage text_image = partial_image_subgroup(cfg, chains, bg, text_classes);
    d["partial_image"] = {{"classes", classes.size()},
                          {"nonzero_generators", image.generators.size()},
                          {"order", int_json(image.order())},
                          {"quotient", image.quotient().to_string()}};
    prov["partial_image"] = hprov;

    json certs_json = json::array();
    bool all_outside = true;
    for (const auto& c : s.membership_certificates) {
      const IntVector x = bg.reduce(IntVector(c.element.begin(), c.element.end()));
      const bool member = image.contains(x);
      all_outside = all_outside && !member;
      certs_json.push_back({{"name", c.name},
                            {"element", vec_json(x)},
                            {"member", member},
                            {"member_text_only", text_image.contains(x)}});
    }
    d["membership_certificates"] = certs_json;
    certs["membership"] = all_outside;
    prov["membership_certificates"] = hprov;

    const Z0Result open = h1_z0(bg, image, cfg.h1_ambient(), s.h1_generators, {});
    const Z0Result open_text = h1_z0(bg, text_image, cfg.h1_ambient(), s.h1_generators, {});
    d["h1_z0_undeclared"] = {{"order", int_json(open.order)},
                             {"candidates", group_list(open.candidates)},
                             {"complete", open.candidates_complete},
                             {"text_only_order", int_json(open_text.order)}};
    prov["h1_z0_undeclared"] = hprov;

    std::vector<LiftRelation> lifts;
    json rel_names = json::array();
    for (const auto& r : s.declared_relations) {
      IntVector b(bg.size());
      if (r.meridian) {
        std::size_t pos = 0;
        const std::size_t i = find_chain_position(chains, cfg.curve_id(*r.meridian), pos);
        b = bg.meridians[i][pos];
      } else if (r.element) {
        b = IntVector(r.element->begin(), r.element->end());
      }
      lifts.push_back({r.name, r.generator, Integer(r.multiple), bg.reduce(b), r.citation});
      rel_names.push_back(r.name);
    }

    const Z0Result z0 = lifts.empty() ? open : h1_z0(bg, image, cfg.h1_ambient(), s.h1_generators, lifts);
    d["h1_z0"] = {{"order", int_json(z0.order)},
                  {"group", z0.group ? json(z0.group->to_string()) : json(nullptr)},
                  {"candidates", group_list(z0.candidates)},
                  {"declared_relations", rel_names},
                  {"basis_note", z0.basis_note}};
    prov["h1_z0"] = lifts.empty() ? hprov : worst(hprov, Provenance::Asserted);

    stage = "mv";
    if (!all_t) {
      d["h1_blowdown"] = nullptr;
      d["h1_blowdown_note"] = "not every chain is of class T";
    } else if (!z0.group) {
      d["h1_blowdown"] = nullptr;
      d["h1_blowdown_note"] = "H1(Z0) is not determined without declared relations";
    } else {
      std::vector<IntVector> images;
      for (std::size_t i = 0; i < chains.size(); ++i) {
        IntVector e(z0.presentation.num_generators());
        e[i] = 1;
        images.push_back(std::move(e));
      }
      d["h1_blowdown"] = mv_blowdown_h1(z0.presentation, to_milnor, images).to_string();
    }
    prov["h1_blowdown"] = prov["h1_z0"];

    stage = "report";
    std::map<std::string, int> point_counts{{"text", 0}, {"asserted", 0}, {"figure", 0}};
    std::map<std::string, int> blowup_counts{{"text", 0}, {"asserted", 0}, {"figure", 0}};
    json non_text = json::array();
    for (const auto& p : s.points) {
      ++point_counts[to_string(p.provenance)];
      if (p.provenance != Provenance::Text)
        non_text.push_back({{"item", "point " + p.name},
                            {"provenance", to_string(p.provenance)},
                            {"citation", p.citation}});
    }
    for (const auto& rec : cfg.history()) ++blowup_counts[to_string(rec.provenance)];
    for (const auto& r : s.declared_relations)
      non_text.push_back({{"item", "declared relation " + r.name},
                          {"provenance", "asserted"},
                          {"citation", r.citation}});
    d["provenance"] = {{"points", point_counts},
                       {"blowups", blowup_counts},
                       {"generating_classes", class_counts},
                       {"non_text_data", non_text}};
    d["assumptions"] = s.assumptions;
    json ann = json::array();
    for (const auto& a : s.annotations) {
      bool holds = true;
      for (const auto& c : a.conditional_on) holds = holds && certs[c];
      ann.push_back({{"claim", a.claim},
                     {"conditional_on", a.conditional_on},
                     {"certificates_hold", holds}});
    }
    d["annotations"] = ann;

    stage = "compare";
    for (auto it = s.expected.begin(); it != s.expected.end(); ++it) {
      CheckResult c;
      c.field = it.key();
      c.expected = it.value();
      c.actual = d.contains(it.key()) ? d[it.key()] : json(nullptr);
      c.pass = json_subset_match(c.expected, c.actual, it.key(), c.detail);
      c.provenance = prov.count(it.key()) ? prov[it.key()] : Provenance::Text;
      rep.checks.push_back(std::move(c));
    }
    std::map<std::string, int> by_prov{{"text", 0}, {"asserted", 0}, {"figure", 0}};
    for (const auto& c : rep.checks) ++by_prov[to_string(c.provenance)];
    d["provenance"]["checks"] = by_prov;
    stage.clear();
  } catch (const InputError& e) {
    rep.error_stage = stage;
    rep.error = e.what();
    rep.input_error = true;
  } catch (const std::exception& e) {
    rep.error_stage = stage;
    rep.error = e.what();
  }
  return rep;
}

std::vector<Report> run_all(std::span<const Scenario> scenarios) {
  std::vector<Report> out(scenarios.size());
  const auto n = static_cast<std::int64_t>(scenarios.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run(scenarios[static_cast<std::size_t>(i)]);
  return out;
}

json report_json(const Report& r) {
  json j;
  j["scenario"] = r.scenario;
  j["status"] = r.passed() ? "pass" : "fail";
  j["exit_code"] = r.exit_code();
  if (!r.error_stage.empty()) j["error"] = {{"stage", r.error_stage}, {"message", r.error}};
  j["results"] = r.data;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj = {{"field", c.field},
               {"pass", c.pass},
               {"provenance", to_string(c.provenance)},
               {"expected", c.expected},
               {"actual", c.actual}};
    if (!c.pass) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = checks;
  return j;
}

namespace {

std::string paint(const std::string& s, bool ok, bool color) {
  if (!color) return s;
  return (ok ? "\x1b[32m" : "\x1b[31m") + s + "\x1b[0m";
}

std::string join(const json& arr, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

}  // namespace

std::string report_text(const Report& r, bool color) {
  std::ostringstream os;
  const json& d = r.data;
  os << "scenario: " << r.scenario << "\n";
  if (d.contains("surface")) {
    const json& s = d["surface"];
    os << "surface: " << s["name"].get<std::string>() << " k2=" << s["k2"] << " b2=" << s["b2"]
       << " h1=" << s["h1"].get<std::string>() << "\n";
    os << "blow-ups: " << d["blowups"] << " -> k2=" << d["k2_blown_up"] << " b2=" << d["b2_blown_up"]
       << "\n";
  }
  if (d.contains("config_violations"))
    for (const auto& v : d["config_violations"]) os << "violation: " << v.get<std::string>() << "\n";
  if (d.contains("chains"))
    for (const auto& c : d["chains"]) {
      os << "chain " << c["name"].get<std::string>() << " [" << join(c["coeffs"], ",") << "] p="
         << c["p"].dump() << " q=" << c["q"].dump();
      if (c["class_t"].is_string())
        os << " rdp";
      else if (c["class_t"].is_object())
        os << " classT d=" << c["class_t"]["d"].dump() << " n=" << c["class_t"]["n"].dump()
           << " a=" << c["class_t"]["a"].dump();
      else
        os << " not-classT";
      os << "\n";
      for (const auto& v : c["binding_violations"]) os << "  binding: " << v.get<std::string>() << "\n";
    }
  if (d.contains("boundary_h1")) os << "boundary_h1: " << join(d["boundary_h1"], " ⊕ ") << "\n";
  if (d.contains("milnor_h1")) os << "milnor_h1: " << join(d["milnor_h1"], ", ") << "\n";
  if (d.contains("discrepancies"))
    for (auto it = d["discrepancies"].begin(); it != d["discrepancies"].end(); ++it)
      os << "discrepancies " << it.key() << ": " << join(it.value(), " ") << "\n";
  if (d.contains("nef")) {
    for (const auto& e : d["nef"]["entries"])
      os << "pullback " << e["curve"].get<std::string>() << ": " << e["degree"].get<std::string>()
         << " (" << e["sign"].get<std::string>() << (e["chain_member"].get<bool>() ? ", chain curve" : "")
         << ")\n";
    os << "nef on list: " << (d["nef"]["nef_on_list"].get<bool>() ? "yes" : "no")
       << "; strict: " << (d["nef"]["strict_on_list"].get<bool>() ? "yes" : "no")
       << "; coefficients positive: " << (d["nef"]["coefficients_positive"].get<bool>() ? "yes" : "no")
       << "\n";
  }
  if (d.contains("k2_contracted")) os << "k2: " << d["k2_contracted"].get<std::string>() << "\n";
  if (d.contains("partial_image"))
    os << "boundary image: order " << d["partial_image"]["order"].dump() << ", quotient "
       << d["partial_image"]["quotient"].get<std::string>() << "\n";
  if (d.contains("membership_certificates"))
    for (const auto& c : d["membership_certificates"])
      os << "membership " << c["name"].get<std::string>() << " (" << join(c["element"], ",")
         << "): " << (c["member"].get<bool>() ? "in image" : "not in image") << "\n";
  if (d.contains("h1_z0_undeclared"))
    os << "h1_z0 without declared relations: order " << d["h1_z0_undeclared"]["order"].dump()
       << ", candidates " << join(d["h1_z0_undeclared"]["candidates"], " | ") << "\n";
  if (d.contains("h1_z0") && d["h1_z0"]["group"].is_string())
    os << "h1_z0: " << d["h1_z0"]["group"].get<std::string>() << " (declared: "
       << join(d["h1_z0"]["declared_relations"], ", ") << ")\n";
  if (d.contains("provenance")) {
    const json& p = d["provenance"];
    auto counts = [](const json& c) {
      return "text " + c["text"].dump() + ", asserted " + c["asserted"].dump() + ", figure " +
             c["figure"].dump();
    };
    os << "provenance points: " << counts(p["points"]) << "\n";
    os << "provenance blow-ups: " << counts(p["blowups"]) << "\n";
    if (p.contains("checks")) os << "provenance checks: " << counts(p["checks"]) << "\n";
  }
  if (d.contains("assumptions"))
    for (const auto& a : d["assumptions"]) os << "assumption: " << a.get<std::string>() << "\n";
  if (d.contains("annotations"))
    for (const auto& a : d["annotations"])
      os << "annotation: " << a["claim"].get<std::string>() << " ["
         << (a["certificates_hold"].get<bool>() ? "certificates hold" : "certificates fail") << "]\n";
  for (const auto& c : r.checks) {
    os << paint(c.pass ? "PASS" : "FAIL", c.pass, color) << " " << c.field;
    if (!c.pass) os << ": " << c.detail;
    os << "\n";
  }
  if (!r.error_stage.empty()) os << paint("ERROR", false, color) << " [" << r.error_stage << "] " << r.error << "\n";
  os << "status: " << paint(r.passed() ? "pass" : "fail", r.passed(), color) << "\n";
  os << "h1_blowdown: ";
  if (d.contains("h1_blowdown") && d["h1_blowdown"].is_string())
    os << d["h1_blowdown"].get<std::string>();
  else
    os << "undetermined";
  os << "\n";
  return os.str();
}

}  // namespace blowdown
