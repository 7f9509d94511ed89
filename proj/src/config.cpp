#include "blowdown/config.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "blowdown/errors.hpp"

namespace blowdown {

const char* to_string(Origin o) { return o == Origin::Given ? "given" : "exceptional"; }

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Text: return "text";
    case Provenance::Asserted: return "asserted";
    case Provenance::Figure: return "figure";
  }
  return "?";
}

Provenance parse_provenance(const std::string& s) {
  if (s == "text") return Provenance::Text;
  if (s == "asserted") return Provenance::Asserted;
  if (s == "figure") return Provenance::Figure;
  throw InputError("unknown provenance '" + s + "' (expected text, asserted or figure)");
}

Configuration::Configuration(std::string surface, long k2, long b2, FinAbGroup h1_ambient)
    : surface_(std::move(surface)),
      k2_(k2),
      b2_(b2),
      initial_k2_(k2),
      initial_b2_(b2),
      h1_ambient_(std::move(h1_ambient)) {
  if (b2 < 0) throw InputError("b2 must be non-negative");
}

CurveId Configuration::add_curve(std::string name, long genus, long self_int, Origin origin) {
  if (name.empty()) throw InputError("curve name must not be empty");
  if (find_curve(name)) throw InputError("duplicate curve name '" + name + "'");
  if (genus < 0) throw InputError("curve '" + name + "' has negative genus");
  const CurveId id = next_curve_++;
  curves_[id] = Curve{id, std::move(name), genus, self_int, 2 * genus - 2 - self_int, origin, 0};
  return id;
}

PointId Configuration::add_point(std::string name, std::vector<Branch> branches,
                                 Provenance provenance, std::string citation) {
  if (name.empty()) name = "p" + std::to_string(next_point_);
  if (find_point(name)) throw InputError("duplicate point name '" + name + "'");
  if (branches.empty()) throw InputError("point '" + name + "' has no branches");
  for (const auto& b : branches) {
    if (!curves_.count(b.curve))
      throw InputError("point '" + name + "' references unknown curve id " +
                       std::to_string(b.curve));
    if (b.multiplicity < 1)
      throw InputError("point '" + name + "' has multiplicity < 1 on curve '" +
                       curves_.at(b.curve).name + "'");
  }
  const PointId id = next_point_++;
  points_[id] = IntersectionPoint{id, std::move(name), std::move(branches), provenance,
                                  std::move(citation)};
  return id;
}

const Curve& Configuration::curve(CurveId id) const {
  auto it = curves_.find(id);
  if (it == curves_.end()) throw InputError("unknown curve id " + std::to_string(id));
  return it->second;
}

const IntersectionPoint& Configuration::point(PointId id) const {
  auto it = points_.find(id);
  if (it == points_.end()) throw InputError("unknown point id " + std::to_string(id));
  return it->second;
}

std::optional<CurveId> Configuration::find_curve(const std::string& name) const {
  for (const auto& [id, c] : curves_)
    if (c.name == name) return id;
  return std::nullopt;
}

std::optional<PointId> Configuration::find_point(const std::string& name) const {
  for (const auto& [id, p] : points_)
    if (p.name == name) return id;
  return std::nullopt;
}

CurveId Configuration::curve_id(const std::string& name) const {
  if (auto id = find_curve(name)) return *id;
  throw InputError("unknown curve '" + name + "'");
}

PointId Configuration::point_id(const std::string& name) const {
  if (auto id = find_point(name)) return *id;
  throw InputError("unknown point '" + name + "'");
}

struct BlowupAccess {
  static BlowupResult run(const Configuration& in, const PointSpec& spec, std::string name) {
    Configuration cfg = in;
    std::vector<Branch> branches;
    std::string point_name;
    Provenance provenance;
    std::string citation;

    if (const auto* ref = std::get_if<PointRef>(&spec)) {
      const IntersectionPoint& p = cfg.point(ref->point);
      branches = p.branches;
      point_name = p.name;
      provenance = p.provenance;
      citation = p.citation;
      cfg.points_.erase(ref->point);
    } else {
      const auto& fresh = std::get<FreshPoint>(spec);
      if (fresh.branches.empty() || fresh.branches.size() > 2)
        throw InputError("a fresh blow-up centre must lie on one or two curves");
      for (const auto& b : fresh.branches) {
        cfg.curve(b.curve);
        if (b.multiplicity < 1) throw InputError("multiplicity < 1 at fresh blow-up centre");
      }
      branches = fresh.branches;
      provenance = fresh.provenance;
      citation = fresh.citation;
      point_name = "fresh:";
      for (std::size_t i = 0; i < branches.size(); ++i)
        point_name += (i ? "." : "") + cfg.curve(branches[i].curve).name;
    }

    if (name.empty()) name = "e" + std::to_string(cfg.history_.size() + 1);
    std::map<CurveId, long> mult;
    for (const auto& b : branches) mult[b.curve] += b.multiplicity;
    for (const auto& [id, m] : mult) {
      Curve& c = cfg.curves_.at(id);
      if (c.genus - m * (m - 1) / 2 < 0)
        throw InputError("blow-up would give curve '" + c.name + "' negative genus");
      c.self_int -= m * m;
      c.k_degree += m;
      c.genus -= m * (m - 1) / 2;
      ++c.transforms;
    }
    const CurveId e = cfg.add_curve(name, 0, -1, Origin::Exceptional);
    for (const auto& b : branches) {
      std::string pname = name + ":" + cfg.curve(b.curve).name;
      for (int k = 2; cfg.find_point(pname); ++k)
        pname = name + ":" + cfg.curve(b.curve).name + "#" + std::to_string(k);
      cfg.add_point(pname, {Branch{e, 1}, b}, provenance, citation);
    }

    cfg.k2_ -= 1;
    cfg.b2_ += 1;
    cfg.history_.push_back(BlowupRecord{point_name, e, branches, provenance});
    return BlowupResult{std::move(cfg), e};
  }
};

BlowupResult blow_up(const Configuration& cfg, const PointSpec& p, std::string exceptional_name) {
  return BlowupAccess::run(cfg, p, std::move(exceptional_name));
}

long intersection_number(const Configuration& cfg, CurveId a, CurveId b) {
  if (a == b) return cfg.curve(a).self_int;
  cfg.curve(a);
  cfg.curve(b);
  long total = 0;
  for (const auto& [id, p] : cfg.points()) {
    long ma = 0, mb = 0;
    for (const auto& br : p.branches) {
      if (br.curve == a) ma += br.multiplicity;
      if (br.curve == b) mb += br.multiplicity;
    }
    total += ma * mb;
  }
  return total;
}

long canonical_degree(const Configuration& cfg, CurveId c) {
  const Curve& cv = cfg.curve(c);
  return 2 * cv.genus - 2 - cv.self_int;
}

std::vector<std::string> validate(const Configuration& cfg) {
  std::vector<std::string> out;
  for (const auto& [id, c] : cfg.curves()) {
    if (c.genus < 0) out.push_back("curve " + c.name + ": negative genus");
    const long expected = 2 * c.genus - 2 - c.self_int;
    if (c.k_degree != expected)
      out.push_back("curve " + c.name + ": adjunction violated, stored K.C = " +
                    std::to_string(c.k_degree) + ", 2g-2-C^2 = " + std::to_string(expected));
  }
  for (const auto& [id, p] : cfg.points()) {
    if (p.branches.empty()) out.push_back("point " + p.name + ": no branches");
    for (const auto& b : p.branches) {
      if (!cfg.curves().count(b.curve))
        out.push_back("point " + p.name + ": references missing curve id " +
                      std::to_string(b.curve));
      if (b.multiplicity < 1) out.push_back("point " + p.name + ": multiplicity < 1");
    }
  }
  const long n = static_cast<long>(cfg.history().size());
  if (cfg.b2() != cfg.initial_b2() + n)
    out.push_back("b2 = " + std::to_string(cfg.b2()) + " but initial b2 + blow-ups = " +
                  std::to_string(cfg.initial_b2() + n));
  if (cfg.k2() != cfg.initial_k2() - n)
    out.push_back("k2 = " + std::to_string(cfg.k2()) + " but initial k2 - blow-ups = " +
                  std::to_string(cfg.initial_k2() - n));
  for (const auto& rec : cfg.history())
    if (!cfg.curves().count(rec.exceptional))
      out.push_back("blow-up at " + rec.point + ": exceptional curve missing");
  return out;
}

std::string to_dot(const Configuration& cfg) {
  std::ostringstream os;
  os << "graph \"" << cfg.surface() << "\" {\n";
  for (const auto& [id, c] : cfg.curves())
    os << "  c" << id << " [label=\"" << c.name << "/" << c.self_int << "\"];\n";
  std::set<std::pair<CurveId, CurveId>> done;
  for (const auto& [id, p] : cfg.points())
    for (std::size_t i = 0; i < p.branches.size(); ++i)
      for (std::size_t j = i + 1; j < p.branches.size(); ++j) {
        CurveId a = std::min(p.branches[i].curve, p.branches[j].curve);
        CurveId b = std::max(p.branches[i].curve, p.branches[j].curve);
        if (a == b || !done.insert({a, b}).second) continue;
        const long k = intersection_number(cfg, a, b);
        os << "  c" << a << " -- c" << b;
        if (k > 1) os << " [label=\"" << k << "\"]";
        os << ";\n";
      }
  os << "}\n";
  return os.str();
}

}  // namespace blowdown
