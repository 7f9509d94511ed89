#include "blowdown/homology.hpp"

#include <algorithm>
#include <set>

#include "blowdown/errors.hpp"

namespace blowdown {

namespace {

constexpr std::size_t kCandidateCap = 100000;

bool is_chain_curve(std::span<const Chain> chains, CurveId c) {
  for (const auto& ch : chains)
    if (std::find(ch.curves.begin(), ch.curves.end(), c) != ch.curves.end()) return true;
  return false;
}

}  // namespace

Integer BoundaryGroup::order() const {
  Integer n = 1;
  for (const auto& m : moduli) n *= m;
  return n;
}

FinAbGroup BoundaryGroup::canonical() const { return FinAbGroup::from_cyclic_orders(moduli); }

IntVector BoundaryGroup::reduce(IntVector x) const {
  if (x.size() != moduli.size())
    throw InputError("boundary element has " + std::to_string(x.size()) + " coordinates, expected " +
                     std::to_string(moduli.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    mpz_fdiv_r(x[i].get_mpz_t(), x[i].get_mpz_t(), moduli[i].get_mpz_t());
  return x;
}

std::string BoundaryGroup::to_string() const {
  if (summands.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) s += " ⊕ ";
    s += summands[i].to_string();
  }
  return s;
}

BoundaryGroup boundary_group(std::span<const Chain> chains) {
  BoundaryGroup bg;
  const std::size_t k = chains.size();
  for (std::size_t i = 0; i < k; ++i) {
    const BoundaryHomology h = boundary_homology(chains[i].coeffs);
    bg.summands.push_back(h.group);
    bg.moduli.push_back(*h.group.order());
    std::vector<IntVector> mer;
    for (const auto& m : h.meridians) {
      IntVector x(k);
      if (!m.empty()) x[i] = m[0];
      mer.push_back(std::move(x));
    }
    bg.meridians.push_back(std::move(mer));
  }
  return bg;
}

IntVector boundary_image(const Configuration& cfg, std::span<const Chain> chains,
                         const BoundaryGroup& bg, const RelationClass& cls) {
  for (const auto& [c, mult] : cls.combination) cfg.curve(c);
  IntVector x(bg.size());
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = 0; j < chains[i].curves.size(); ++j) {
      const CurveId u = chains[i].curves[j];
      long dot = 0;
      if (cls.intersections) {
        auto it = cls.intersections->find(u);
        if (it != cls.intersections->end()) dot = it->second;
      } else {
        for (const auto& [c, mult] : cls.combination) dot += mult * intersection_number(cfg, c, u);
      }
      if (dot == 0) continue;
      for (std::size_t t = 0; t < x.size(); ++t) x[t] += dot * bg.meridians[i][j][t];
    }
  return bg.reduce(std::move(x));
}

RelationClass curve_class(const Configuration& cfg, std::span<const Chain> chains, CurveId c) {
  RelationClass cls{cfg.curve(c).name, {{c, 1}}, std::nullopt, Provenance::Text};
  for (const auto& [id, p] : cfg.points()) {
    bool on_c = false, on_chain = false;
    for (const auto& b : p.branches) {
      if (b.curve == c)
        on_c = true;
      else if (is_chain_curve(chains, b.curve))
        on_chain = true;
    }
    if (on_c && on_chain) cls.provenance = worst(cls.provenance, p.provenance);
  }
  return cls;
}

bool PartialImage::contains(std::span<const Integer> x) const {
  return in_subgroup(generators, x, moduli);
}

FinAbGroup PartialImage::quotient() const {
  std::vector<IntVector> cols = generators;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    IntVector e(moduli.size());
    e[i] = moduli[i];
    cols.push_back(std::move(e));
  }
  return cokernel_coordinates(IntMatrix::from_columns(cols, moduli.size())).group;
}

Integer PartialImage::index() const { return *quotient().order(); }

Integer PartialImage::order() const {
  Integer total = 1;
  for (const auto& m : moduli) total *= m;
  return total / index();
}

PartialImage partial_image_subgroup(const Configuration& cfg, std::span<const Chain> chains,
                                    const BoundaryGroup& bg, std::span<const RelationClass> classes) {
  PartialImage img{bg.moduli, {}};
  for (const auto& cls : classes) {
    IntVector x = boundary_image(cfg, chains, bg, cls);
    if (std::any_of(x.begin(), x.end(), [](const Integer& v) { return sgn(v) != 0; }))
      img.generators.push_back(std::move(x));
  }
  return img;
}

Z0Result h1_z0(const BoundaryGroup& bg, const PartialImage& image, const FinAbGroup& h1_ambient,
               const std::vector<std::string>& ambient_names, std::span<const LiftRelation> declared) {
  if (!h1_ambient.is_finite()) throw InputError("ambient H1 must be finite");
  const std::size_t k = bg.size();
  const std::size_t m = h1_ambient.num_coordinates();
  if (ambient_names.size() != m)
    throw InputError("ambient H1 " + h1_ambient.to_string() + " needs " + std::to_string(m) +
                     " generator names, got " + std::to_string(ambient_names.size()));

  std::vector<std::string> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back("g" + std::to_string(i + 1));
  gens.insert(gens.end(), ambient_names.begin(), ambient_names.end());
  const std::size_t ng = gens.size();

  std::vector<IntVector> base;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector r(ng);
    r[i] = bg.moduli[i];
    base.push_back(std::move(r));
  }
  for (const auto& g : image.generators) {
    IntVector r(ng);
    std::copy(g.begin(), g.end(), r.begin());
    base.push_back(std::move(r));
  }

  std::vector<bool> pinned(m, false);
  for (const auto& rel : declared) {
    auto it = std::find(ambient_names.begin(), ambient_names.end(), rel.generator);
    if (it == ambient_names.end())
      throw InputError("declared relation '" + rel.name + "' names unknown generator '" +
                       rel.generator + "'");
    if (rel.boundary_element.size() != k)
      throw InputError("declared relation '" + rel.name + "' has " +
                       std::to_string(rel.boundary_element.size()) +
                       " boundary coordinates, expected " + std::to_string(k));
    const std::size_t j = static_cast<std::size_t>(it - ambient_names.begin());
    pinned[j] = true;
    IntVector r(ng);
    r[k + j] = rel.multiple;
    for (std::size_t i = 0; i < k; ++i) r[i] = -rel.boundary_element[i];
    base.push_back(std::move(r));
  }

  Z0Result out;
  out.order = image.index() * *h1_ambient.order();
  out.basis_note = "g1..g" + std::to_string(k) +
                   " are the canonical boundary generators of the chains in order";
  for (const auto& n : ambient_names) out.basis_note += "; " + n + " lifts an ambient generator";

  auto make = [&](const std::vector<IntVector>& rows) {
    return PresentedGroup(gens, IntMatrix::from_rows(rows, ng));
  };

  std::vector<std::size_t> free_lifts;
  for (std::size_t j = 0; j < m; ++j)
    if (!pinned[j]) free_lifts.push_back(j);

  if (free_lifts.empty()) {
    out.presentation = make(base);
    const FinAbGroup g = out.presentation.group();
    if (!g.is_finite() || *g.order() != out.order)
      throw ConsistencyError("declared relations give " + g.to_string() + ", but the boundary " +
                             "image and ambient H1 force order " + out.order.get_str());
    out.group = g;
    out.candidates = {g};
    return out;
  }

  // Enumerate a_j * lift_j = kappa_j over kappa_j in B / image for each
  // undeclared lift; every extension class is realised this way.
  std::vector<IntVector> cols = image.generators;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector e(k);
    e[i] = bg.moduli[i];
    cols.push_back(std::move(e));
  }
  const Cokernel quot = cokernel_coordinates(IntMatrix::from_columns(cols, k));
  const IntVector qmod = quot.group.moduli();
  const std::size_t qc = qmod.size();

  Integer total = 1;
  for (std::size_t f = 0; f < free_lifts.size(); ++f)
    for (std::size_t t = 0; t < qc; ++t) total *= qmod[t];
  out.candidates_complete = total <= kCandidateCap;
  const std::size_t count = out.candidates_complete ? total.get_ui() : kCandidateCap;

  std::vector<FinAbGroup> found;
  IntVector digits(free_lifts.size() * qc);
  for (std::size_t iter = 0; iter < count; ++iter) {
    std::vector<IntVector> rows = base;
    for (std::size_t f = 0; f < free_lifts.size(); ++f) {
      const std::size_t j = free_lifts[f];
      IntVector kappa(digits.begin() + static_cast<std::ptrdiff_t>(f * qc),
                      digits.begin() + static_cast<std::ptrdiff_t>((f + 1) * qc));
      const IntVector lifted = quot.lift(kappa);
      IntVector r(ng);
      r[k + j] = h1_ambient.torsion()[j];
      for (std::size_t i = 0; i < k; ++i) r[i] = -lifted[i];
      rows.push_back(std::move(r));
    }
    FinAbGroup g = make(rows).group();
    if (std::find(found.begin(), found.end(), g) == found.end()) found.push_back(g);
    for (std::size_t d = 0; d < digits.size(); ++d) {
      digits[d] += 1;
      if (digits[d] < qmod[d % qc]) break;
      digits[d] = 0;
    }
  }
  std::sort(found.begin(), found.end());
  out.candidates = std::move(found);
  out.presentation = make(base);
  return out;
}

FinAbGroup mv_blowdown_h1(const PresentedGroup& z0, std::span<const GroupMap> to_milnor,
                          std::span<const IntVector> image_in_z0) {
  if (to_milnor.size() != image_in_z0.size())
    throw InputError("one z0 image is needed per chain");
  std::vector<std::string> gens = z0.generators();
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < to_milnor.size(); ++i) {
    if (to_milnor[i].source().num_generators() != 1)
      throw InputError("boundary group of chain " + std::to_string(i + 1) + " is not cyclic");
    offset.push_back(gens.size());
    for (const auto& g : to_milnor[i].target().generators())
      gens.push_back(g + "_" + std::to_string(i + 1));
  }
  const std::size_t ng = gens.size();
  const std::size_t n0 = z0.num_generators();

  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < z0.relations().rows(); ++r) {
    IntVector row(ng);
    for (std::size_t c = 0; c < n0; ++c) row[c] = z0.relations()(r, c);
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < to_milnor.size(); ++i) {
    const PresentedGroup& t = to_milnor[i].target();
    for (std::size_t r = 0; r < t.relations().rows(); ++r) {
      IntVector row(ng);
      for (std::size_t c = 0; c < t.num_generators(); ++c) row[offset[i] + c] = t.relations()(r, c);
      rows.push_back(std::move(row));
    }
    if (image_in_z0[i].size() != n0)
      throw InputError("z0 image of chain " + std::to_string(i + 1) + " has " +
                       std::to_string(image_in_z0[i].size()) + " coordinates, z0 has " +
                       std::to_string(n0) + " generators");
    IntVector row(ng);
    for (std::size_t c = 0; c < n0; ++c) row[c] = image_in_z0[i][c];
    for (std::size_t c = 0; c < t.num_generators(); ++c)
      row[offset[i] + c] = to_milnor[i].images()(c, 0);
    rows.push_back(std::move(row));
  }
  return quotient(PresentedGroup::free(gens), rows);
}

}  // namespace blowdown
