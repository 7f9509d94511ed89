#include "blowdown/canonical.hpp"

#include "blowdown/errors.hpp"

namespace blowdown {

namespace {

RatVector solve_chain_system(const IntMatrix& q, const RatVector& rhs, const std::string& label) {
  auto c = solve_rational(q, rhs);
  if (!c) throw DomainError(label + ": chain intersection matrix is singular");
  return *c;
}

}  // namespace

QDivisor discrepancies(const Configuration& cfg, const Chain& chain) {
  const std::size_t r = chain.curves.size();
  IntMatrix q(r, r);
  RatVector rhs(r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < r; ++i)
      q(j, i) = intersection_number(cfg, chain.curves[i], chain.curves[j]);
    rhs[j] = -canonical_degree(cfg, chain.curves[j]);
  }
  const RatVector c = solve_chain_system(q, rhs, chain.name);
  QDivisor out;
  for (std::size_t i = 0; i < r; ++i) out[chain.curves[i]] = c[i];
  return out;
}

RatVector discrepancies(std::span<const long> chain) {
  RatVector rhs;
  for (long b : chain) rhs.emplace_back(2 - b);
  return solve_chain_system(chain_matrix(chain), rhs, format_chain(chain));
}

PullbackDegree pullback_degree(const Configuration& cfg, std::span<const Chain> chains,
                               const std::map<CurveId, long>& combination) {
  PullbackDegree out;
  out.value = 0;
  bool all_members = !combination.empty();
  for (const auto& [c, mult] : combination) {
    bool member = false;
    for (const auto& ch : chains)
      for (CurveId u : ch.curves) member = member || u == c;
    all_members = all_members && member;
    out.value += Rational(mult * canonical_degree(cfg, c));
  }
  for (const auto& ch : chains) {
    const QDivisor d = discrepancies(cfg, ch);
    for (const auto& [u, coef] : d) {
      long dot = 0;
      for (const auto& [c, mult] : combination) dot += mult * intersection_number(cfg, u, c);
      if (dot != 0) out.value += coef * dot;
    }
  }
  out.value.canonicalize();
  out.chain_member = all_members;
  return out;
}

PullbackDegree pullback_degree(const Configuration& cfg, std::span<const Chain> chains, CurveId c) {
  return pullback_degree(cfg, chains, std::map<CurveId, long>{{c, 1}});
}

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "?";
}

Sign sign_of(const Rational& r) {
  const int s = sgn(r);
  return s < 0 ? Sign::Negative : s == 0 ? Sign::Zero : Sign::Positive;
}

NefReport nef_report(const Configuration& cfg, std::span<const Chain> chains,
                     std::span<const CurveId> test_curves) {
  NefReport rep;
  for (CurveId c : test_curves) {
    const PullbackDegree d = pullback_degree(cfg, chains, c);
    NefEntry e{c, cfg.curve(c).name, d.value, sign_of(d.value), d.chain_member};
    if (e.sign == Sign::Negative) rep.nef_on_list = false;
    if (!e.chain_member && e.sign != Sign::Positive) rep.strict_on_list = false;
    rep.entries.push_back(std::move(e));
  }
  for (const auto& ch : chains)
    for (const auto& [u, coef] : discrepancies(cfg, ch))
      if (sgn(coef) <= 0) rep.coefficients_positive = false;
  return rep;
}

Rational k_squared_contracted(const Configuration& cfg, std::span<const Chain> chains) {
  for (std::size_t a = 0; a < chains.size(); ++a)
    for (std::size_t b = a + 1; b < chains.size(); ++b)
      for (CurveId u : chains[a].curves)
        for (CurveId v : chains[b].curves)
          if (u == v || intersection_number(cfg, u, v) != 0)
            throw InputError("chains " + chains[a].name + " and " + chains[b].name +
                             " are not disjoint (" + cfg.curve(u).name + ", " +
                             cfg.curve(v).name + ")");
  Rational k2 = cfg.k2();
  for (const auto& ch : chains)
    for (const auto& [u, coef] : discrepancies(cfg, ch)) k2 += coef * canonical_degree(cfg, u);
  k2.canonicalize();
  return k2;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

}  // namespace blowdown
