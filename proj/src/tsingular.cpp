#include "blowdown/tsingular.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "blowdown/errors.hpp"

namespace blowdown {

namespace {

void check_entries(std::span<const long> chain) {
  if (chain.empty()) throw InputError("empty chain");
  for (long b : chain)
    if (b < 2) throw InputError("chain entry " + std::to_string(b) + " is below 2");
}

}  // namespace

std::optional<std::pair<std::int64_t, std::int64_t>> hj_eval_small(std::span<const long> chain) {
  std::int64_t num = 1, den = 0;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    std::int64_t t;
    if (__builtin_mul_overflow(static_cast<std::int64_t>(*it), num, &t)) return std::nullopt;
    if (__builtin_sub_overflow(t, den, &t)) return std::nullopt;
    den = num;
    num = t;
  }
  return std::make_pair(num, den);
}

std::pair<Integer, Integer> hj_eval(std::span<const long> chain) {
  check_entries(chain);
  if (auto small = hj_eval_small(chain))
    return {Integer(static_cast<long>(small->first)), Integer(static_cast<long>(small->second))};
  Integer num = 1, den = 0;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    Integer t = *it * num - den;
    den = num;
    num = t;
  }
  return {num, den};
}

bool hj_expand_small(std::int64_t p, std::int64_t q, long* out, std::size_t cap, std::size_t& len) {
  len = 0;
  while (q != 0) {
    if (len == cap) return false;
    const std::int64_t b = (p + q - 1) / q;
    out[len++] = static_cast<long>(b);
    const std::int64_t r = b * q - p;
    p = q;
    q = r;
  }
  return true;
}

Coeffs hj_expand(const Integer& p, const Integer& q) {
  if (!(sgn(q) > 0 && q < p) || gcd(p, q) != 1)
    throw InputError("hj_expand needs 0 < q < p with gcd 1, got p=" + p.get_str() +
                     " q=" + q.get_str());
  Coeffs out;
  Integer a = p, b = q;
  while (sgn(b) != 0) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    out.push_back(c.get_si());
    Integer r = c * b - a;
    a = b;
    b = r;
  }
  return out;
}

CyclicQuotientType classify_class_t(std::span<const long> chain) {
  auto [p, q] = hj_eval(chain);
  CyclicQuotientType t{p, q, false, std::nullopt};
  if (std::all_of(chain.begin(), chain.end(), [](long b) { return b == 2; })) {
    t.rdp = true;
    return t;
  }
  const Integer g = gcd(p, q + 1);
  const Integer n = p / g;
  if (n < 2 || !mpz_divisible_p(g.get_mpz_t(), n.get_mpz_t())) return t;
  const Integer a = (q + 1) / g;
  if (gcd(n, a) != 1) return t;
  t.class_t = ClassT{g / n, n, a};
  return t;
}

std::vector<Coeffs> wahl_enumerate(std::size_t max_len, bool include_rdp) {
  if (max_len > 12) throw InputError("wahl_enumerate: max_len is limited to 12");
  std::set<Coeffs> seen;
  std::vector<Coeffs> frontier;
  auto push = [&](Coeffs c) {
    if (c.size() <= max_len && seen.insert(c).second) frontier.push_back(std::move(c));
  };
  push({4});
  for (std::size_t d = 2; d <= max_len; ++d) {
    Coeffs c(d, 2);
    c.front() = 3;
    c.back() = 3;
    push(std::move(c));
  }
  while (!frontier.empty()) {
    Coeffs c = std::move(frontier.back());
    frontier.pop_back();
    Coeffs left{2};
    left.insert(left.end(), c.begin(), c.end());
    ++left.back();
    Coeffs right = c;
    ++right.front();
    right.push_back(2);
    push(std::move(left));
    push(std::move(right));
  }
  if (include_rdp)
    for (std::size_t k = 1; k <= max_len; ++k) seen.insert(Coeffs(k, 2));

  std::vector<Coeffs> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Coeffs& a, const Coeffs& b) { return a.size() < b.size(); });
  return out;
}

IntMatrix chain_matrix(std::span<const long> chain) {
  const std::size_t r = chain.size();
  IntMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    m(i, i) = -chain[i];
    if (i + 1 < r) m(i, i + 1) = m(i + 1, i) = 1;
  }
  return m;
}

BoundaryHomology boundary_homology(std::span<const long> chain) {
  check_entries(chain);
  Cokernel c = cokernel_coordinates(chain_matrix(chain));
  BoundaryHomology out{c.group, {}, c.projection};
  for (std::size_t j = 0; j < chain.size(); ++j) {
    IntVector e(chain.size());
    e[j] = 1;
    out.meridians.push_back(c.project(e));
  }
  return out;
}

FinAbGroup milnor_h1(const CyclicQuotientType& t) {
  if (t.rdp) return FinAbGroup{};
  if (!t.class_t)
    throw DomainError("p=" + t.p.get_str() + " q=" + t.q.get_str() + " is not of class T");
  return FinAbGroup::cyclic(t.class_t->n);
}

GroupMap boundary_to_milnor(const CyclicQuotientType& t) {
  const FinAbGroup target = milnor_h1(t);
  PresentedGroup src = PresentedGroup::from_group(FinAbGroup::cyclic(t.p), "g");
  PresentedGroup dst = PresentedGroup::from_group(target, "m");
  IntMatrix images(dst.num_generators(), 1);
  if (dst.num_generators() == 1) images(0, 0) = 1;
  return GroupMap(std::move(src), std::move(dst), std::move(images));
}

std::vector<std::string> check_chain_binding(const Configuration& cfg, const Chain& chain) {
  std::vector<std::string> out;
  const std::string label = chain.name.empty() ? format_chain(chain.coeffs) : chain.name;
  if (!chain.coeffs.empty() && chain.coeffs.size() != chain.curves.size()) {
    out.push_back(label + ": " + std::to_string(chain.coeffs.size()) + " coefficients for " +
                  std::to_string(chain.curves.size()) + " curves");
    return out;
  }
  std::set<CurveId> distinct(chain.curves.begin(), chain.curves.end());
  if (distinct.size() != chain.curves.size()) out.push_back(label + ": repeated curve");
  for (std::size_t i = 0; i < chain.curves.size(); ++i) {
    const Curve& c = cfg.curve(chain.curves[i]);
    if (c.genus != 0) out.push_back(label + ": " + c.name + " has genus " + std::to_string(c.genus));
    if (c.self_int > -2)
      out.push_back(label + ": " + c.name + " has self-intersection " +
                    std::to_string(c.self_int) + " > -2");
    if (!chain.coeffs.empty() && c.self_int != -chain.coeffs[i])
      out.push_back(label + ": " + c.name + " has self-intersection " +
                    std::to_string(c.self_int) + ", chain says " +
                    std::to_string(-chain.coeffs[i]));
    for (std::size_t j = i + 1; j < chain.curves.size(); ++j) {
      const long k = intersection_number(cfg, chain.curves[i], chain.curves[j]);
      const long want = j == i + 1 ? 1 : 0;
      if (k != want)
        out.push_back(label + ": " + c.name + "." + cfg.curve(chain.curves[j]).name + " = " +
                      std::to_string(k) + ", expected " + std::to_string(want));
    }
  }
  return out;
}

Coeffs chain_coeffs(const Configuration& cfg, std::span<const CurveId> curves) {
  Coeffs out;
  for (CurveId id : curves) out.push_back(-cfg.curve(id).self_int);
  return out;
}

Coeffs parse_chain(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') body.erase(body.begin());
  if (!body.empty() && body.back() == ']') body.pop_back();
  Coeffs out;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size())
      throw InputError("malformed chain '" + s + "': bad entry '" + tok + "'");
    if (v < 2) throw InputError("malformed chain '" + s + "': entry " + tok + " is below 2");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("malformed chain '" + s + "': no entries");
  return out;
}

std::string format_chain(std::span<const long> chain) {
  std::string s = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(chain[i]);
  }
  return s + "]";
}

}  // namespace blowdown
