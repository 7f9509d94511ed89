#pragma once
// Brute-force reference implementations. Plain long arithmetic, small inputs only.

#include <gmpxx.h>

#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<long>;

inline long mod(long x, long m) { return ((x % m) + m) % m; }

/// Subgroup of Z/m_1 + ... + Z/m_k generated by `gens`, by closure.
inline std::set<Vec> subgroup(const std::vector<Vec>& gens, const Vec& moduli) {
  std::set<Vec> seen{Vec(moduli.size(), 0)};
  std::vector<Vec> frontier{Vec(moduli.size(), 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Vec y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = mod(x[i] + g[i], moduli[i]);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline bool member(const std::vector<Vec>& gens, const Vec& x, const Vec& moduli) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod(x[i], moduli[i]);
  return subgroup(gens, moduli).count(r) > 0;
}

inline long group_size(const Vec& moduli) {
  long n = 1;
  for (long m : moduli) n *= m;
  return n;
}

/// For each d in 1..max_d, the number of elements y of G/H with d*y = 0.
/// These counts determine a finite abelian group up to isomorphism.
inline std::vector<long> quotient_profile(const std::vector<Vec>& gens, const Vec& moduli, long max_d) {
  const auto h = subgroup(gens, moduli);
  const long total = group_size(moduli);
  std::vector<long> out;
  for (long d = 1; d <= max_d; ++d) {
    long killed = 0;
    Vec x(moduli.size(), 0);
    for (long idx = 0; idx < total; ++idx) {
      long rest = idx;
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        x[i] = rest % moduli[i];
        rest /= moduli[i];
      }
      Vec dx(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) dx[i] = mod(d * x[i], moduli[i]);
      if (h.count(dx)) ++killed;
    }
    out.push_back(killed / static_cast<long>(h.size()));
  }
  return out;
}

/// The same profile for Z/t_1 + ... + Z/t_k.
inline std::vector<long> cyclic_profile(const Vec& factors, long max_d) {
  std::vector<long> out;
  for (long d = 1; d <= max_d; ++d) {
    long n = 1;
    for (long t : factors) n *= std::gcd(d, t);
    out.push_back(n);
  }
  return out;
}

/// Cofactor expansion.
inline long det(const std::vector<Vec>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  long s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Vec> minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    s += (c % 2 ? -1 : 1) * a[0][c] * det(minor);
  }
  return s;
}

/// |Z^n / A Z^n| for nonsingular square A: D Z^n lies in A Z^n with D = |det A|,
/// so the index is that of the columns in (Z/D)^n.
inline long lattice_index(const std::vector<Vec>& a) {
  const long d = std::labs(det(a));
  if (d == 0) return 0;
  const std::size_t n = a.size();
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < n; ++c) {
    Vec col;
    for (std::size_t r = 0; r < n; ++r) col.push_back(mod(a[r][c], d));
    cols.push_back(col);
  }
  const Vec moduli(n, d);
  return group_size(moduli) / static_cast<long>(subgroup(cols, moduli).size());
}

/// b_1 - 1/(b_2 - ... - 1/b_r) evaluated from the back in rationals.
inline mpq_class hj_value(const std::vector<long>& chain) {
  mpq_class x = chain.back();
  for (std::size_t i = chain.size() - 1; i-- > 0;) {
    x = mpq_class(chain[i]) - 1 / x;
    x.canonicalize();
  }
  return x;
}

struct TData {
  long d, n, a;
};

/// Searches p = d n^2, q = d n a - 1 with n >= 2, 0 < a < n, gcd(n, a) = 1.
inline std::optional<TData> class_t_search(long p, long q) {
  for (long n = 2; n * n <= p; ++n) {
    if (p % (n * n)) continue;
    const long d = p / (n * n);
    for (long a = 1; a < n; ++a)
      if (std::gcd(n, a) == 1 && d * n * a - 1 == q) return TData{d, n, a};
  }
  return std::nullopt;
}

/// Every chain of length <= max_len with entries in [2, max_entry].
inline std::vector<std::vector<long>> all_chains(std::size_t max_len, long max_entry) {
  std::vector<std::vector<long>> out;
  std::vector<std::vector<long>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<long>> next;
    for (const auto& c : layer)
      for (long b = 2; b <= max_entry; ++b) {
        auto e = c;
        e.push_back(b);
        next.push_back(e);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// (K + sum c_i u_i).u_j for the bare chain, with K.u_j = b_j - 2.
inline std::vector<mpq_class> discrepancy_residual(const std::vector<long>& chain,
                                                   const std::vector<mpq_class>& c) {
  std::vector<mpq_class> out;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    mpq_class s = chain[j] - 2;
    s -= c[j] * chain[j];
    if (j > 0) s += c[j - 1];
    if (j + 1 < chain.size()) s += c[j + 1];
    out.push_back(s);
  }
  return out;
}

}  // namespace oracle
