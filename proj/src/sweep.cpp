#include "blowdown/sweep.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "blowdown/canonical.hpp"

namespace blowdown {

namespace {

using Check = std::function<std::string(std::uint64_t)>;

// `check` returns an empty string on success and a description otherwise.
SweepResult run_serial(std::uint64_t n, const Check& check) {
  SweepResult r;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::string msg = check(i);
    ++r.checked;
    if (msg.empty()) continue;
    if (r.failures++ == 0) r.first_failure = std::move(msg);
  }
  return r;
}

SweepResult run_parallel(std::uint64_t n, const Check& check) {
  std::uint64_t failures = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  std::string first_msg;
  const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4096) reduction(+ : failures)
  for (std::int64_t i = 0; i < sn; ++i) {
    std::string msg = check(static_cast<std::uint64_t>(i));
    if (msg.empty()) continue;
    ++failures;
#pragma omp critical(blowdown_sweep_first)
    if (static_cast<std::uint64_t>(i) < first) {
      first = static_cast<std::uint64_t>(i);
      first_msg = std::move(msg);
    }
  }
  return SweepResult{n, failures, first_msg};
}

SweepResult run(std::uint64_t n, Exec exec, const Check& check) {
  return exec == Exec::Serial ? run_serial(n, check) : run_parallel(n, check);
}

SweepResult merge(SweepResult a, const SweepResult& b) {
  a.checked += b.checked;
  if (a.failures == 0) a.first_failure = b.first_failure;
  a.failures += b.failures;
  return a;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// The idx-th chain of length len in the box, most significant entry first.
void decode(std::uint64_t idx, std::size_t len, long max_entry, long* out) {
  const auto base = static_cast<std::uint64_t>(max_entry - 1);
  for (std::size_t k = len; k-- > 0;) {
    out[k] = 2 + static_cast<long>(idx % base);
    idx /= base;
  }
}

}  // namespace

std::uint64_t chain_box_size(std::size_t max_len, long max_entry) {
  std::uint64_t total = 0;
  for (std::size_t len = 1; len <= max_len; ++len)
    total += ipow(static_cast<std::uint64_t>(max_entry - 1), len);
  return total;
}

SweepResult hj_roundtrip_sweep(std::size_t max_len, long max_entry, Exec exec) {
  SweepResult total;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::uint64_t n = ipow(static_cast<std::uint64_t>(max_entry - 1), len);
    total = merge(total, run(n, exec, [&](std::uint64_t i) -> std::string {
      long chain[16];
      long back[16];
      decode(i, len, max_entry, chain);
      const std::span<const long> c(chain, len);
      const auto pq = hj_eval_small(c);
      if (!pq) return format_chain(c) + ": word-size overflow";
      const auto [p, q] = *pq;
      if (!(0 < q && q < p) || std::gcd(p, q) != 1)
        return format_chain(c) + ": invalid (p,q)=(" + std::to_string(p) + "," +
               std::to_string(q) + ")";
      std::size_t got = 0;
      if (!hj_expand_small(p, q, back, 16, got) || got != len || !std::equal(chain, chain + len, back))
        return format_chain(c) + ": expansion of (" + std::to_string(p) + "," + std::to_string(q) +
               ") differs";
      return {};
    }));
  }
  return total;
}

SweepResult classify_vs_wahl_sweep(std::size_t max_len, long max_entry, Exec exec) {
  const std::vector<Coeffs> wahl = wahl_enumerate(max_len);
  const std::set<Coeffs> members(wahl.begin(), wahl.end());
  std::uint64_t in_box = 0;
  for (const auto& w : wahl)
    if (*std::max_element(w.begin(), w.end()) <= max_entry) ++in_box;

  SweepResult total;
  std::uint64_t found = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::uint64_t n = ipow(static_cast<std::uint64_t>(max_entry - 1), len);
    std::vector<char> hit(n, 0);
    total = merge(total, run(n, exec, [&](std::uint64_t i) -> std::string {
      Coeffs c(len);
      decode(i, len, max_entry, c.data());
      const bool t = classify_class_t(c).is_class_t();
      const bool w = members.count(c) > 0;
      hit[i] = t;
      if (t == w) return {};
      return format_chain(c) + (t ? ": classified as class T, not enumerated"
                                  : ": enumerated, not classified as class T");
    }));
    found += static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
  }
  ++total.checked;
  if (found != in_box) {
    if (total.failures++ == 0)
      total.first_failure = "class-T count " + std::to_string(found) + " vs enumeration " +
                            std::to_string(in_box);
  }
  return total;
}

SweepResult coker_order_sweep(std::span<const Coeffs> chains, Exec exec) {
  return run(chains.size(), exec, [&](std::uint64_t i) -> std::string {
    const Coeffs& c = chains[i];
    const auto bh = boundary_homology(c);
    const Integer p = hj_eval(c).first;
    if (bh.group.order() == p && bh.group.is_cyclic()) return {};
    return format_chain(c) + ": coker " + bh.group.to_string() + ", p=" + p.get_str();
  });
}

SweepResult snf_sweep(std::span<const IntMatrix> matrices, Exec exec) {
  return run(matrices.size(), exec, [&](std::uint64_t i) -> std::string {
    const IntMatrix& a = matrices[i];
    const SmithForm f = snf(a);
    const std::string tag = "matrix " + std::to_string(i) + " (" + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ")";
    if (!(f.U * a * f.V == f.S)) return tag + ": U A V != S";
    if (!(f.U * f.U_inverse == IntMatrix::identity(a.rows()))) return tag + ": U U^-1 != I";
    if (abs(determinant(f.U)) != 1) return tag + ": U not unimodular";
    if (abs(determinant(f.V)) != 1) return tag + ": V not unimodular";
    if (!f.S.is_diagonal()) return tag + ": S not diagonal";
    const std::size_t d = std::min(a.rows(), a.cols());
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(f.S(k, k)) < 0) return tag + ": negative diagonal";
      if (k + 1 < d) {
        const Integer& x = f.S(k, k);
        const Integer& y = f.S(k + 1, k + 1);
        const bool divides = sgn(x) == 0 ? sgn(y) == 0 : mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t());
        if (!divides) return tag + ": divisibility fails at " + std::to_string(k);
      }
    }
    return {};
  });
}

SweepResult discrepancy_sweep(std::span<const Coeffs> chains, Exec exec) {
  return run(chains.size(), exec, [&](std::uint64_t i) -> std::string {
    const Coeffs& b = chains[i];
    const RatVector c = discrepancies(b);
    const IntMatrix q = chain_matrix(b);
    const bool rdp = std::all_of(b.begin(), b.end(), [](long v) { return v == 2; });
    for (std::size_t j = 0; j < b.size(); ++j) {
      Rational s = b[j] - 2;
      for (std::size_t k = 0; k < b.size(); ++k) s += c[k] * q(k, j);
      if (sgn(s) != 0) return format_chain(b) + ": residual at " + std::to_string(j);
      if (sgn(c[j]) < 0 || c[j] >= 1) return format_chain(b) + ": coefficient outside [0,1)";
      if (!rdp && sgn(c[j]) == 0) return format_chain(b) + ": zero coefficient";
    }
    return {};
  });
}

std::vector<Coeffs> random_chains(std::size_t count, std::size_t max_len, long max_entry,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<long> entry(2, max_entry);
  std::vector<Coeffs> out;
  for (std::size_t i = 0; i < count; ++i) {
    Coeffs c(len(rng));
    for (auto& v : c) v = entry(rng);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<IntMatrix> random_matrices(std::size_t count, std::size_t max_dim, long max_abs,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> entry(-max_abs, max_abs);
  std::uniform_int_distribution<int> sparsity(0, 3);
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    IntMatrix m(dim(rng), dim(rng));
    const int zero_bias = sparsity(rng);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const long v = entry(rng);
        m(r, c) = sparsity(rng) < zero_bias ? 0 : v;
      }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace blowdown
