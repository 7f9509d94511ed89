#include "blowdown/exactalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "blowdown/errors.hpp"

namespace blowdown {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("IntMatrix::from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw InputError("IntMatrix::from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw InputError("IntMatrix::apply: dimension mismatch");
  IntVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("IntMatrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if (sgn((*this)(j, c)) != 0) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if (sgn((*this)(r, j)) != 0) (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && sgn(m(swap_with, k)) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix stack_rows(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw InputError("stack_rows: column count mismatch");
  IntMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
  return m;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Tracks U, U^{-1} and V alongside the working matrix so that U * A * V == M
// holds after every step.
struct SmithState {
  IntMatrix m, u, u_inv, v;

  void swap_rows(std::size_t i, std::size_t j) {
    m.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    m.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  // row i += k row j
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    m.add_row_multiple(i, j, k);
    u.add_row_multiple(i, j, k);
    u_inv.add_col_multiple(j, i, -k);
  }
  // col i += k col j
  void add_col(std::size_t i, std::size_t j, const Integer& k) {
    m.add_col_multiple(i, j, k);
    v.add_col_multiple(i, j, k);
  }
  void negate_row(std::size_t i) {
    m.negate_row(i);
    u.negate_row(i);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, i) = -u_inv(r, i);
  }
};

// Smallest |entry| in the block [t, rows) x [t, cols); ties by row then column.
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const Integer& e = m(i, j);
      if (sgn(e) == 0) continue;
      if (!found || mpz_cmpabs(e.get_mpz_t(), best.get_mpz_t()) < 0) {
        best = e;
        pr = i;
        pc = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithForm snf(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  SmithState st{a, IntMatrix::identity(rows), IntMatrix::identity(rows),
                IntMatrix::identity(cols)};
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(st.m, t, pr, pc)) break;
    for (;;) {
      st.swap_rows(t, pr);
      st.swap_cols(t, pc);
      const Integer pivot = st.m(t, t);

      bool remainder = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(st.m(i, t)) == 0) continue;
        Integer q = st.m(i, t) / pivot;
        st.add_row(i, t, -q);
        if (sgn(st.m(i, t)) != 0) remainder = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(st.m(t, j)) == 0) continue;
        Integer q = st.m(t, j) / pivot;
        st.add_col(j, t, -q);
        if (sgn(st.m(t, j)) != 0) remainder = true;
      }
      if (remainder) {
        find_pivot(st.m, t, pr, pc);
        continue;
      }

      // Row and column t are clear; enforce divisibility of the remaining block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(st.m(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            st.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (!divisible) {
        pr = t;
        pc = t;
        continue;
      }
      break;
    }
    if (sgn(st.m(t, t)) < 0) st.negate_row(t);
  }
  return SmithForm{std::move(st.m), std::move(st.u), std::move(st.v), std::move(st.u_inv)};
}

// ---------------------------------------------------------------------------
// FinAbGroup

FinAbGroup FinAbGroup::from_invariant_factors(IntVector torsion, std::size_t free_rank) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw InputError("invariant factors must be >= 2");
    if (i > 0 && !mpz_divisible_p(torsion[i].get_mpz_t(), torsion[i - 1].get_mpz_t()))
      throw InputError("invariant factors must form a divisibility chain");
  }
  FinAbGroup g;
  g.torsion_ = std::move(torsion);
  g.free_rank_ = free_rank;
  return g;
}

FinAbGroup FinAbGroup::from_cyclic_orders(std::span<const Integer> orders) {
  IntMatrix d(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = abs(orders[i]);
  return cokernel_coordinates(d).group;
}

FinAbGroup FinAbGroup::cyclic(const Integer& n) {
  Integer orders[] = {n};
  return from_cyclic_orders(orders);
}

std::optional<Integer> FinAbGroup::order() const {
  if (free_rank_ != 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

IntVector FinAbGroup::moduli() const {
  IntVector m = torsion_;
  m.resize(num_coordinates());
  return m;
}

IntVector FinAbGroup::reduce(IntVector element) const {
  if (element.size() != num_coordinates())
    throw InputError("element has " + std::to_string(element.size()) + " coordinates, group " +
                     to_string() + " needs " + std::to_string(num_coordinates()));
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    mpz_fdiv_r(element[i].get_mpz_t(), element[i].get_mpz_t(), torsion_[i].get_mpz_t());
  return element;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << "^" << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    if (!first) os << " ⊕ ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

bool operator<(const FinAbGroup& a, const FinAbGroup& b) {
  if (a.free_rank_ != b.free_rank_) return a.free_rank_ < b.free_rank_;
  auto oa = a.order().value_or(0), ob = b.order().value_or(0);
  if (oa != ob) return oa < ob;
  if (a.torsion_.size() != b.torsion_.size()) return a.torsion_.size() < b.torsion_.size();
  return std::lexicographical_compare(a.torsion_.begin(), a.torsion_.end(), b.torsion_.begin(),
                                      b.torsion_.end());
}

// ---------------------------------------------------------------------------
// Cokernels and presented groups

IntVector Cokernel::project(std::span<const Integer> x) const {
  return group.reduce(projection.apply(x));
}

IntVector Cokernel::lift(std::span<const Integer> canonical) const {
  return section.apply(canonical);
}

Cokernel cokernel_coordinates(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const SmithForm f = snf(a);
  const std::size_t diag = std::min(a.rows(), a.cols());

  // Diagonal is 1,...,1, d_1 | ... | d_k, 0,...,0; rows past `diag` are free.
  std::vector<std::size_t> kept;
  IntVector torsion;
  std::size_t free_rank = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Integer d = i < diag ? f.S(i, i) : Integer(0);
    if (d == 1) continue;
    kept.push_back(i);
    if (sgn(d) == 0)
      ++free_rank;
    else
      torsion.push_back(d);
  }

  Cokernel out;
  out.group = FinAbGroup::from_invariant_factors(std::move(torsion), free_rank);
  out.projection = IntMatrix(kept.size(), m);
  out.section = IntMatrix(m, kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      out.projection(k, j) = f.U(kept[k], j);
      out.section(j, k) = f.U_inverse(j, kept[k]);
    }
    if (k < out.group.torsion().size()) {
      const Integer& d = out.group.torsion()[k];
      for (std::size_t j = 0; j < m; ++j)
        mpz_fdiv_r(out.projection(k, j).get_mpz_t(), out.projection(k, j).get_mpz_t(),
                   d.get_mpz_t());
    }
  }
  return out;
}

PresentedGroup::PresentedGroup(std::vector<std::string> generators, IntMatrix relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  if (relations_.rows() == 0) relations_ = IntMatrix(0, generators_.size());
  if (relations_.cols() != generators_.size())
    throw InputError("PresentedGroup: relation matrix has " + std::to_string(relations_.cols()) +
                     " columns for " + std::to_string(generators_.size()) + " generators");
}

PresentedGroup PresentedGroup::free(std::vector<std::string> generators) {
  const std::size_t n = generators.size();
  return PresentedGroup(std::move(generators), IntMatrix(0, n));
}

PresentedGroup PresentedGroup::from_group(const FinAbGroup& g, const std::string& prefix) {
  std::vector<std::string> gens;
  const std::size_t n = g.num_coordinates();
  for (std::size_t i = 0; i < n; ++i) gens.push_back(prefix + std::to_string(i + 1));
  IntMatrix rel(g.torsion().size(), n);
  for (std::size_t i = 0; i < g.torsion().size(); ++i) rel(i, i) = g.torsion()[i];
  return PresentedGroup(std::move(gens), std::move(rel));
}

Cokernel PresentedGroup::canonical() const {
  return cokernel_coordinates(relations_.transpose());
}

CokernelResult cokernel(const IntMatrix& a) {
  Cokernel c = cokernel_coordinates(a);
  std::vector<std::string> basis;
  for (std::size_t j = 0; j < a.rows(); ++j) basis.push_back("e" + std::to_string(j + 1));
  GroupMap proj(PresentedGroup::free(std::move(basis)), PresentedGroup::from_group(c.group),
                c.projection);
  return CokernelResult{c.group, std::move(proj), std::move(c.section)};
}

// ---------------------------------------------------------------------------
// Solvers and membership

std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Integer> b) {
  if (b.size() != a.rows()) throw InputError("solve_integer: dimension mismatch");
  const SmithForm f = snf(a);
  const IntVector ub = f.U.apply(b);
  const std::size_t diag = std::min(a.rows(), a.cols());
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Integer d = i < diag ? f.S(i, i) : Integer(0);
    if (sgn(d) == 0) {
      if (sgn(ub[i]) != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(ub[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), d.get_mpz_t());
  }
  return f.V.apply(y);
}

std::optional<RatVector> solve_rational(const IntMatrix& a, std::span<const Rational> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m)
    throw InputError("solve_rational: right-hand side has " + std::to_string(b.size()) +
                     " entries for " + std::to_string(m) + " equations");

  std::vector<RatVector> aug(m, RatVector(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(a(i, j));
    aug[i][n] = b[i];
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(aug[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(aug[p], aug[r]);
    const Rational inv = 1 / aug[r][c];
    for (auto& v : aug[r]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(aug[i][c]) == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (sgn(aug[i][n]) != 0) return std::nullopt;

  RatVector x(n);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug[i][n];
  return x;
}

bool in_subgroup(std::span<const IntVector> gens, std::span<const Integer> x,
                 std::span<const Integer> moduli) {
  const std::size_t n = moduli.size();
  if (x.size() != n)
    throw InputError("membership: element has " + std::to_string(x.size()) +
                     " coordinates, ambient has " + std::to_string(n));
  std::vector<IntVector> columns(gens.begin(), gens.end());
  for (const auto& g : columns)
    if (g.size() != n)
      throw InputError("membership: generator has " + std::to_string(g.size()) +
                       " coordinates, ambient has " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(moduli[i]) == 0) continue;
    IntVector e(n);
    e[i] = moduli[i];
    columns.push_back(std::move(e));
  }
  return solve_integer(IntMatrix::from_columns(columns, n), x).has_value();
}

bool subgroup_membership(std::span<const IntVector> gens, std::span<const Integer> x,
                         const FinAbGroup& ambient) {
  const IntVector mod = ambient.moduli();
  return in_subgroup(gens, x, mod);
}

FinAbGroup quotient(const PresentedGroup& g, std::span<const IntVector> extra_relations) {
  const IntMatrix extra = IntMatrix::from_rows(extra_relations, g.num_generators());
  return cokernel_coordinates(stack_rows(g.relations(), extra).transpose()).group;
}

// ---------------------------------------------------------------------------
// GroupMap

GroupMap::GroupMap(PresentedGroup source, PresentedGroup target, IntMatrix images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.rows() == 0 && images_.cols() == 0)
    images_ = IntMatrix(target_.num_generators(), source_.num_generators());
  if (images_.rows() != target_.num_generators() || images_.cols() != source_.num_generators())
    throw InputError("GroupMap: image matrix must be " +
                     std::to_string(target_.num_generators()) + " x " +
                     std::to_string(source_.num_generators()));
  // Each source relation must map into the span of the target relations.
  const IntMatrix target_lattice = target_.relations().transpose();
  for (std::size_t r = 0; r < source_.relations().rows(); ++r) {
    const IntVector img = images_.apply(source_.relations().row(r));
    bool zero = std::all_of(img.begin(), img.end(), [](const Integer& v) { return sgn(v) == 0; });
    if (zero) continue;
    if (target_lattice.cols() == 0 || !solve_integer(target_lattice, img))
      throw ConsistencyError("GroupMap: relation " + std::to_string(r + 1) +
                             " of the source does not map to a relation of the target");
  }
}

IntVector GroupMap::apply(std::span<const Integer> x) const { return images_.apply(x); }

std::optional<Integer> GroupMap::image_order() const {
  const Cokernel tgt = target_.canonical();
  const auto t = tgt.group.order();
  if (!t) return std::nullopt;
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < images_.cols(); ++j) cols.push_back(images_.column(j));
  const auto rest = quotient(target_, cols).order();
  return *t / *rest;
}

bool GroupMap::is_surjective() const {
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < images_.cols(); ++j) cols.push_back(images_.column(j));
  return quotient(target_, cols).is_trivial();
}

std::optional<Integer> GroupMap::kernel_order() const {
  const auto s = source_.group().order();
  const auto img = image_order();
  if (!s || !img) return std::nullopt;
  return *s / *img;
}

std::string to_string(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace blowdown
