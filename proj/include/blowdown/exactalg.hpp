#pragma once

// Exact integer and rational linear algebra over GMP.
//
// Matrix-as-map convention: an m x n matrix A is the homomorphism Z^n -> Z^m,
// x |-> A x. Columns index the source. The cokernel of A is Z^m / A Z^n.
// Presented groups store their relations as rows, so the group they present
// is the cokernel of the transposed relation matrix.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace blowdown {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Stacks the given vectors as rows; every vector must have `cols` entries.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix from_columns(std::span<const IntVector> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  IntVector apply(std::span<const Integer> x) const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  // Elementary operations, used by the normal form routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += k * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& k);
  /// col i += k * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Integer& k);
  void negate_row(std::size_t i);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant. Throws InputError for non-square input.
Integer determinant(const IntMatrix& a);

/// Vertical concatenation; column counts must agree.
IntMatrix stack_rows(const IntMatrix& top, const IntMatrix& bottom);

struct SmithForm {
  IntMatrix S;  ///< diagonal, S(0,0) | S(1,1) | ..., nonnegative
  IntMatrix U;  ///< unimodular, rows x rows
  IntMatrix V;  ///< unimodular, cols x cols
  IntMatrix U_inverse;
};

/// Smith normal form with U * A * V == S.
///
/// Pivoting is deterministic: the nonzero entry of smallest absolute value in
/// the active block, ties broken by lowest row and then lowest column.
SmithForm snf(const IntMatrix& a);

// ---------------------------------------------------------------------------

/// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k in
/// invariant-factor form (d_i >= 2, d_1 | d_2 | ...). Elements are coordinate
/// vectors: torsion coordinates first, then free coordinates.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  /// Throws InputError unless the factors form a divisibility chain of values >= 2.
  static FinAbGroup from_invariant_factors(IntVector torsion, std::size_t free_rank = 0);
  /// Canonicalizes an arbitrary direct sum of cyclic groups; 0 means Z, 1 is dropped.
  static FinAbGroup from_cyclic_orders(std::span<const Integer> orders);
  static FinAbGroup cyclic(const Integer& n);

  const IntVector& torsion() const noexcept { return torsion_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  std::size_t num_coordinates() const noexcept { return torsion_.size() + free_rank_; }

  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_trivial() const noexcept { return torsion_.empty() && free_rank_ == 0; }
  bool is_cyclic() const noexcept { return num_coordinates() <= 1; }
  /// Group order; absent for infinite groups.
  std::optional<Integer> order() const;

  /// Per-coordinate moduli: the torsion factors followed by zeros.
  IntVector moduli() const;
  /// Reduces coordinates into [0, d_i). Throws InputError on a length mismatch.
  IntVector reduce(IntVector element) const;
  IntVector zero() const { return IntVector(num_coordinates()); }

  /// "0", "Z/4", "Z/2 ⊕ Z/2", "Z^2 ⊕ Z/3".
  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
  friend bool operator<(const FinAbGroup& a, const FinAbGroup& b);

 private:
  IntVector torsion_;
  std::size_t free_rank_ = 0;
};

class PresentedGroup;

/// Coordinates of a cokernel in its canonical basis.
struct Cokernel {
  FinAbGroup group;
  IntMatrix projection;  ///< group.num_coordinates() x ambient rank
  IntMatrix section;     ///< ambient rank x group.num_coordinates(); lifts canonical generators

  IntVector project(std::span<const Integer> x) const;
  IntVector lift(std::span<const Integer> canonical) const;
};

/// Abelian group given by generators and relation rows.
class PresentedGroup {
 public:
  PresentedGroup() = default;
  /// relations must have one column per generator (any number of rows).
  PresentedGroup(std::vector<std::string> generators, IntMatrix relations);

  static PresentedGroup free(std::vector<std::string> generators);
  /// The canonical presentation of a group: one generator per coordinate.
  static PresentedGroup from_group(const FinAbGroup& g, const std::string& prefix = "t");

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const IntMatrix& relations() const noexcept { return relations_; }
  std::size_t num_generators() const noexcept { return generators_.size(); }

  Cokernel canonical() const;
  FinAbGroup group() const { return canonical().group; }

 private:
  std::vector<std::string> generators_;
  IntMatrix relations_;
};

/// Homomorphism between presented groups. Column j of `images` is the image of
/// source generator j written over the target generators. Construction checks
/// that every source relation lands in the target relation lattice.
class GroupMap {
 public:
  GroupMap(PresentedGroup source, PresentedGroup target, IntMatrix images);

  const PresentedGroup& source() const noexcept { return source_; }
  const PresentedGroup& target() const noexcept { return target_; }
  const IntMatrix& images() const noexcept { return images_; }

  /// Image of an element given over source generators, over target generators.
  IntVector apply(std::span<const Integer> x) const;
  bool is_surjective() const;
  /// |image|; absent if infinite.
  std::optional<Integer> image_order() const;
  /// |kernel| for finite source; absent otherwise.
  std::optional<Integer> kernel_order() const;

 private:
  PresentedGroup source_;
  PresentedGroup target_;
  IntMatrix images_;
};

struct CokernelResult {
  FinAbGroup group;
  GroupMap proj;  ///< free Z^rows -> canonical presentation of `group`
  IntMatrix section;
};

/// Z^rows / A Z^cols together with the projection of each basis vector.
CokernelResult cokernel(const IntMatrix& a);
/// Same computation without wrapping the projection in a GroupMap.
Cokernel cokernel_coordinates(const IntMatrix& a);

/// Integer solution of A x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Integer> b);

/// A rational solution of A x = b (free variables set to 0), or nothing when
/// the system is inconsistent. Throws InputError on a dimension mismatch.
std::optional<RatVector> solve_rational(const IntMatrix& a, std::span<const Rational> b);

/// Whether x lies in the subgroup generated by `gens` inside a direct sum of
/// cyclic groups with the given moduli (0 = infinite cyclic). Throws
/// InputError if an element does not have one coordinate per modulus.
bool in_subgroup(std::span<const IntVector> gens, std::span<const Integer> x,
                 std::span<const Integer> moduli);

/// Membership test over the canonical coordinates of `ambient`.
bool subgroup_membership(std::span<const IntVector> gens, std::span<const Integer> x,
                         const FinAbGroup& ambient);

/// Canonical form of G / <extra_relations>; each relation is a vector over
/// G's generators.
FinAbGroup quotient(const PresentedGroup& g, std::span<const IntVector> extra_relations);

std::string to_string(std::span<const Integer> v);

}  // namespace blowdown
