#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace foxhom {

using Integer = mpz_class;

// Dense matrix of arbitrary precision integers, row major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  // Append columns; each vector must have rows() entries.
  void append_columns(std::span<const std::vector<Integer>> columns);
  IntegerMatrix transpose() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Result of diagonalising M by unimodular U (rows x rows) and V (cols x cols):
// U * M * V = diag(divisors..., 0...). `divisors` holds the nonzero diagonal
// entries, all positive, each dividing the next.
struct SmithForm {
  std::vector<Integer> divisors;
  std::size_t rank = 0;
  std::size_t cokernel_rank = 0;  // rows - rank
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;
};

SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms = false);

// Finitely generated abelian group Z^rank + Z/d1 + ... + Z/dk with
// 1 < d1 | d2 | ... | dk.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Divisors equal to 1 are dropped; the rest must form a divisor chain.
  AbelianGroup(std::size_t rank, std::vector<Integer> torsion);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  bool finite() const noexcept { return rank_ == 0; }
  // Order of the torsion subgroup; equals the group order when finite().
  Integer torsion_order() const;
  std::vector<long> torsion_longs() const;

  // "Z^3 + Z/2", "0" for the trivial group.
  std::string str() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

// Z^rows / (column span of m).
AbelianGroup cokernel(const IntegerMatrix& m);

// Cokernel of a relation matrix together with the change of basis needed to
// express arbitrary vectors of Z^rows in Smith coordinates.
class AbelianQuotient {
 public:
  explicit AbelianQuotient(IntegerMatrix relations);

  const AbelianGroup& group() const noexcept { return group_; }
  std::size_t ambient_dimension() const noexcept { return relations_.rows(); }

  // Canonical coordinates of the class of v: torsion coordinates reduced into
  // [0, d_i) followed by the free coordinates.
  std::vector<Integer> coordinates(std::span<const Integer> v) const;
  bool is_zero(std::span<const Integer> v) const;

  // The quotient of this group by the subgroup generated by `elements`.
  AbelianGroup quotient(std::span<const std::vector<Integer>> elements) const;
  // True iff the subgroups generated by a and b coincide.
  bool same_subgroup(std::span<const std::vector<Integer>> a,
                     std::span<const std::vector<Integer>> b) const;

 private:
  IntegerMatrix relations_;
  IntegerMatrix left_;
  std::vector<Integer> divisors_;
  AbelianGroup group_;
};

}  // namespace foxhom
