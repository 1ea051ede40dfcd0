#pragma once

#include <string>
#include <vector>

#include "foxhom/laurent.hpp"

namespace foxhom {

// Rectangular grid of Laurent polynomials over a common variable list, with
// row and column labels.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::vector<std::string> vars, std::vector<std::string> row_labels,
                std::vector<std::string> col_labels);

  std::size_t rows() const noexcept { return row_labels_.size(); }
  std::size_t cols() const noexcept { return col_labels_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols() + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols() + j];
  }

  LaurentMatrix without_row(std::size_t i) const;
  LaurentMatrix select(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  std::vector<std::string> vars_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<LaurentPoly> entries_;
};

// Exact determinant. Each row is first multiplied by a monomial so that all
// entries are ordinary polynomials; small sizes use cofactor expansion, larger
// ones fraction-free Bareiss elimination.
LaurentPoly determinant(const LaurentMatrix& m);

}  // namespace foxhom
