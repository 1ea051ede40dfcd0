#include "foxhom/laurent_matrix.hpp"

#include <stdexcept>

namespace foxhom {

LaurentMatrix::LaurentMatrix(std::vector<std::string> vars, std::vector<std::string> row_labels,
                             std::vector<std::string> col_labels)
    : vars_(std::move(vars)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(row_labels_.size() * col_labels_.size(), LaurentPoly(vars_)) {}

LaurentMatrix LaurentMatrix::without_row(std::size_t i) const {
  std::vector<std::size_t> rs, cs;
  for (std::size_t r = 0; r < rows(); ++r)
    if (r != i) rs.push_back(r);
  for (std::size_t c = 0; c < cols(); ++c) cs.push_back(c);
  return select(rs, cs);
}

LaurentMatrix LaurentMatrix::select(const std::vector<std::size_t>& rs,
                                    const std::vector<std::size_t>& cs) const {
  std::vector<std::string> rl, cl;
  for (auto r : rs) rl.push_back(row_labels_.at(r));
  for (auto c : cs) cl.push_back(col_labels_.at(c));
  LaurentMatrix m(vars_, std::move(rl), std::move(cl));
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  if (a.vars() != b.vars()) throw std::invalid_argument("mismatched variable lists");
  LaurentMatrix c(a.vars(), a.row_labels(), b.col_labels());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

namespace {

using Grid = std::vector<std::vector<LaurentPoly>>;

LaurentPoly cofactor_det(const Grid& g, const std::vector<std::string>& vars) {
  const std::size_t n = g.size();
  if (n == 0) return LaurentPoly::constant(vars, 1);
  if (n == 1) return g[0][0];
  if (n == 2) return g[0][0] * g[1][1] - g[0][1] * g[1][0];
  LaurentPoly det(vars);
  for (std::size_t j = 0; j < n; ++j) {
    if (g[0][j].is_zero()) continue;
    Grid minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(g[i][k]);
      minor.push_back(std::move(row));
    }
    LaurentPoly term = g[0][j] * cofactor_det(minor, vars);
    if (j % 2) det -= term; else det += term;
  }
  return det;
}

LaurentPoly bareiss_det(Grid g, const std::vector<std::string>& vars) {
  const std::size_t n = g.size();
  LaurentPoly prev = LaurentPoly::constant(vars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (g[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && g[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == n) return LaurentPoly(vars);
      std::swap(g[k], g[swap_with]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = g[i][j] * g[k][k] - g[i][k] * g[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("Bareiss step is not exact");
        g[i][j] = std::move(*q);
      }
      g[i][k] = LaurentPoly(vars);
    }
    prev = g[k][k];
  }
  LaurentPoly d = g[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace

LaurentPoly determinant(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const auto& vars = m.vars();
  Grid g(n);
  Exponent total(vars.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    // Row shift making every entry of row i a polynomial.
    Exponent lo(vars.size(), 0);
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      Exponent e = m(i, j).min_exponents();
      for (std::size_t v = 0; v < lo.size(); ++v) lo[v] = any ? std::min(lo[v], e[v]) : e[v];
      any = true;
    }
    if (!any) return LaurentPoly(vars);
    Exponent shift = lo;
    for (std::size_t v = 0; v < lo.size(); ++v) {
      shift[v] = -lo[v];
      total[v] += lo[v];
    }
    for (std::size_t j = 0; j < n; ++j) g[i].push_back(m(i, j).shifted(shift));
  }
  LaurentPoly det = n < 4 ? cofactor_det(g, vars) : bareiss_det(std::move(g), vars);
  return det.shifted(total);
}

}  // namespace foxhom
