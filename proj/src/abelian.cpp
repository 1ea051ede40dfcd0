#include "foxhom/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace foxhom {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntegerMatrix::append_columns(std::span<const std::vector<Integer>> columns) {
  if (columns.empty()) return;
  const std::size_t extra = columns.size();
  std::vector<Integer> grown(rows_ * (cols_ + extra));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) grown[i * (cols_ + extra) + j] = (*this)(i, j);
    for (std::size_t c = 0; c < extra; ++c) {
      if (columns[c].size() != rows_)
        throw std::invalid_argument("appended column has wrong length");
      grown[i * (cols_ + extra) + cols_ + c] = columns[c][i];
    }
  }
  cols_ += extra;
  data_ = std::move(grown);
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

// Working state for the elimination; U and V are updated alongside A when
// transforms are requested.
struct Elimination {
  IntegerMatrix a;
  std::optional<IntegerMatrix> u;
  std::optional<IntegerMatrix> v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c) std::swap((*u)(i, c), (*u)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    if (v)
      for (std::size_t r = 0; r < v->rows(); ++r) std::swap((*v)(r, i), (*v)(r, j));
  }
  // row_i += q * row_k, touching columns >= from.
  void add_row(std::size_t i, std::size_t k, const Integer& q, std::size_t from) {
    for (std::size_t c = from; c < a.cols(); ++c)
      if (a(k, c) != 0) a(i, c) += q * a(k, c);
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c)
        if ((*u)(k, c) != 0) (*u)(i, c) += q * (*u)(k, c);
  }
  void add_col(std::size_t j, std::size_t k, const Integer& q, std::size_t from) {
    for (std::size_t r = from; r < a.rows(); ++r)
      if (a(r, k) != 0) a(r, j) += q * a(r, k);
    if (v)
      for (std::size_t r = 0; r < v->rows(); ++r)
        if ((*v)(r, k) != 0) (*v)(r, j) += q * (*v)(r, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c) (*u)(i, c) = -(*u)(i, c);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms) {
  Elimination e{m, std::nullopt, std::nullopt};
  if (with_transforms) {
    e.u = IntegerMatrix::identity(m.rows());
    e.v = IntegerMatrix::identity(m.cols());
  }
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t diag = std::min(rows, cols);
  std::size_t k = 0;
  Integer q;
  for (; k < diag; ++k) {
    bool finished = false;
    while (true) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j) {
          const Integer& x = e.a(i, j);
          if (x == 0) continue;
          if (pi == rows || mpz_cmpabs(x.get_mpz_t(), e.a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        finished = true;
        break;
      }
      e.swap_rows(k, pi);
      e.swap_cols(k, pj);
      const Integer pivot = e.a(k, k);
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (e.a(i, k) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), e.a(i, k).get_mpz_t(), pivot.get_mpz_t());
        if (q != 0) e.add_row(i, k, -q, k);
        if (e.a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (e.a(k, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), e.a(k, j).get_mpz_t(), pivot.get_mpz_t());
        if (q != 0) e.add_col(j, k, -q, k);
        if (e.a(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the rest of the block for the divisor chain.
      std::size_t bad_row = rows;
      for (std::size_t i = k + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (!mpz_divisible_p(e.a(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      e.add_row(k, bad_row, 1, k);
    }
    if (finished) break;
    if (e.a(k, k) < 0) e.negate_row(k);
  }

  SmithForm out;
  out.rank = k;
  out.cokernel_rank = rows - k;
  out.divisors.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.divisors.push_back(e.a(i, i));
  if (with_transforms) {
    out.left = std::move(e.u);
    out.right = std::move(e.v);
  }
  return out;
}

AbelianGroup::AbelianGroup(std::size_t rank, std::vector<Integer> torsion) : rank_(rank) {
  for (auto& d : torsion) {
    if (d <= 0) throw std::invalid_argument("torsion divisor must be positive");
    if (d == 1) continue;
    if (!torsion_.empty() && !mpz_divisible_p(d.get_mpz_t(), torsion_.back().get_mpz_t()))
      throw std::invalid_argument("torsion divisors do not form a divisor chain");
    torsion_.push_back(std::move(d));
  }
}

Integer AbelianGroup::torsion_order() const {
  Integer o = 1;
  for (const auto& d : torsion_) o *= d;
  return o;
}

std::vector<long> AbelianGroup::torsion_longs() const {
  std::vector<long> v;
  for (const auto& d : torsion_) {
    if (!d.fits_slong_p()) throw std::overflow_error("torsion divisor exceeds long");
    v.push_back(d.get_si());
  }
  return v;
}

std::string AbelianGroup::str() const {
  std::ostringstream os;
  bool first = true;
  if (rank_ > 0) {
    os << "Z";
    if (rank_ > 1) os << '^' << rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

AbelianGroup cokernel(const IntegerMatrix& m) {
  SmithForm s = smith_normal_form(m);
  return AbelianGroup(s.cokernel_rank, std::move(s.divisors));
}

AbelianQuotient::AbelianQuotient(IntegerMatrix relations) : relations_(std::move(relations)) {
  SmithForm s = smith_normal_form(relations_, true);
  left_ = std::move(*s.left);
  divisors_ = s.divisors;
  group_ = AbelianGroup(s.cokernel_rank, std::move(s.divisors));
}

std::vector<Integer> AbelianQuotient::coordinates(std::span<const Integer> v) const {
  const std::size_t n = relations_.rows();
  if (v.size() != n) throw std::invalid_argument("vector has wrong dimension");
  std::vector<Integer> w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (left_(i, j) != 0 && v[j] != 0) w[i] += left_(i, j) * v[j];
  std::vector<Integer> out;
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (divisors_[i] == 1) continue;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), w[i].get_mpz_t(), divisors_[i].get_mpz_t());
    out.push_back(std::move(r));
  }
  for (std::size_t i = divisors_.size(); i < n; ++i) out.push_back(std::move(w[i]));
  return out;
}

bool AbelianQuotient::is_zero(std::span<const Integer> v) const {
  auto c = coordinates(v);
  return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
}

AbelianGroup AbelianQuotient::quotient(std::span<const std::vector<Integer>> elements) const {
  IntegerMatrix m = relations_;
  m.append_columns(elements);
  return cokernel(m);
}

bool AbelianQuotient::same_subgroup(std::span<const std::vector<Integer>> a,
                                    std::span<const std::vector<Integer>> b) const {
  // Finitely generated abelian groups are Hopfian: a surjection between
  // groups with equal invariants is an isomorphism.
  std::vector<std::vector<Integer>> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  const AbelianGroup joint = quotient(both);
  return quotient(a) == joint && quotient(b) == joint;
}

}  // namespace foxhom
