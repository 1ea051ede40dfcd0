#include "foxhom/fox.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace foxhom {

AbelianizationMap::AbelianizationMap(std::vector<std::string> generators,
                                     std::vector<std::string> variables,
                                     std::vector<MonomialImage> images)
    : generators_(std::move(generators)),
      variables_(std::move(variables)),
      images_(std::move(images)) {
  if (generators_.size() != images_.size())
    throw std::invalid_argument("every generator needs exactly one image");
  for (const auto& im : images_) {
    if (im.sign != 1 && im.sign != -1) throw std::invalid_argument("image sign must be +-1");
    if (im.exp.size() != variables_.size())
      throw std::invalid_argument("image exponent length differs from variable count");
  }
}

const MonomialImage& AbelianizationMap::image(std::string_view gen) const {
  auto it = std::find(generators_.begin(), generators_.end(), gen);
  if (it == generators_.end())
    throw std::invalid_argument("map has no image for generator '" + std::string(gen) + "'");
  return images_[static_cast<std::size_t>(it - generators_.begin())];
}

bool AbelianizationMap::covers(const Presentation& p) const {
  return std::all_of(p.generators().begin(), p.generators().end(), [&](const std::string& g) {
    return std::find(generators_.begin(), generators_.end(), g) != generators_.end();
  });
}

MonomialImage AbelianizationMap::apply(const Word& w) const {
  MonomialImage out{1, Exponent(variables_.size(), 0)};
  for (const auto& l : w.letters()) {
    const auto& im = image(l.gen);
    for (std::size_t j = 0; j < out.exp.size(); ++j) out.exp[j] += l.exp * im.exp[j];
    if (im.sign < 0 && l.exp % 2 != 0) out.sign = -out.sign;
  }
  return out;
}

LaurentPoly AbelianizationMap::apply_poly(const Word& w) const {
  MonomialImage m = apply(w);
  return LaurentPoly::monomial(variables_, m.exp, m.sign);
}

LaurentPoly AbelianizationMap::image_poly(std::string_view gen) const {
  const auto& m = image(gen);
  return LaurentPoly::monomial(variables_, m.exp, m.sign);
}

AbelianizationMap AbelianizationMap::compose(std::vector<std::string> new_vars,
                                             std::span<const MonomialImage> then) const {
  if (then.size() != variables_.size())
    throw std::invalid_argument("composition must assign every variable");
  std::vector<MonomialImage> imgs;
  for (const auto& im : images_) {
    MonomialImage out{im.sign, Exponent(new_vars.size(), 0)};
    for (std::size_t i = 0; i < im.exp.size(); ++i) {
      for (std::size_t j = 0; j < out.exp.size(); ++j) out.exp[j] += im.exp[i] * then[i].exp[j];
      if (then[i].sign < 0 && im.exp[i] % 2 != 0) out.sign = -out.sign;
    }
    imgs.push_back(std::move(out));
  }
  return AbelianizationMap(generators_, std::move(new_vars), std::move(imgs));
}

LaurentPoly fox_derivative(const Word& w, std::string_view gen, const AbelianizationMap& phi) {
  const auto& vars = phi.variables();
  phi.image(gen);  // reject unknown generators
  LaurentPoly d(vars);
  MonomialImage prefix{1, Exponent(vars.size(), 0)};
  auto step = [&](const MonomialImage& im, int dir) {
    for (std::size_t j = 0; j < prefix.exp.size(); ++j) prefix.exp[j] += dir * im.exp[j];
    if (im.sign < 0) prefix.sign = -prefix.sign;
  };
  for (const auto& l : w.letters()) {
    const auto& im = phi.image(l.gen);
    const bool hit = l.gen == gen;
    for (std::int64_t i = 0; i < std::abs(l.exp); ++i) {
      if (l.exp > 0) {
        // d(g)/dg = 1 at the current prefix
        if (hit) d.add_term(prefix.exp, prefix.sign);
        step(im, +1);
      } else {
        // d(g^-1)/dg = -phi(g)^-1
        step(im, -1);
        if (hit) d.add_term(prefix.exp, -prefix.sign);
      }
    }
  }
  return d;
}

AlexanderMatrix alexander_matrix(const Presentation& p, const AbelianizationMap& phi) {
  if (!phi.covers(p)) throw std::invalid_argument("map does not cover every generator");
  std::vector<std::string> cols;
  for (std::size_t j = 0; j < p.relator_count(); ++j) cols.push_back("R" + std::to_string(j + 1));
  LaurentMatrix m(phi.variables(), p.generators(), std::move(cols));
  for (std::size_t i = 0; i < p.generator_count(); ++i)
    for (std::size_t j = 0; j < p.relator_count(); ++j)
      m(i, j) = fox_derivative(p.relators()[j], p.generators()[i], phi);
  return AlexanderMatrix{std::move(m), phi};
}

LaurentPoly row_deleted_minor(const AlexanderMatrix& m, std::size_t row) {
  if (m.matrix.rows() != m.matrix.cols() + 1)
    throw std::invalid_argument("row-deleted minors need an (r+1) x r matrix");
  return determinant(m.matrix.without_row(row));
}

std::map<std::string, LaurentPoly> minor_polys(const AlexanderMatrix& m) {
  std::map<std::string, LaurentPoly> out;
  for (std::size_t i = 0; i < m.matrix.rows(); ++i)
    out.emplace(m.matrix.row_labels()[i], row_deleted_minor(m, i).normal_form());
  return out;
}

namespace {

// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

LaurentPoly alexander_poly(const Presentation& p, const AbelianizationMap& phi) {
  const AlexanderMatrix am = alexander_matrix(p, phi);
  const auto& vars = phi.variables();
  const std::size_t g = am.matrix.rows();
  if (g == 0) throw std::invalid_argument("presentation has no generators");
  const std::size_t k = g - 1;
  if (k == 0) return LaurentPoly::constant(vars, 1);
  std::vector<LaurentPoly> minors;
  for_each_subset(g, k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(am.matrix.cols(), k, [&](const std::vector<std::size_t>& cols) {
      minors.push_back(determinant(am.matrix.select(rows, cols)));
    });
  });
  if (minors.empty()) return LaurentPoly(vars);
  return laurent_gcd(minors);
}

}  // namespace foxhom
