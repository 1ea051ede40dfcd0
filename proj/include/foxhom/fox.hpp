#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "foxhom/laurent.hpp"
#include "foxhom/laurent_matrix.hpp"
#include "foxhom/presentation.hpp"

namespace foxhom {

// Homomorphism from a free group onto units +-x^a of the Laurent ring over
// `variables`.
class AbelianizationMap {
 public:
  AbelianizationMap() = default;
  AbelianizationMap(std::vector<std::string> generators, std::vector<std::string> variables,
                    std::vector<MonomialImage> images);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<MonomialImage>& images() const noexcept { return images_; }
  const MonomialImage& image(std::string_view gen) const;
  bool covers(const Presentation& p) const;

  // phi(w) as a signed monomial.
  MonomialImage apply(const Word& w) const;
  LaurentPoly apply_poly(const Word& w) const;
  LaurentPoly image_poly(std::string_view gen) const;

  // The map followed by the monomial substitution variables -> `then`.
  AbelianizationMap compose(std::vector<std::string> new_vars,
                            std::span<const MonomialImage> then) const;

 private:
  std::vector<std::string> generators_;
  std::vector<std::string> variables_;
  std::vector<MonomialImage> images_;
};

// Fox derivative dw/dg pushed through phi, using the left convention
// d(uv) = du + phi(u) dv.
LaurentPoly fox_derivative(const Word& w, std::string_view gen, const AbelianizationMap& phi);

// Rows are generators, columns relators; entry (g, R) = phi(dR/dg).
struct AlexanderMatrix {
  LaurentMatrix matrix;
  AbelianizationMap map;
};

AlexanderMatrix alexander_matrix(const Presentation& p, const AbelianizationMap& phi);

// For a (r+1) x r matrix: generator -> determinant with that row deleted, in
// normal form.
std::map<std::string, LaurentPoly> minor_polys(const AlexanderMatrix& m);
// The same determinant before normalisation.
LaurentPoly row_deleted_minor(const AlexanderMatrix& m, std::size_t row);

// Generator of the smallest principal ideal containing the first elementary
// ideal: gcd of all (g-1) x (g-1) minors.
LaurentPoly alexander_poly(const Presentation& p, const AbelianizationMap& phi);

}  // namespace foxhom
