#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foxhom {

using Integer = mpz_class;
using Exponent = std::vector<std::int64_t>;

// Finitely supported map Z^r -> Z with named variables. Zero coefficients are
// never stored. Terms are kept in a std::map, i.e. sorted lexicographically by
// exponent vector.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(std::vector<std::string> vars, const Integer& c);
  static LaurentPoly monomial(std::vector<std::string> vars, Exponent exp,
                              const Integer& c = 1);
  static LaurentPoly variable(std::vector<std::string> vars, std::string_view name);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  // All exponents nonnegative.
  bool is_polynomial() const;
  std::size_t var_index(std::string_view name) const;

  Integer coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Integer& c);

  Exponent min_exponents() const;
  Exponent max_exponents() const;
  // Highest power of variable i (undefined for zero).
  std::int64_t degree(std::size_t i) const;
  bool involves(std::size_t i) const;

  // Multiply by the monomial x^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  LaurentPoly pow(unsigned k) const;
  Integer content() const;

  // Leading term under graded lexicographic order.
  Terms::const_iterator leading_term() const;

  // Minimal exponent 0 in every variable, positive graded-lex leading
  // coefficient. p and normal_form(p) differ by a unit +-x^a.
  LaurentPoly normal_form() const;
  bool unit_equivalent(const LaurentPoly& other) const;

  // Terms in descending graded-lex order, e.g. "2*x^2*y - x^-1 + 3".
  std::string str() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Integer& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }

  // Equality compares variable lists and terms.
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void check_compatible(const LaurentPoly& rhs) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

// Image of a variable under a monomial substitution: sign * x^exp.
struct MonomialImage {
  int sign = 1;
  Exponent exp;

  friend bool operator==(const MonomialImage&, const MonomialImage&) = default;
};

// Homomorphic image of p under var_i -> images[i], a unit of the Laurent ring
// over target_vars.
LaurentPoly substitute_monomial(const LaurentPoly& p, std::vector<std::string> target_vars,
                                std::span<const MonomialImage> images);

// p / q when the quotient is again a Laurent polynomial.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q);

// GCD of polynomials up to unit, returned in normal form. Zero inputs are
// skipped; the gcd of only zeros is zero. Throws on an empty list.
LaurentPoly laurent_gcd(std::span<const LaurentPoly> ps);
LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q);

// nu_k(t) = t^(k-1) + ... + t + 1; nu_0 = 0.
LaurentPoly nu_poly(int k, std::string var = "t");

struct SharedRoots {
  std::int64_t count = 0;
  bool all = false;  // p == 0: every root of nu_n is shared
};

// Number of distinct roots shared by the univariate p and nu_n.
SharedRoots shared_root_count(const LaurentPoly& p, int n);

// Text format: sums of c*x^a*y^b terms. The parser also accepts parentheses,
// integer powers of subexpressions, and exact division, so printed rational
// forms like (1-y*z+x*y*z)/(x^2*y*z) can be transcribed directly.
LaurentPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

}  // namespace foxhom
