// Multivariate integer polynomial GCD by recursive content / primitive part
// splitting with a subresultant remainder sequence in the main variable.

#include <stdexcept>

#include "foxhom/laurent.hpp"

namespace foxhom {

namespace {

using Coeffs = std::vector<LaurentPoly>;

// Coefficients of p as a polynomial in variable v; each coefficient keeps the
// full variable list with exponent 0 in slot v.
Coeffs split(const LaurentPoly& p, std::size_t v) {
  Coeffs out;
  for (const auto& [e, c] : p.terms()) {
    const auto d = static_cast<std::size_t>(e[v]);
    if (out.size() <= d) out.resize(d + 1, LaurentPoly(p.vars()));
    Exponent f = e;
    f[v] = 0;
    out[d].add_term(f, c);
  }
  return out;
}

std::int64_t deg_in(const LaurentPoly& p, std::size_t v) {
  std::int64_t d = -1;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  return d;
}

LaurentPoly leading_coeff(const LaurentPoly& p, std::size_t v) {
  const auto d = deg_in(p, v);
  LaurentPoly lc(p.vars());
  for (const auto& [e, c] : p.terms())
    if (e[v] == d) {
      Exponent f = e;
      f[v] = 0;
      lc.add_term(f, c);
    }
  return lc;
}

LaurentPoly var_power(const std::vector<std::string>& vars, std::size_t v, std::int64_t k) {
  Exponent e(vars.size(), 0);
  e[v] = k;
  return LaurentPoly::monomial(vars, std::move(e));
}

LaurentPoly divide_or_throw(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = exact_divide(p, q);
  if (!r) throw std::logic_error("polynomial gcd: expected exact division");
  return std::move(*r);
}

LaurentPoly positive(LaurentPoly p) {
  if (!p.is_zero() && p.leading_term()->second < 0) p = -p;
  return p;
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
  LaurentPoly g(p.vars());
  for (const auto& c : split(p, v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? positive(c) : gcd_rec(g, c);
    if (g.is_constant() && g.coefficient(Exponent(p.nvars(), 0)) == 1) break;
  }
  return g;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b in variable v.
LaurentPoly prem(const LaurentPoly& a, const LaurentPoly& b, std::size_t v) {
  const auto db = deg_in(b, v);
  const LaurentPoly lcb = leading_coeff(b, v);
  LaurentPoly r = a;
  auto e = deg_in(a, v) - db + 1;
  while (!r.is_zero() && deg_in(r, v) >= db) {
    LaurentPoly t = leading_coeff(r, v) * var_power(r.vars(), v, deg_in(r, v) - db);
    r = lcb * r - t * b;
    --e;
  }
  return r * lcb.pow(static_cast<unsigned>(e));
}

LaurentPoly primitive_part(const LaurentPoly& p, std::size_t v) {
  return divide_or_throw(p, content_in(p, v));
}

// GCD of two polynomials that are primitive in v, both of positive degree.
LaurentPoly subresultant_gcd(LaurentPoly a, LaurentPoly b, std::size_t v) {
  if (deg_in(a, v) < deg_in(b, v)) std::swap(a, b);
  const auto& vars = a.vars();
  LaurentPoly g = LaurentPoly::constant(vars, 1);
  LaurentPoly h = LaurentPoly::constant(vars, 1);
  while (true) {
    const auto delta = deg_in(a, v) - deg_in(b, v);
    LaurentPoly r = prem(a, b, v);
    if (r.is_zero()) break;
    if (deg_in(r, v) == 0) return LaurentPoly::constant(vars, 1);
    a = std::move(b);
    b = divide_or_throw(r, g * h.pow(static_cast<unsigned>(delta)));
    g = leading_coeff(a, v);
    if (delta > 0)
      h = divide_or_throw(g.pow(static_cast<unsigned>(delta)),
                          h.pow(static_cast<unsigned>(delta - 1)));
  }
  return primitive_part(b, v);
}

// a, b polynomials (nonnegative exponents), not both zero.
LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  std::size_t v = a.nvars();
  for (std::size_t i = a.nvars(); i-- > 0;)
    if (a.involves(i) || b.involves(i)) {
      v = i;
      break;
    }
  if (v == a.nvars()) {
    Integer g;
    const Exponent zero(a.nvars(), 0);
    mpz_gcd(g.get_mpz_t(), a.coefficient(zero).get_mpz_t(), b.coefficient(zero).get_mpz_t());
    return LaurentPoly::constant(a.vars(), g);
  }
  if (!a.involves(v)) return gcd_rec(a, content_in(b, v));
  if (!b.involves(v)) return gcd_rec(content_in(a, v), b);
  const LaurentPoly ca = content_in(a, v), cb = content_in(b, v);
  const LaurentPoly c = gcd_rec(ca, cb);
  LaurentPoly g = subresultant_gcd(divide_or_throw(a, ca), divide_or_throw(b, cb), v);
  return positive(c * g);
}

LaurentPoly cleared(const LaurentPoly& p) {
  Exponent m = p.min_exponents();
  for (auto& x : m) x = -x;
  return p.shifted(m);
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.vars() != q.vars()) throw std::invalid_argument("mismatched variable lists");
  if (p.is_zero() && q.is_zero()) return p;
  return gcd_rec(cleared(p), cleared(q)).normal_form();
}

LaurentPoly laurent_gcd(std::span<const LaurentPoly> ps) {
  if (ps.empty()) throw std::invalid_argument("gcd of an empty list");
  LaurentPoly g(ps.front().vars());
  for (const auto& p : ps) {
    if (p.vars() != g.vars()) throw std::invalid_argument("mismatched variable lists");
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.normal_form() : laurent_gcd(g, p);
  }
  return g;
}

LaurentPoly nu_poly(int k, std::string var) {
  if (k < 0) throw std::invalid_argument("nu_k requires k >= 0");
  std::vector<std::string> vars{std::move(var)};
  LaurentPoly p(vars);
  for (int i = 0; i < k; ++i) p.add_term(Exponent{i}, 1);
  return p;
}

SharedRoots shared_root_count(const LaurentPoly& p, int n) {
  if (p.nvars() != 1) throw std::invalid_argument("shared_root_count needs a univariate polynomial");
  if (n < 2) throw std::invalid_argument("shared_root_count needs n >= 2");
  if (p.is_zero()) return SharedRoots{n - 1, true};
  const LaurentPoly nu = nu_poly(n, p.vars().front());
  // Only the degree matters: integer content is a unit over Q.
  LaurentPoly g = laurent_gcd(p, nu);
  return SharedRoots{g.degree(0), false};
}

}  // namespace foxhom
