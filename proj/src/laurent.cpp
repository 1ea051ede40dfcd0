#include "foxhom/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "foxhom/word.hpp"

namespace foxhom {

namespace {

std::int64_t total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

bool grlex_less(const Exponent& a, const Exponent& b) {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const Integer& c) {
  LaurentPoly p(std::move(vars));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exponent exp, const Integer& c) {
  if (exp.size() != vars.size()) throw std::invalid_argument("exponent length mismatch");
  LaurentPoly p(std::move(vars));
  p.add_term(exp, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> vars, std::string_view name) {
  LaurentPoly p(std::move(vars));
  Exponent e(p.nvars(), 0);
  e[p.var_index(name)] = 1;
  p.add_term(e, 1);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (auto x : e)
      if (x < 0) return false;
  return true;
}

std::size_t LaurentPoly::var_index(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

Integer LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Exponent LaurentPoly::min_exponents() const {
  Exponent m(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  Exponent m(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

std::int64_t LaurentPoly::degree(std::size_t i) const { return max_exponents().at(i); }

bool LaurentPoly::involves(std::size_t i) const {
  return std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  if (shift.size() != vars_.size()) throw std::invalid_argument("shift length mismatch");
  LaurentPoly p(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
    p.terms_.emplace_hint(p.terms_.end(), std::move(f), c);
  }
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LaurentPoly::Terms::const_iterator LaurentPoly::leading_term() const {
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return best;
}

LaurentPoly LaurentPoly::normal_form() const {
  if (is_zero()) return *this;
  Exponent m = min_exponents();
  for (auto& x : m) x = -x;
  LaurentPoly p = shifted(m);
  if (p.leading_term()->second < 0) p = -p;
  return p;
}

bool LaurentPoly::unit_equivalent(const LaurentPoly& other) const {
  return normal_form() == other.normal_form();
}

void LaurentPoly::check_compatible(const LaurentPoly& rhs) const {
  if (vars_ != rhs.vars_) throw std::invalid_argument("mismatched variable lists");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly p(a.vars_);
  Exponent e(a.nvars());
  Integer c;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      p.add_term(e, c);
    }
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    const bool constant_term = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (mag != 1 || constant_term) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << vars_[i];
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

LaurentPoly substitute_monomial(const LaurentPoly& p, std::vector<std::string> target_vars,
                                std::span<const MonomialImage> images) {
  if (images.size() != p.nvars())
    throw std::invalid_argument("substitution must assign every variable");
  for (const auto& im : images) {
    if (im.sign != 1 && im.sign != -1)
      throw std::invalid_argument("substitution image must be a signed monomial");
    if (im.exp.size() != target_vars.size())
      throw std::invalid_argument("substitution image has wrong exponent length");
  }
  LaurentPoly out(std::move(target_vars));
  Exponent e(out.nvars());
  for (const auto& [src, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] == 0) continue;
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += src[i] * images[i].exp[j];
      if (images[i].sign < 0 && (src[i] % 2 != 0)) sign = -sign;
    }
    out.add_term(e, sign < 0 ? Integer(-c) : c);
  }
  return out;
}

namespace {

// Division of polynomials (nonnegative exponents) when exact.
std::optional<LaurentPoly> exact_divide_poly(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly quotient(p.vars());
  if (p.is_zero()) return quotient;
  // Exponents of an exact quotient lie in a box fixed by the degrees.
  const Exponent plo = p.min_exponents(), phi = p.max_exponents();
  const Exponent qlo = q.min_exponents(), qhi = q.max_exponents();
  const auto& [lq_exp, lq_coef] = *q.terms().rbegin();
  LaurentPoly rem = p;
  Exponent diff(p.nvars());
  Integer coef;
  while (!rem.is_zero()) {
    const auto& [lr_exp, lr_coef] = *rem.terms().rbegin();
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = lr_exp[i] - lq_exp[i];
      if (diff[i] < plo[i] - qlo[i] || diff[i] > phi[i] - qhi[i]) return std::nullopt;
    }
    if (!mpz_divisible_p(lr_coef.get_mpz_t(), lq_coef.get_mpz_t())) return std::nullopt;
    mpz_divexact(coef.get_mpz_t(), lr_coef.get_mpz_t(), lq_coef.get_mpz_t());
    LaurentPoly t = LaurentPoly::monomial(p.vars(), diff, coef);
    quotient += t;
    rem -= t * q;
  }
  return quotient;
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.vars() != q.vars()) throw std::invalid_argument("mismatched variable lists");
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return LaurentPoly(p.vars());
  Exponent pm = p.min_exponents(), qm = q.min_exponents();
  Exponent np = pm, nq = qm, back(pm.size());
  for (std::size_t i = 0; i < pm.size(); ++i) {
    np[i] = -pm[i];
    nq[i] = -qm[i];
    back[i] = pm[i] - qm[i];
  }
  auto r = exact_divide_poly(p.shifted(np), q.shifted(nq));
  if (!r) return std::nullopt;
  return r->shifted(back);
}

// ---------------------------------------------------------------------------
// Text parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial: " + msg + " at offset " + std::to_string(pos_), pos_);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly acc(vars_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  LaurentPoly term() {
    LaurentPoly acc = power();
    while (true) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        LaurentPoly d = power();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        auto q = exact_divide(acc, d);
        if (!q) {
          pos_ = at;
          fail("inexact division");
        }
        acc = std::move(*q);
      } else {
        break;
      }
    }
    return acc;
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!accept('^')) return base;
    skip();
    bool paren = accept('(');
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t k = 0;
    const char* first = text_.data() + start;
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, k);
    if (ec != std::errc{} || ptr != text_.data() + pos_) fail("malformed exponent");
    if (paren && !accept(')')) fail("expected ')'");
    if (k >= 0) return base.pow(static_cast<unsigned>(k));
    if (!base.is_monomial() || abs(base.terms().begin()->second) != 1)
      fail("negative power of a non-unit");
    Exponent e = base.terms().begin()->first;
    for (auto& x : e) x *= k;
    Integer c = base.terms().begin()->second;
    if (c < 0 && (k % 2 == 0)) c = 1;
    return LaurentPoly::monomial(vars_, std::move(e), c);
  }

  LaurentPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly::constant(vars_, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return LaurentPoly::variable(vars_, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return PolyParser(text, vars).parse();
}

}  // namespace foxhom
