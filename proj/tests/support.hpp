#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. None of these call the library routine they check.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "foxhom/abelian.hpp"
#include "foxhom/fox.hpp"
#include "foxhom/laurent.hpp"
#include "foxhom/presentation.hpp"
#include "foxhom/word.hpp"

namespace foxhom::testing {

inline std::filesystem::path data_dir() { return FOXHOM_TEST_DATA; }

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Letters with exponent +-1 only, so words come out unreduced before Word's
// constructor sees them.
inline Word random_word(Rng& rng, const std::vector<std::string>& gens, int max_letters) {
  std::vector<Letter> letters;
  const auto len = uniform(rng, 0, max_letters);
  for (std::int64_t i = 0; i < len; ++i)
    letters.push_back({gens[uniform(rng, 0, static_cast<std::int64_t>(gens.size()) - 1)],
                       uniform(rng, 0, 1) ? 1 : -1});
  return Word(std::move(letters));
}

inline IntegerMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

// Fraction-free Bareiss determinant of a square integer matrix.
inline Integer integer_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, out, i + 1);
    cur.pop_back();
  }
}

// Invariant factors s_k = D_k / D_{k-1}, where D_k is the gcd of all k x k
// minors; stops at the first k with D_k = 0.
inline std::vector<Integer> determinantal_invariants(const IntegerMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    combinations(m.rows(), k, cur, rs);
    combinations(m.cols(), k, cur, cs);
    Integer d = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
        Integer det = integer_det(std::move(sub));
        mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), det.get_mpz_t());
      }
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

// Fox derivative letter by letter: for each letter g^(+1) at position i add
// phi(prefix); for g^(-1) subtract phi(prefix) * phi(g)^-1.
inline LaurentPoly fox_oracle(const Word& w, const std::string& gen, const AbelianizationMap& phi) {
  const auto& vars = phi.variables();
  LaurentPoly result(vars);
  LaurentPoly prefix = LaurentPoly::constant(vars, 1);
  for (const auto& l : w.letters()) {
    const LaurentPoly g = phi.image_poly(l.gen);
    const MonomialImage& gi = phi.image(l.gen);
    Exponent neg(gi.exp.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -gi.exp[i];
    const LaurentPoly g_inv = LaurentPoly::monomial(vars, neg, gi.sign);
    const std::int64_t steps = l.exp > 0 ? l.exp : -l.exp;
    for (std::int64_t s = 0; s < steps; ++s) {
      if (l.exp > 0) {
        if (l.gen == gen) result += prefix;
        prefix = prefix * g;
      } else {
        prefix = prefix * g_inv;
        if (l.gen == gen) result -= prefix;
      }
    }
  }
  return result;
}

// Value of a univariate integer polynomial at a complex point.
inline std::complex<double> evaluate(const LaurentPoly& p, std::complex<double> z) {
  std::complex<double> v = 0;
  for (const auto& [e, c] : p.terms()) v += c.get_d() * std::pow(z, static_cast<double>(e[0]));
  return v;
}

// |prod of p(zeta)| over the n-th roots of unity zeta != 1, rounded.
inline double root_product(const LaurentPoly& p, int n) {
  std::complex<double> prod = 1;
  for (int j = 1; j < n; ++j) prod *= evaluate(p, std::polar(1.0, 2 * M_PI * j / n));
  return std::round(std::abs(prod));
}

// Number of nontrivial n-th roots of unity at which p vanishes numerically.
inline int numeric_shared_roots(const LaurentPoly& p, int n) {
  int count = 0;
  for (int j = 1; j < n; ++j)
    if (std::abs(evaluate(p, std::polar(1.0, 2 * M_PI * j / n))) < 1e-7) ++count;
  return count;
}

// Random presentation put through eight random Tietze moves; true when the
// abelianization never changes.
inline bool tietze_trial(Rng& rng) {
  std::vector<std::string> gens;
  const auto g = uniform(rng, 2, 4);
  for (std::int64_t i = 0; i < g; ++i) gens.push_back("a" + std::to_string(i));
  std::vector<Word> rels;
  const auto r = uniform(rng, 0, 4);
  for (std::int64_t i = 0; i < r; ++i) rels.push_back(random_word(rng, gens, 10));
  Presentation p("random", gens, rels);
  const AbelianGroup h = abelianize(p);
  int fresh = 0;
  for (int step = 0; step < 8; ++step) {
    const auto move = uniform(rng, 0, 2);
    if (move == 0) {
      p = tietze_add_generator(p, "n" + std::to_string(fresh++), random_word(rng, p.generators(), 8));
    } else if (move == 1 && p.relator_count() > 0) {
      Word consequence;
      for (int k = 0; k < 3; ++k) {
        const auto& rel = p.relators()[uniform(rng, 0, static_cast<std::int64_t>(p.relator_count()) - 1)];
        const Word c = random_word(rng, p.generators(), 5);
        consequence *= c * (uniform(rng, 0, 1) ? rel : rel.inverse()) * c.inverse();
      }
      p = tietze_add_relator(p, consequence);
    } else {
      bool done = false;
      for (std::size_t ri = 0; ri < p.relator_count() && !done; ++ri)
        for (const auto& l : p.relators()[ri].letters())
          if ((l.exp == 1 || l.exp == -1) && p.relators()[ri].occurrences(l.gen) == 1 &&
              p.generator_count() > 1) {
            p = tietze_eliminate(p, l.gen, ri);
            done = true;
            break;
          }
    }
    if (!(abelianize(p) == h)) return false;
  }
  return true;
}

inline AbelianizationMap random_map(Rng& rng, const std::vector<std::string>& gens) {
  std::vector<MonomialImage> images;
  for (std::size_t i = 0; i < gens.size(); ++i)
    images.push_back({uniform(rng, 0, 4) == 0 ? -1 : 1, {uniform(rng, -2, 2), uniform(rng, -2, 2)}});
  return AbelianizationMap(gens, {"x", "y"}, images);
}

inline LaurentPoly poly(const std::string& text, const std::vector<std::string>& vars) {
  return parse_poly(text, vars);
}

inline Word word(const std::string& text) { return parse_word(text, {}); }

}  // namespace foxhom::testing
