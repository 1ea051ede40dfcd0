// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// budget. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "foxhom/cover.hpp"
#include "foxhom/fox.hpp"
#include "foxhom/io.hpp"
#include "support.hpp"

using namespace foxhom;
using namespace foxhom::testing;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::unordered_map<std::string, std::int64_t> kNDegrees{
    {"m", 2}, {"m1", 2}, {"m2", 2}, {"s", 1}, {"t", 1}, {"u", 0}};

Presentation n_final() { return io::load_presentation(data_dir() / "n-final.json"); }
AbelianizationMap free_map(const Presentation& n) {
  return io::load_map(data_dir() / "map-free-abelian.json", n.generators());
}
json goldens() { return io::read_json(data_dir() / "goldens.json"); }

FillingSpec filling_slopes(const Presentation& n) {
  const json c = io::read_json(data_dir() / "constants.json");
  FillingSpec f;
  for (const char* k : {"meridian", "slope_b", "slope_a"})
    f.slopes.push_back(parse_word(c["slopes"][k].get<std::string>(), n.generators()));
  return f;
}

std::vector<Integer> scaled(std::vector<Integer> v, long k) {
  for (auto& x : v) x *= k;
  return v;
}

Outcome matrix_golden() {
  Outcome o;
  const Presentation n = n_final();
  const AlexanderMatrix am = alexander_matrix(n, free_map(n));
  const json printed = io::read_json(data_dir() / "matrix_section3.json");
  o.require(am.matrix.rows() == 6 && am.matrix.cols() == 5, "matrix is not 6 x 5");
  if (!o.pass) return o;
  int equal = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const LaurentPoly want = parse_poly(printed["entries"][i][j].get<std::string>(), kXYZ);
      o.require(want == am.matrix(i, j), "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") differs: " + am.matrix(i, j).str());
      equal += want == am.matrix(i, j);
    }
  if (o.pass) o.detail = std::to_string(equal) + "/30 entries equal exactly";
  return o;
}

Outcome minors_golden() {
  Outcome o;
  const Presentation n = n_final();
  const AlexanderMatrix am = alexander_matrix(n, free_map(n));
  const json g = goldens();
  const auto minors = minor_polys(am);
  int exact = 0;
  for (std::size_t i = 0; i < n.generator_count(); ++i) {
    const std::string gen = n.generators()[i];
    const LaurentPoly want = parse_poly(g["minors"][gen].get<std::string>(), kXYZ);
    o.require(want.unit_equivalent(minors.at(gen)), "p_" + gen + " differs");
    exact += row_deleted_minor(am, i) == want;
  }
  o.require(minors.at("u").is_zero(), "p_u is not zero");
  if (o.pass) o.detail = "6/6 up to unit (" + std::to_string(exact) + "/6 identical with sign and unit)";
  return o;
}

Outcome delta_golden() {
  Outcome o;
  const Presentation n = n_final();
  const json g = goldens();
  const LaurentPoly delta = alexander_poly(n, free_map(n));
  o.require(delta.unit_equivalent(parse_poly(g["delta"]["value"].get<std::string>(), kXYZ)),
            "Delta(x,y,z) = " + delta.str());
  const AbelianizationMap cyc = io::load_map(data_dir() / "map-infinite-cyclic.json", n.generators());
  // m -> x^2, s -> x, t -> x read off the two bundled maps.
  std::vector<MonomialImage> images;
  for (const char* gen : {"m", "s", "t"}) images.push_back(cyc.image(gen));
  const LaurentPoly dinf = substitute_monomial(delta, cyc.variables(), images);
  o.require(dinf.unit_equivalent(parse_poly("2*x*(x-1)^3*(x+1)^3", {"x"})),
            "Delta(x^2,x,x) = " + dinf.normal_form().str());
  return o;
}

Outcome h1_golden() {
  Outcome o;
  const AbelianGroup n = abelianize(n_final());
  const AbelianGroup nb = abelianize(io::load_presentation(data_dir() / "nb.json"));
  o.require(n == AbelianGroup(3, {2}), "H1(N) = " + n.str());
  o.require(nb == AbelianGroup(3, {}), "H1(Nb) = " + nb.str());
  if (o.pass) o.detail = "H1(N) = " + n.str() + ", H1(Nb) = " + nb.str();
  return o;
}

Outcome factorization_golden() {
  Outcome o;
  const LaurentPoly delta = io::load_poly(data_dir() / "delta_L.json");
  const std::vector<std::string> t{"t"};
  const LaurentPoly tm1 = parse_poly("t-1", t);
  std::vector<std::int64_t> off_by_t_minus_1;
  for (std::int64_t k = 2; k <= 12; ++k) {
    const LaurentPoly lhs = branched_alexander(delta, k);
    const LaurentPoly rhs = (tm1.pow(5) * nu_poly(static_cast<int>(k - 1)) *
                             nu_poly(static_cast<int>(k)) * nu_poly(static_cast<int>(k + 1)))
                                .shifted({-(3 * k - 1)});
    o.require(lhs.unit_equivalent(rhs), "k = " + std::to_string(k) + " differs");
    if (!lhs.unit_equivalent(rhs) && lhs.unit_equivalent(rhs * tm1)) off_by_t_minus_1.push_back(k);
  }
  if (!o.pass && off_by_t_minus_1.size() == 11)
    o.detail += "; for every k in 2..12 (t-1)*Delta_L(t^k,t) equals the printed right-hand side "
                "times (t-1), i.e. the printed right-hand side is Delta_L(t^k,t)";
  return o;
}

Outcome theorem_reproduction() {
  Outcome o;
  const LaurentPoly delta = io::load_poly(data_dir() / "delta_L.json");
  int cells = 0;
  for (std::int64_t n : {5, 7, 11, 13})
    for (std::int64_t k = 1; k < n; ++k) {
      const BranchedBetti b = branched_betti(delta, k, n);
      const std::string at = "(n,k) = (" + std::to_string(n) + "," + std::to_string(k) + ")";
      if (k == 1 || k == n - 1)
        o.require(b.positive(), at + " not positive");
      else
        o.require(b.betti == 0 && !b.zero_polynomial, at + " b1 = " + std::to_string(b.betti));
      ++cells;
    }
  if (o.pass) o.detail = std::to_string(cells) + " grid cells";
  return o;
}

Outcome lemma_reproduction() {
  Outcome o;
  const Presentation n = n_final();
  const FillingSpec slopes = filling_slopes(n);
  std::string summary;
  for (std::int64_t k : {3, 5, 7, 9}) {
    const CoverPresentation c(CyclicQuotientMap::from_named(n, k, kNDegrees));
    const AbelianGroup s = fill(c, slopes), q = sakuma_quotient(c), h = h_n_module(c);
    const std::string at = "n = " + std::to_string(k);
    o.require(s.rank() == 0, at + ": H1(S_n) = " + s.str());
    o.require(q.rank() == s.rank(), at + ": sakuma rank " + std::to_string(q.rank()));
    o.require(h.finite(), at + ": H_n infinite");
    if (q.finite() && h.finite()) {
      const Integer a = q.torsion_order(), b = h.torsion_order();
      const bool ok = mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) &&
                      mpz_divisible_p(Integer(8).get_mpz_t(), Integer(a / b).get_mpz_t());
      o.require(ok, at + ": order ratio " + a.get_str() + "/" + b.get_str());
      summary += (summary.empty() ? "" : ", ") + at + " |H1(S_n)| = " + s.torsion_order().get_str() +
                 " ratio " + Integer(a / b).get_str();
    }
  }
  if (o.pass) o.detail = summary;
  return o;
}

Outcome cross_method() {
  Outcome o;
  const Presentation n = n_final();
  const LaurentPoly delta = alexander_poly(n, free_map(n));
  const AbelianizationMap cyc = io::load_map(data_dir() / "map-infinite-cyclic.json", n.generators());
  std::vector<MonomialImage> images;
  for (const char* gen : {"m", "s", "t"}) images.push_back(cyc.image(gen));
  const LaurentPoly dinf = substitute_monomial(delta, cyc.variables(), images);
  const std::size_t base = abelianize(n).rank();
  for (std::int64_t k = 3; k <= 15; k += 2) {
    const auto rank = h1_cover(n, CyclicQuotientMap::from_named(n, k, kNDegrees)).rank();
    const auto shared = shared_root_count(dinf, static_cast<int>(k)).count;
    o.require(rank == base + static_cast<std::size_t>(shared) && rank == 3,
              "n = " + std::to_string(k) + ": rank " + std::to_string(rank) + " vs 3 + " +
                  std::to_string(shared));
  }
  if (o.pass) o.detail = "rank H1(N_n) = 3 for n = 3, 5, ..., 15";
  return o;
}

Outcome property_suites() {
  Outcome o;
  Rng rng(20240601);

  const std::vector<std::string> gens{"a", "b", "c"};
  int fox = 0;
  for (int i = 0; i < 500; ++i) {
    const AbelianizationMap phi = random_map(rng, gens);
    const Word u = random_word(rng, gens, 12), v = random_word(rng, gens, 12);
    const LaurentPoly one = LaurentPoly::constant(phi.variables(), 1);
    LaurentPoly fundamental(phi.variables());
    bool ok = true;
    for (const auto& g : gens) {
      const LaurentPoly du = fox_derivative(u, g, phi);
      ok = ok && du == fox_oracle(u, g, phi);
      ok = ok && fox_derivative(u * v, g, phi) == du + phi.apply_poly(u) * fox_derivative(v, g, phi);
      fundamental += du * (phi.image_poly(g) - one);
    }
    ok = ok && fundamental == phi.apply_poly(u) - one;
    o.require(ok, "Fox identity fails on " + u.str());
    fox += ok;
  }

  int snf = 0;
  for (int i = 0; i < 200; ++i) {
    const IntegerMatrix m = random_matrix(rng, uniform(rng, 1, 6), uniform(rng, 1, 6), 9);
    const bool ok = smith_normal_form(m).divisors == determinantal_invariants(m);
    o.require(ok, "SNF differs from determinantal divisors");
    snf += ok;
  }

  int tietze = 0;
  for (int i = 0; i < 100; ++i) {
    const bool ok = tietze_trial(rng);
    o.require(ok, "Tietze move changed the abelianization");
    tietze += ok;
  }

  const Presentation n = n_final();
  const FillingSpec slopes = filling_slopes(n);
  int covers = 0;
  for (std::int64_t k = 3; k <= 9; k += 2) {
    const CoverPresentation c(CyclicQuotientMap::from_named(n, k, kNDegrees));
    const CoverHomology h(c);
    const std::vector<std::vector<Integer>> transfers{
        transfer(c, slopes.slopes[0]), scaled(transfer(c, parse_word("t", n.generators())), 2),
        scaled(transfer(c, parse_word("s", n.generators())), 2)};
    std::vector<std::vector<Integer>> filled;
    for (const auto& r : filling_relators(c, slopes)) {
      std::vector<Integer> v;
      for (auto x : exponent_vector(r, c.generator_names())) v.emplace_back(static_cast<long>(x));
      filled.push_back(std::move(v));
    }
    bool ok = h.h1().same_subgroup(filled, transfers);
    for (std::size_t i = 0; i < filled.size(); ++i) {
      const std::vector<std::vector<Integer>> a{filled[i]}, b{transfers[i]};
      ok = ok && h.h1().same_subgroup(a, b);
    }
    o.require(ok, "n = " + std::to_string(k) + ": filled slopes and transfers differ");
    covers += ok;
  }
  if (o.pass)
    o.detail = std::to_string(fox) + " Fox words, " + std::to_string(snf) + " SNF matrices, " +
               std::to_string(tietze) + " Tietze sequences, " + std::to_string(covers) +
               " covers";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Alexander matrix golden", 1, matrix_golden},
      {2, "minors golden", 1, minors_golden},
      {3, "Delta and Delta_inf goldens", 1, delta_golden},
      {4, "H1(N) and H1(Nb) goldens", 1, h1_golden},
      {5, "(t-1)Delta_L(t^k,t) factorization golden, k = 2..12", 1, factorization_golden},
      {6, "branched cover Betti numbers, n in {5,7,11,13}", 5, theorem_reproduction},
      {7, "filled covers S_n are rational homology spheres, n in {3,5,7,9}", 30, lemma_reproduction},
      {8, "rank H1(N_n) by Reidemeister-Schreier vs Fox calculus, odd n <= 15", 60, cross_method},
      {9, "property suites", 60, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) o.require(false, "over time budget");
    if (!o.pass) ++failures;
    std::printf("criterion %d %s  %s  [%.3f s of %.0f s]%s%s\n", c.id, o.pass ? "PASS" : "FAIL",
                c.title, secs, c.budget_seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
