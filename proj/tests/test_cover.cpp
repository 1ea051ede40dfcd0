#include "doctest.h"

#include "foxhom/cover.hpp"
#include "foxhom/fox.hpp"
#include "foxhom/io.hpp"
#include "support.hpp"

using namespace foxhom;
using namespace foxhom::testing;

namespace {

const std::unordered_map<std::string, std::int64_t> kNDegrees{
    {"m", 2}, {"m1", 2}, {"m2", 2}, {"s", 1}, {"t", 1}, {"u", 0}};

Presentation n_final() { return io::load_presentation(data_dir() / "n-final.json"); }

CoverPresentation n_cover(std::int64_t n) {
  return CoverPresentation(CyclicQuotientMap::from_named(n_final(), n, kNDegrees));
}

FillingSpec filling_slopes() {
  return FillingSpec{{word("m"), word("s t s^-1 t"), word("t^-1 s^-1 t s^-1")}};
}

std::vector<Integer> chain(const CoverPresentation& c, const Word& w) {
  std::vector<Integer> v;
  for (auto x : exponent_vector(w, c.generator_names())) v.emplace_back(static_cast<long>(x));
  return v;
}

std::vector<Integer> scaled(std::vector<Integer> v, long k) {
  for (auto& x : v) x *= k;
  return v;
}

}  // namespace

TEST_CASE("cyclic quotient map validation") {
  const Presentation a("Z", {"a"}, {});
  CHECK_THROWS_AS(CyclicQuotientMap(a, 4, {2}), std::invalid_argument);
  const Presentation ab("ab", {"a", "b"}, {word("a b")});
  CHECK_THROWS_AS(CyclicQuotientMap(ab, 3, {1, 0}), std::invalid_argument);
  CHECK_NOTHROW(CyclicQuotientMap(ab, 3, {1, 2}));
  CHECK_THROWS_AS(CyclicQuotientMap::from_named(ab, 3, {{"a", 1}}), std::invalid_argument);
}

TEST_CASE("covers of free groups") {
  const Presentation z("Z", {"a"}, {});
  const CoverPresentation c3(CyclicQuotientMap(z, 3, {1}));
  CHECK(c3.generator_count() == 3);
  CHECK(c3.trivial_count() == 2);
  CHECK(c3.presentation().generator_count() == 1);
  CHECK(cokernel(c3.relation_matrix()) == AbelianGroup(1, {}));

  const Presentation f2("F2", {"a", "b"}, {});
  CHECK(h1_cover(f2, CyclicQuotientMap(f2, 2, {1, 0})) == AbelianGroup(3, {}));

  // Nielsen-Schreier: rank n(g - 1) + 1, also when no single generator has
  // degree coprime to n.
  Rng rng(8);
  for (int i = 0; i < 40; ++i) {
    const auto g = uniform(rng, 1, 4);
    const auto n = uniform(rng, 1, 8);
    std::vector<std::string> gens;
    std::vector<std::int64_t> deg;
    for (std::int64_t k = 0; k < g; ++k) {
      gens.push_back("a" + std::to_string(k));
      deg.push_back(k == 0 ? 1 : uniform(rng, -5, 5));
    }
    const Presentation f("free", gens, {});
    const CoverPresentation c(CyclicQuotientMap(f, n, deg));
    CHECK(c.generator_count() == static_cast<std::size_t>(n * g));
    CHECK(c.trivial_count() == static_cast<std::size_t>(n - 1));
    CHECK(cokernel(c.relation_matrix()).rank() == static_cast<std::size_t>(n * (g - 1) + 1));
  }
  CHECK(h1_cover(f2, CyclicQuotientMap(f2, 6, {2, 3})) == AbelianGroup(7, {}));
}

TEST_CASE("rewriting relators gives relators of the cover") {
  // In the cover, every rewritten relator must lie in the span of the
  // rewritten relators; check via the abelianization at random cosets.
  const CoverPresentation c = n_cover(5);
  const CoverHomology h(c);
  const Presentation base = n_final();
  for (const auto& r : base.relators())
    for (std::int64_t k = 0; k < 5; ++k) CHECK(h.h1().is_zero(c.rewrite_vector(r, k)));
  CHECK(c.relators().size() == 5 * 5);
}

TEST_CASE("cover of the final presentation") {
  const CoverPresentation c = n_cover(3);
  CHECK(c.generator_count() == 18);
  CHECK(c.relators().size() == 15);
  CHECK(c.trivial_count() == 2);
  CHECK(cokernel(c.relation_matrix()).rank() == 3);
  CHECK(h1_cover(n_final(), CyclicQuotientMap::from_named(n_final(), 1, kNDegrees)) ==
        abelianize(n_final()));
  CHECK(h1_cover(n_final(), CyclicQuotientMap::from_named(n_final(), 5, kNDegrees)).rank() == 3);
}

TEST_CASE("transfer") {
  const CoverPresentation c1 = n_cover(1);
  const AbelianQuotient h1(c1.relation_matrix());
  for (const char* g : {"m", "s t", "u^2 m1^-1"})
    CHECK(transfer(c1, word(g)) == c1.rewrite_vector(word(g), 0));

  const CoverPresentation c3 = n_cover(3);
  const CoverHomology h3(c3);
  std::vector<Integer> lifts(c3.generator_count());
  for (std::int64_t k = 0; k < 3; ++k) lifts[c3.index(3, k)] = 1;
  CHECK(transfer(c3, word("s")) == lifts);

  // tr(m) is the class of the full preimage of m, i.e. m^3 read from coset 0.
  const auto tr = transfer(c3, word("m"));
  const auto full = c3.rewrite_vector(word("m^3"), 0);
  CHECK(h3.h1().coordinates(tr) == h3.h1().coordinates(full));
}

TEST_CASE("transfer is fixed by the deck group") {
  Rng rng(12);
  for (std::int64_t n : {3, 5, 7}) {
    const CoverPresentation c = n_cover(n);
    const CoverHomology h(c);
    for (int i = 0; i < 10; ++i) {
      const Word w = random_word(rng, n_final().generators(), 8);
      const auto tr = transfer(c, w);
      for (std::int64_t k = 1; k < n; ++k)
        CHECK(h.h1().coordinates(c.shift(tr, k)) == h.h1().coordinates(tr));
    }
    // The deck action preserves the relation subgroup.
    for (const auto& r : c.relators())
      CHECK(h.h1().is_zero(c.shift(chain(c, r), 1)));
  }
}

TEST_CASE("fillings") {
  const CoverPresentation c1 = n_cover(1);
  CHECK(fill(c1, filling_slopes()) == AbelianGroup(0, {2, 2, 2}));
  CHECK(sakuma_quotient(c1).finite());
  CHECK(mpz_divisible_p(Integer(8).get_mpz_t(), sakuma_quotient(c1).torsion_order().get_mpz_t()));
  CHECK(h_n_module(c1) == AbelianGroup(0, {}));
  CHECK_THROWS_AS(fill(c1, FillingSpec{{Word()}}), std::invalid_argument);

  for (std::int64_t n : {3, 5, 7}) {
    const CoverPresentation c = n_cover(n);
    CHECK(fill(c, filling_slopes()).rank() == 0);
    CHECK(sakuma_quotient(c).rank() == 0);
    CHECK(h_n_module(c).rank() == 0);
    const Integer ratio = sakuma_quotient(c).torsion_order() / h_n_module(c).torsion_order();
    CHECK(mpz_divisible_p(Integer(8).get_mpz_t(), ratio.get_mpz_t()));
  }
}

TEST_CASE("filled slopes generate the same subgroup as the transfers") {
  for (std::int64_t n = 3; n <= 9; n += 2) {
    const CoverPresentation c = n_cover(n);
    const CoverHomology h(c);
    std::vector<std::vector<Integer>> filled;
    for (const auto& r : filling_relators(c, filling_slopes())) filled.push_back(chain(c, r));
    const std::vector<std::vector<Integer>> transfers{
        transfer(c, word("m")), scaled(transfer(c, word("t")), 2), scaled(transfer(c, word("s")), 2)};
    CHECK(h.h1().same_subgroup(filled, transfers));
    // Slope by slope.
    const auto slopes = filling_slopes().slopes;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
      const auto rel = filling_relators(c, FillingSpec{{slopes[i]}});
      REQUIRE(rel.size() == 1);
      const std::vector<std::vector<Integer>> a{chain(c, rel[0])}, b{transfers[i]};
      CHECK(h.h1().same_subgroup(a, b));
    }
    CHECK(fill(c, filling_slopes()) == sakuma_quotient(c));
  }
}

TEST_CASE("filling does not depend on the coset representative") {
  for (std::int64_t n : {3, 5}) {
    const CoverPresentation c = n_cover(n);
    const CoverHomology h(c);
    for (const auto& slope : filling_slopes().slopes) {
      const auto base = filling_relators(c, FillingSpec{{slope}});
      for (std::int64_t k = 0; k < n; ++k) {
        const Word& rep = c.transversal()[k];
        const auto other = c.rewrite_vector(rep * slope.pow(n) * rep.inverse(), 0);
        const std::vector<std::vector<Integer>> a{chain(c, base[0])}, b{other};
        CHECK(h.h1().same_subgroup(a, b));
      }
    }
  }
}

TEST_CASE("cyclic covers of knots against root products") {
  const std::vector<std::pair<Presentation, LaurentPoly>> knots{
      {Presentation("3_1", {"a", "b"}, {word("a b a b^-1 a^-1 b^-1")}), poly("t^2-t+1", {"t"})},
      {Presentation("4_1", {"x", "y"}, {word("x^-1 y x y^-1 x y x^-1 y^-1 x y^-1")}),
       poly("t^2-3*t+1", {"t"})}};
  for (const auto& [k, delta] : knots)
    for (int n = 1; n <= 9; ++n) {
      const AbelianGroup h = h1_cover(k, CyclicQuotientMap(k, n, {1, 1}));
      const int shared = numeric_shared_roots(delta, n);
      CHECK(h.rank() == static_cast<std::size_t>(1 + shared));
      if (shared == 0) CHECK(h.torsion_order().get_d() == root_product(delta, n));
    }
}

TEST_CASE("sakuma rank bookkeeping") {
  const Presentation n = n_final();
  const LaurentPoly dinf = poly("2*x*(x-1)^3*(x+1)^3", {"x"});
  for (std::int64_t k = 3; k <= 9; k += 2) {
    const auto rank = h1_cover(n, CyclicQuotientMap::from_named(n, k, kNDegrees)).rank();
    CHECK(rank == 3 + static_cast<std::size_t>(shared_root_count(dinf, static_cast<int>(k)).count));
  }
}

TEST_CASE("branched betti numbers") {
  const LaurentPoly delta = io::load_poly(data_dir() / "delta_L.json");
  CHECK(branched_betti(delta, 2, 5).betti == 0);
  for (std::int64_t k = 2; k <= 5; ++k) CHECK(branched_betti(delta, k, 7).betti == 0);
  const BranchedBetti one = branched_betti(delta, 1, 5);
  CHECK(one.zero_polynomial);
  CHECK(one.positive());
  CHECK(one.betti == 4);
  CHECK(branched_alexander(delta, 1).is_zero());
  CHECK_THROWS_AS(branched_betti(delta, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(branched_betti(delta, 0, 5), std::invalid_argument);

  const BranchedBetti six = branched_betti(delta, 5, 6);
  CHECK(six.betti == numeric_shared_roots(branched_alexander(delta, 5), 6));

  for (std::int64_t n : {5, 7, 11, 13})
    for (std::int64_t k = 1; k < n; ++k) {
      CHECK(branched_betti(delta, k, n).betti == branched_betti(delta, n - k, n).betti);
      if (k != 1) {
        const auto b = branched_betti(delta, k, n).betti;
        CHECK(b == numeric_shared_roots(branched_alexander(delta, k), static_cast<int>(n)));
      }
    }
}

TEST_CASE("mutation invariance") {
  const std::vector<std::string> xy{"x", "y"};
  const LaurentPoly delta = io::load_poly(data_dir() / "delta_L.json");
  CHECK(mutation_invariance_check(delta, LaurentPoly(xy)));
  CHECK(mutation_invariance_check(delta, delta));
  CHECK(mutation_invariance_check(poly("x-1", xy), poly("y-1", xy)));
  CHECK(!mutation_invariance_check(poly("x-1", xy), poly("y+1", xy)));
}
