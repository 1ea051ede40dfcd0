#include "foxhom/cover.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace foxhom {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

CyclicQuotientMap::CyclicQuotientMap(Presentation base, std::int64_t n,
                                     std::vector<std::int64_t> degrees)
    : base_(std::move(base)), n_(n), degrees_(std::move(degrees)) {
  if (n_ < 1) throw std::invalid_argument("cyclic quotient needs n >= 1");
  if (degrees_.size() != base_.generator_count())
    throw std::invalid_argument("one degree per generator required");
  std::int64_t g = n_;
  for (auto d : degrees_) g = std::gcd(g, mod(d, n_));
  if (g != 1)
    throw std::invalid_argument("degrees do not generate Z/" + std::to_string(n_));
  for (std::size_t i = 0; i < base_.relator_count(); ++i)
    if (residue(base_.relators()[i]) != 0)
      throw std::invalid_argument("relator " + std::to_string(i + 1) + " has nonzero degree mod " +
                                  std::to_string(n_));
}

CyclicQuotientMap CyclicQuotientMap::from_named(
    Presentation base, std::int64_t n,
    const std::unordered_map<std::string, std::int64_t>& degrees) {
  std::vector<std::int64_t> d;
  for (const auto& g : base.generators()) {
    auto it = degrees.find(g);
    if (it == degrees.end()) throw std::invalid_argument("no degree given for generator '" + g + "'");
    d.push_back(it->second);
  }
  for (const auto& [g, v] : degrees)
    if (!base.has_generator(g)) throw std::invalid_argument("degree given for unknown generator '" + g + "'");
  return CyclicQuotientMap(std::move(base), n, std::move(d));
}

std::int64_t CyclicQuotientMap::degree(std::string_view gen) const {
  return degrees_[base_.generator_index(gen)];
}

std::int64_t CyclicQuotientMap::degree(const Word& w) const {
  std::int64_t d = 0;
  for (const auto& l : w.letters()) d += l.exp * degree(l.gen);
  return d;
}

std::int64_t CyclicQuotientMap::residue(const Word& w) const { return mod(degree(w), n_); }

CoverPresentation::CoverPresentation(CyclicQuotientMap map) : map_(std::move(map)) {
  const auto& base = map_.base();
  const std::int64_t n = map_.n();
  const std::size_t g = base.generator_count();
  for (std::size_t i = 0; i < g; ++i) base_index_.emplace(base.generators()[i], i);
  names_.reserve(g * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < g; ++i)
    for (std::int64_t c = 0; c < n; ++c) names_.push_back(base.generators()[i] + "." + std::to_string(c));
  trivial_.assign(names_.size(), false);

  // Schreier transversal: powers of the first generator whose degree is a
  // unit mod n, otherwise a breadth-first spanning tree of the coset graph.
  transversal_.assign(static_cast<std::size_t>(n), Word{});
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[0] = true;
  std::size_t path_gen = g;
  for (std::size_t i = 0; i < g && n > 1; ++i)
    if (std::gcd(mod(map_.degrees()[i], n), n) == 1) {
      path_gen = i;
      break;
    }
  if (path_gen < g) {
    const std::int64_t d = mod(map_.degrees()[path_gen], n);
    std::int64_t c = 0;
    for (std::int64_t j = 0; j + 1 < n; ++j) {
      const std::int64_t next = mod(c + d, n);
      transversal_[next] = transversal_[c] * Word::generator(base.generators()[path_gen]);
      trivial_[index(path_gen, c)] = true;
      c = next;
    }
  } else {
    std::deque<std::int64_t> queue{0};
    while (!queue.empty()) {
      const std::int64_t c = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < g; ++i) {
        const std::int64_t next = mod(c + map_.degrees()[i], n);
        if (seen[next]) continue;
        seen[next] = true;
        transversal_[next] = transversal_[c] * Word::generator(base.generators()[i]);
        trivial_[index(i, c)] = true;
        queue.push_back(next);
      }
    }
  }

  relators_.reserve(base.relator_count() * static_cast<std::size_t>(n));
  for (const auto& r : base.relators())
    for (std::int64_t c = 0; c < n; ++c) relators_.push_back(rewrite(r, c));
}

std::size_t CoverPresentation::index(std::size_t base_gen, std::int64_t coset) const {
  return base_gen * static_cast<std::size_t>(map_.n()) + static_cast<std::size_t>(coset);
}

std::int64_t CoverPresentation::coset_of(std::int64_t x) const { return mod(x, map_.n()); }

std::size_t CoverPresentation::trivial_count() const {
  return static_cast<std::size_t>(std::count(trivial_.begin(), trivial_.end(), true));
}

Word CoverPresentation::rewrite(const Word& w, std::int64_t start) const {
  std::vector<Letter> out;
  std::int64_t c = coset_of(start);
  for (const auto& l : w.letters()) {
    const std::size_t gi = base_index_.at(l.gen);
    const std::int64_t d = map_.degrees()[gi];
    for (std::int64_t i = 0; i < std::abs(l.exp); ++i) {
      if (l.exp > 0) {
        out.push_back(Letter{names_[index(gi, c)], 1});
        c = coset_of(c + d);
      } else {
        c = coset_of(c - d);
        out.push_back(Letter{names_[index(gi, c)], -1});
      }
    }
  }
  return Word(std::move(out));
}

std::vector<Integer> CoverPresentation::rewrite_vector(const Word& w, std::int64_t start) const {
  std::vector<std::int64_t> acc(names_.size(), 0);
  std::int64_t c = coset_of(start);
  for (const auto& l : w.letters()) {
    auto it = base_index_.find(l.gen);
    if (it == base_index_.end()) throw std::invalid_argument("unknown generator '" + l.gen + "'");
    const std::size_t gi = it->second;
    const std::int64_t d = map_.degrees()[gi];
    for (std::int64_t i = 0; i < std::abs(l.exp); ++i) {
      if (l.exp > 0) {
        acc[index(gi, c)] += 1;
        c = coset_of(c + d);
      } else {
        c = coset_of(c - d);
        acc[index(gi, c)] -= 1;
      }
    }
  }
  std::vector<Integer> v(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) v[i] = static_cast<long>(acc[i]);
  return v;
}

Presentation CoverPresentation::presentation() const {
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (!trivial_[i]) gens.push_back(names_[i]);
  std::unordered_map<std::string, bool> is_trivial;
  for (std::size_t i = 0; i < names_.size(); ++i) is_trivial[names_[i]] = trivial_[i];
  std::vector<Word> rels;
  for (const auto& r : relators_) {
    std::vector<Letter> kept;
    for (const auto& l : r.letters())
      if (!is_trivial[l.gen]) kept.push_back(l);
    rels.emplace_back(std::move(kept));
  }
  return Presentation(map_.base().name() + "-cover-" + std::to_string(map_.n()), std::move(gens),
                      std::move(rels));
}

IntegerMatrix CoverPresentation::relation_matrix() const {
  const std::size_t rows = names_.size();
  const std::size_t cols = relators_.size() + trivial_count();
  IntegerMatrix m(rows, cols);
  const auto& base = map_.base();
  const std::int64_t n = map_.n();
  std::size_t col = 0;
  for (const auto& r : base.relators())
    for (std::int64_t c = 0; c < n; ++c, ++col) {
      auto v = rewrite_vector(r, c);
      for (std::size_t i = 0; i < rows; ++i) m(i, col) = v[i];
    }
  for (std::size_t i = 0; i < rows; ++i)
    if (trivial_[i]) m(i, col++) = 1;
  return m;
}

std::vector<Integer> CoverPresentation::shift(const std::vector<Integer>& v, std::int64_t k) const {
  if (v.size() != names_.size()) throw std::invalid_argument("chain has wrong dimension");
  std::vector<Integer> out(v.size());
  const std::int64_t n = map_.n();
  for (std::size_t g = 0; g < map_.base().generator_count(); ++g)
    for (std::int64_t c = 0; c < n; ++c) out[index(g, coset_of(c + k))] = v[index(g, c)];
  return out;
}

CoverPresentation reidemeister_schreier(const Presentation& p, const CyclicQuotientMap& q) {
  if (p.generators() != q.base().generators() || p.relators() != q.base().relators())
    throw std::invalid_argument("quotient map was built for a different presentation");
  return CoverPresentation(q);
}

CoverHomology::CoverHomology(const CoverPresentation& cover)
    : cover_(&cover), h1_(cover.relation_matrix()) {}

AbelianGroup h1_cover(const Presentation& p, const CyclicQuotientMap& q) {
  return cokernel(reidemeister_schreier(p, q).relation_matrix());
}

std::vector<Integer> transfer(const CoverPresentation& cover, const Word& h) {
  std::vector<Integer> sum(cover.generator_count());
  for (std::int64_t c = 0; c < cover.n(); ++c) {
    auto v = cover.rewrite_vector(h, c);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
  }
  return sum;
}

std::vector<Word> filling_relators(const CoverPresentation& cover, const FillingSpec& f) {
  const std::int64_t n = cover.n();
  std::vector<Word> out;
  for (const auto& w : f.slopes) {
    if (w.empty()) throw std::invalid_argument("filling slope must be nonempty");
    const std::int64_t d = cover.quotient_map().residue(w);
    const std::int64_t orbits = std::gcd(d, n);
    const std::int64_t order = n / orbits;
    const Word power = w.pow(order);
    for (std::int64_t c = 0; c < orbits; ++c) {
      const Word& rep = cover.transversal()[static_cast<std::size_t>(c)];
      out.push_back(cover.rewrite(rep * power * rep.inverse(), 0));
    }
  }
  return out;
}

AbelianGroup fill(const CoverPresentation& cover, const FillingSpec& f) {
  const auto words = filling_relators(cover, f);
  std::vector<std::vector<Integer>> cols;
  for (const auto& w : words) {
    auto ev = exponent_vector(w, cover.generator_names());
    std::vector<Integer> v(ev.size());
    for (std::size_t i = 0; i < ev.size(); ++i) v[i] = static_cast<long>(ev[i]);
    cols.push_back(std::move(v));
  }
  IntegerMatrix m = cover.relation_matrix();
  m.append_columns(cols);
  return cokernel(m);
}

AbelianGroup transfer_quotient(const CoverPresentation& cover,
                               const std::vector<WeightedTransfer>& classes) {
  std::vector<std::vector<Integer>> cols;
  for (const auto& c : classes) {
    auto v = transfer(cover, c.h);
    for (auto& x : v) x *= static_cast<long>(c.multiple);
    cols.push_back(std::move(v));
  }
  IntegerMatrix m = cover.relation_matrix();
  m.append_columns(cols);
  return cokernel(m);
}

AbelianGroup sakuma_quotient(const CoverPresentation& cover) {
  const auto& base = cover.quotient_map().base();
  for (const char* g : {"m", "s", "t"})
    if (!base.has_generator(g))
      throw std::invalid_argument(std::string("sakuma quotient needs generator '") + g + "'");
  return transfer_quotient(cover, {{Word::generator("m"), 1},
                                   {Word::generator("s"), 2},
                                   {Word::generator("t"), 2}});
}

AbelianGroup h_n_module(const CoverPresentation& cover) {
  std::vector<WeightedTransfer> classes;
  for (const auto& g : cover.quotient_map().base().generators())
    classes.push_back({Word::generator(g), 1});
  return transfer_quotient(cover, classes);
}

LaurentPoly branched_alexander(const LaurentPoly& delta, std::int64_t k) {
  if (delta.nvars() != 2) throw std::invalid_argument("expected a two-variable polynomial");
  const std::vector<std::string> t{"t"};
  const MonomialImage images[] = {{1, {k}}, {1, {1}}};
  LaurentPoly spec = substitute_monomial(delta, t, images);
  return spec * (LaurentPoly::variable(t, "t") - LaurentPoly::constant(t, 1));
}

BranchedBetti branched_betti(const LaurentPoly& delta, std::int64_t k, std::int64_t n) {
  if (n < 2 || k <= 0 || k >= n) throw std::invalid_argument("branched_betti needs 0 < k < n");
  if (std::gcd(k, n) != 1)
    throw std::invalid_argument("k = " + std::to_string(k) + " and n = " + std::to_string(n) +
                                " are not coprime");
  const SharedRoots r = shared_root_count(branched_alexander(delta, k), static_cast<int>(n));
  return BranchedBetti{r.count, r.all};
}

bool mutation_invariance_check(const LaurentPoly& delta_a, const LaurentPoly& delta_b) {
  if (delta_a.nvars() != 2 || delta_b.nvars() != 2)
    throw std::invalid_argument("expected two-variable polynomials");
  const std::vector<std::string> t{"t"};
  const MonomialImage diag[] = {{1, {1}}, {1, {1}}};
  return substitute_monomial(delta_a, t, diag).unit_equivalent(substitute_monomial(delta_b, t, diag));
}

}  // namespace foxhom
