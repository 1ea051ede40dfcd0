#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "foxhom/abelian.hpp"
#include "foxhom/laurent.hpp"
#include "foxhom/presentation.hpp"

namespace foxhom {

// Surjection pi_1 -> Z/n given by an integer grading of the generators.
class CyclicQuotientMap {
 public:
  // `degrees` is indexed like base.generators(). Throws unless the residues
  // generate Z/n and every relator has degree 0 mod n.
  CyclicQuotientMap(Presentation base, std::int64_t n, std::vector<std::int64_t> degrees);
  static CyclicQuotientMap from_named(Presentation base, std::int64_t n,
                                      const std::unordered_map<std::string, std::int64_t>& degrees);

  const Presentation& base() const noexcept { return base_; }
  std::int64_t n() const noexcept { return n_; }
  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }
  std::int64_t degree(std::string_view gen) const;
  std::int64_t degree(const Word& w) const;
  // Degree reduced into [0, n).
  std::int64_t residue(const Word& w) const;

 private:
  Presentation base_;
  std::int64_t n_;
  std::vector<std::int64_t> degrees_;
};

// Reidemeister-Schreier presentation of the kernel of a CyclicQuotientMap.
// Cosets are labelled by residues 0..n-1; the Schreier generator (g, c) is
// rep(c) g rep(c + deg g)^-1 and is named "g.c". All n*|gens| Schreier
// generators are kept; the n-1 tree generators of the transversal are
// recorded as trivial.
class CoverPresentation {
 public:
  explicit CoverPresentation(CyclicQuotientMap map);

  const CyclicQuotientMap& quotient_map() const noexcept { return map_; }
  std::int64_t n() const noexcept { return map_.n(); }
  std::size_t generator_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  std::size_t index(std::size_t base_gen, std::int64_t coset) const;
  const std::vector<Word>& transversal() const noexcept { return transversal_; }
  const std::vector<bool>& trivial() const noexcept { return trivial_; }
  std::size_t trivial_count() const;
  // Rewritten base relators, n per base relator, before any reduction.
  const std::vector<Word>& relators() const noexcept { return relators_; }

  // Rewrite a base word read from coset `start` into Schreier generators.
  Word rewrite(const Word& w, std::int64_t start) const;
  // Exponent vector of rewrite(w, start) over all Schreier generators.
  std::vector<Integer> rewrite_vector(const Word& w, std::int64_t start) const;

  // Presentation with the trivial generators deleted.
  Presentation presentation() const;
  // Schreier generators x (relators + trivial generators); cokernel is H_1.
  IntegerMatrix relation_matrix() const;

  // Deck transformation: coset label c -> c + k on chain coordinates.
  std::vector<Integer> shift(const std::vector<Integer>& v, std::int64_t k) const;

 private:
  std::int64_t coset_of(std::int64_t x) const;

  CyclicQuotientMap map_;
  std::unordered_map<std::string, std::size_t> base_index_;
  std::vector<std::string> names_;
  std::vector<Word> transversal_;
  std::vector<bool> trivial_;
  std::vector<Word> relators_;
};

CoverPresentation reidemeister_schreier(const Presentation& p, const CyclicQuotientMap& q);

// H_1 of the cover with the machinery to classify chains.
class CoverHomology {
 public:
  explicit CoverHomology(const CoverPresentation& cover);
  const CoverPresentation& cover() const noexcept { return *cover_; }
  const AbelianQuotient& h1() const noexcept { return h1_; }
  const AbelianGroup& group() const noexcept { return h1_.group(); }

 private:
  const CoverPresentation* cover_;
  AbelianQuotient h1_;
};

AbelianGroup h1_cover(const Presentation& p, const CyclicQuotientMap& q);

// Sum of the lifts of h over all cosets, as a chain on Schreier generators.
std::vector<Integer> transfer(const CoverPresentation& cover, const Word& h);

struct FillingSpec {
  std::vector<Word> slopes;
};

// For each slope w of degree order o in Z/n, the relators rep(c) w^o rep(c)^-1
// for one coset c per orbit of the shift by deg(w).
std::vector<Word> filling_relators(const CoverPresentation& cover, const FillingSpec& f);
AbelianGroup fill(const CoverPresentation& cover, const FillingSpec& f);

struct WeightedTransfer {
  Word h;
  std::int64_t multiple = 1;
};

// H_1(cover) / < multiple * transfer(h) >.
AbelianGroup transfer_quotient(const CoverPresentation& cover,
                               const std::vector<WeightedTransfer>& classes);
// H_1(cover) / < tr(m), 2 tr(s), 2 tr(t) >; needs generators m, s, t.
AbelianGroup sakuma_quotient(const CoverPresentation& cover);
// H_1(cover) / < tr(g) : g a base generator >.
AbelianGroup h_n_module(const CoverPresentation& cover);

// (t-1) * delta(t^k, t) for a two-variable delta.
LaurentPoly branched_alexander(const LaurentPoly& delta, std::int64_t k);

struct BranchedBetti {
  std::int64_t betti = 0;
  // Set when the specialised polynomial vanishes; betti is then n-1 and only
  // positivity is asserted.
  bool zero_polynomial = false;
  bool positive() const noexcept { return betti > 0; }
};

BranchedBetti branched_betti(const LaurentPoly& delta, std::int64_t k, std::int64_t n);

// delta_a(t, t) and delta_b(t, t) agree up to a unit.
bool mutation_invariance_check(const LaurentPoly& delta_a, const LaurentPoly& delta_b);

}  // namespace foxhom
