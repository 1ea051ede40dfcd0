#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "foxhom/abelian.hpp"
#include "foxhom/word.hpp"

namespace foxhom {

// Finite presentation <generators | relators>. Generator names are unique and
// every relator letter names a listed generator; both are checked on
// construction.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string name, std::vector<std::string> generators,
               std::vector<Word> relators);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  std::size_t relator_count() const noexcept { return relators_.size(); }
  // Number of generators minus number of relators.
  long deficiency() const noexcept {
    return static_cast<long>(generators_.size()) - static_cast<long>(relators_.size());
  }

  bool has_generator(std::string_view g) const;
  std::size_t generator_index(std::string_view g) const;

  Presentation renamed(std::string name) const;

 private:
  std::string name_;
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

// Parse a relator, either a single word or `lhs = rhs` (giving lhs rhs^-1).
Word parse_relator(std::string_view text, std::span<const std::string> alphabet);

// Generators x relators matrix of exponent sums; its cokernel is H_1.
IntegerMatrix relation_matrix(const Presentation& p);

AbelianGroup abelianize(const Presentation& p);

// Remove `gen` using relator `rel_index`, in which it must occur exactly once
// with exponent +-1. Other occurrences are replaced by the solved word.
Presentation tietze_eliminate(const Presentation& p, std::string_view gen,
                              std::size_t rel_index);

// Add generator `name` with defining relator name^-1 * definition.
Presentation tietze_add_generator(const Presentation& p, std::string name,
                                  const Word& definition);

// Add a relator that is a consequence of the existing ones. Only the
// syntactic checks are made; the caller vouches for redundancy.
Presentation tietze_add_relator(const Presentation& p, const Word& relator);

}  // namespace foxhom
