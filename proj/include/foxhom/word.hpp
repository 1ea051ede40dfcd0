#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace foxhom {

// Raised for malformed textual input (words, polynomials, data files).
// `position` is a byte offset into the offending text when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// One run g^e of a word, e != 0.
struct Letter {
  std::string gen;
  std::int64_t exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A freely reduced word stored as maximal runs (g, e). Every constructor and
// operation keeps the run-length form reduced: neighbouring runs have distinct
// generators and no exponent is zero.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word generator(std::string name, std::int64_t exp = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t runs() const noexcept { return letters_.size(); }
  // Number of syllables counted with multiplicity, i.e. sum of |e|.
  std::int64_t length() const;

  Word inverse() const;
  Word pow(std::int64_t k) const;
  // Total exponent of `gen` in the word.
  std::int64_t exponent_sum(std::string_view gen) const;
  // Number of runs whose generator is `gen`.
  std::size_t occurrences(std::string_view gen) const;

  // Replace every occurrence of `gen` by `image` (g^e -> image^e).
  Word substitute(std::string_view gen, const Word& image) const;

  std::string str() const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(const Letter& l);
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// Parse whitespace separated tokens `name` or `name^int`. Every name must be
// in `alphabet`; an empty alphabet span accepts any name.
Word parse_word(std::string_view text, std::span<const std::string> alphabet);

// Coordinate i is the exponent sum of ordering[i] in w.
std::vector<std::int64_t> exponent_vector(const Word& w,
                                          std::span<const std::string> ordering);

Word commutator(const Word& a, const Word& b);

}  // namespace foxhom
