#include "foxhom/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>

namespace foxhom {

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (auto& l : letters) push(l);
}

Word Word::generator(std::string name, std::int64_t exp) {
  Word w;
  w.push(Letter{std::move(name), exp});
  return w;
}

void Word::push(const Letter& l) {
  if (l.exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == l.gen) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& l : letters_) n += std::abs(l.exp);
  return n;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(Letter{it->gen, -it->exp});
  return w;
}

Word Word::pow(std::int64_t k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (std::int64_t i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

std::int64_t Word::exponent_sum(std::string_view gen) const {
  std::int64_t s = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

std::size_t Word::occurrences(std::string_view gen) const {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(), [&](const Letter& l) { return l.gen == gen; }));
}

Word Word::substitute(std::string_view gen, const Word& image) const {
  Word out;
  for (const auto& l : letters_) {
    if (l.gen == gen)
      out *= image.pow(l.exp);
    else
      out.push(l);
  }
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  for (const auto& l : rhs.letters_) push(l);
  return *this;
}

std::string Word::str() const {
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += ' ';
    s += l.gen;
    if (l.exp != 1) {
      s += '^';
      s += std::to_string(l.exp);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> alphabet) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    std::string_view tok = text.substr(start, i - start);
    std::string_view name = tok;
    std::int64_t exp = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      name = tok.substr(0, caret);
      std::string_view e = tok.substr(caret + 1);
      const char* first = e.data();
      const char* last = e.data() + e.size();
      if (!e.empty() && e.front() == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, exp);
      if (e.empty() || ec != std::errc{} || ptr != last)
        throw ParseError("malformed exponent in token '" + std::string(tok) + "'",
                         start + caret + 1);
      if (exp == 0)
        throw ParseError("zero exponent in token '" + std::string(tok) + "'",
                         start + caret + 1);
    }
    if (name.empty()) throw ParseError("missing generator name", start);
    if (!alphabet.empty() &&
        std::find(alphabet.begin(), alphabet.end(), name) == alphabet.end())
      throw ParseError("unknown generator '" + std::string(name) + "'", start);
    letters.push_back(Letter{std::string(name), exp});
  }
  return Word(std::move(letters));
}

std::vector<std::int64_t> exponent_vector(const Word& w,
                                          std::span<const std::string> ordering) {
  std::vector<std::int64_t> v(ordering.size(), 0);
  for (const auto& l : w.letters()) {
    auto it = std::find(ordering.begin(), ordering.end(), l.gen);
    if (it == ordering.end())
      throw std::invalid_argument("letter '" + l.gen + "' outside the ordering");
    v[static_cast<std::size_t>(it - ordering.begin())] += l.exp;
  }
  return v;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

}  // namespace foxhom
