#include "foxhom/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

namespace foxhom {

Presentation::Presentation(std::string name, std::vector<std::string> generators,
                           std::vector<Word> relators)
    : name_(std::move(name)), generators_(std::move(generators)), relators_(std::move(relators)) {
  std::unordered_set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw std::invalid_argument("empty generator name");
    if (!seen.insert(g).second)
      throw std::invalid_argument("duplicate generator '" + g + "'");
  }
  for (const auto& r : relators_)
    for (const auto& l : r.letters())
      if (!seen.contains(l.gen))
        throw std::invalid_argument("relator uses unknown generator '" + l.gen + "'");
}

bool Presentation::has_generator(std::string_view g) const {
  return std::find(generators_.begin(), generators_.end(), g) != generators_.end();
}

std::size_t Presentation::generator_index(std::string_view g) const {
  auto it = std::find(generators_.begin(), generators_.end(), g);
  if (it == generators_.end())
    throw std::invalid_argument("unknown generator '" + std::string(g) + "'");
  return static_cast<std::size_t>(it - generators_.begin());
}

Presentation Presentation::renamed(std::string name) const {
  Presentation p = *this;
  p.name_ = std::move(name);
  return p;
}

Word parse_relator(std::string_view text, std::span<const std::string> alphabet) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) return parse_word(text, alphabet);
  if (text.find('=', eq + 1) != std::string_view::npos)
    throw ParseError("more than one '=' in relator", text.find('=', eq + 1));
  Word lhs = parse_word(text.substr(0, eq), alphabet);
  Word rhs;
  try {
    rhs = parse_word(text.substr(eq + 1), alphabet);
  } catch (const ParseError& e) {
    throw ParseError(e.what(),
                     e.position() == ParseError::npos ? e.position() : e.position() + eq + 1);
  }
  return lhs * rhs.inverse();
}

IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix m(p.generator_count(), p.relator_count());
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    auto v = exponent_vector(p.relators()[j], p.generators());
    for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = static_cast<long>(v[i]);
  }
  return m;
}

AbelianGroup abelianize(const Presentation& p) { return cokernel(relation_matrix(p)); }

Presentation tietze_eliminate(const Presentation& p, std::string_view gen,
                              std::size_t rel_index) {
  if (!p.has_generator(gen))
    throw std::invalid_argument("generator '" + std::string(gen) + "' absent");
  if (rel_index >= p.relator_count()) throw std::out_of_range("relator index out of range");
  const Word& rel = p.relators()[rel_index];
  const auto& letters = rel.letters();
  auto it = std::find_if(letters.begin(), letters.end(),
                         [&](const Letter& l) { return l.gen == gen; });
  if (it == letters.end() || rel.occurrences(gen) != 1 || std::abs(it->exp) != 1)
    throw std::invalid_argument("generator '" + std::string(gen) +
                                "' must occur exactly once with exponent +-1 in relator " +
                                std::to_string(rel_index));
  // rel = A g^e B
  const Word a(std::vector<Letter>(letters.begin(), it));
  const Word b(std::vector<Letter>(it + 1, letters.end()));
  const Word solved = it->exp == 1 ? a.inverse() * b.inverse() : b * a;

  std::vector<std::string> gens;
  for (const auto& g : p.generators())
    if (g != gen) gens.push_back(g);
  std::vector<Word> rels;
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    if (i != rel_index) rels.push_back(p.relators()[i].substitute(gen, solved));
  return Presentation(p.name(), std::move(gens), std::move(rels));
}

Presentation tietze_add_generator(const Presentation& p, std::string name,
                                  const Word& definition) {
  if (p.has_generator(name))
    throw std::invalid_argument("generator '" + name + "' already present");
  for (const auto& l : definition.letters())
    if (!p.has_generator(l.gen))
      throw std::invalid_argument("definition uses unknown generator '" + l.gen + "'");
  std::vector<std::string> gens = p.generators();
  gens.push_back(name);
  std::vector<Word> rels = p.relators();
  rels.push_back(Word::generator(name, -1) * definition);
  return Presentation(p.name(), std::move(gens), std::move(rels));
}

Presentation tietze_add_relator(const Presentation& p, const Word& relator) {
  std::vector<Word> rels = p.relators();
  rels.push_back(relator);
  return Presentation(p.name(), p.generators(), std::move(rels));
}

}  // namespace foxhom
