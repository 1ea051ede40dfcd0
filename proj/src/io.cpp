#include "foxhom/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace foxhom::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": JSON parse error at byte " + std::to_string(e.byte) +
                     ": " + e.what());
  }
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("SHA-256 computation failed");
  }
  EVP_MD_CTX_free(ctx);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

namespace {

template <typename T>
T field(const json& j, const char* key, const std::string& context) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(context + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(context + ": field '" + key + "' has the wrong type");
  }
}

}  // namespace

Presentation presentation_from_json(const json& j) {
  const auto gens = field<std::vector<std::string>>(j, "generators", "presentation");
  const auto rels = field<std::vector<std::string>>(j, "relators", "presentation");
  const std::string name = j.value("name", std::string("unnamed"));
  std::vector<Word> words;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    try {
      words.push_back(parse_relator(rels[i], gens));
    } catch (const ParseError& e) {
      std::string where = "relator " + std::to_string(i + 1);
      if (e.position() != ParseError::npos) where += ", offset " + std::to_string(e.position());
      throw InputError("presentation '" + name + "', " + where + ": " + e.what());
    }
  }
  try {
    return Presentation(name, gens, std::move(words));
  } catch (const std::invalid_argument& e) {
    throw InputError("presentation '" + name + "': " + e.what());
  }
}

json presentation_to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relators()) rels.push_back(r.str());
  return json{{"name", p.name()}, {"generators", p.generators()}, {"relators", rels}};
}

Presentation load_presentation(const std::filesystem::path& path) {
  try {
    return presentation_from_json(read_json(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::vector<std::string> default_variable_names(std::size_t count) {
  if (count <= 3) {
    std::vector<std::string> v{"x", "y", "z"};
    v.resize(count);
    return v;
  }
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= count; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

AbelianizationMap map_from_json(const json& j, const std::vector<std::string>& generators) {
  if (!j.is_object()) throw InputError("map: expected a JSON object");
  const json& images = j.contains("images") ? j.at("images") : j;
  if (!images.is_object()) throw InputError("map: 'images' must be an object");
  std::vector<MonomialImage> imgs;
  std::size_t width = 0;
  bool first = true;
  for (const auto& g : generators) {
    if (!images.contains(g)) throw InputError("map: no image for generator '" + g + "'");
    const json& im = images.at(g);
    MonomialImage m;
    m.sign = im.value("sign", 1);
    m.exp = field<Exponent>(im, "exp", "map image of '" + g + "'");
    if (m.sign != 1 && m.sign != -1) throw InputError("map: sign of '" + g + "' must be +-1");
    if (!first && m.exp.size() != width)
      throw InputError("map: image of '" + g + "' has a different exponent length");
    width = m.exp.size();
    first = false;
    imgs.push_back(std::move(m));
  }
  std::vector<std::string> vars = j.contains("images")
                                      ? field<std::vector<std::string>>(j, "vars", "map")
                                      : default_variable_names(width);
  if (vars.size() != width) throw InputError("map: variable count differs from exponent length");
  return AbelianizationMap(generators, std::move(vars), std::move(imgs));
}

AbelianizationMap load_map(const std::filesystem::path& path,
                           const std::vector<std::string>& generators) {
  try {
    return map_from_json(read_json(path), generators);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

LaurentPoly poly_from_json(const json& j) {
  auto vars = field<std::vector<std::string>>(j, "vars", "polynomial");
  LaurentPoly p(vars);
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw InputError("polynomial: missing 'terms' array");
  for (const auto& t : j.at("terms")) {
    auto exp = field<Exponent>(t, "exp", "polynomial term");
    if (exp.size() != vars.size()) throw InputError("polynomial: term exponent has wrong length");
    if (!t.contains("coef")) throw InputError("polynomial: term without 'coef'");
    const json& c = t.at("coef");
    Integer coef;
    if (c.is_number_integer()) {
      coef = static_cast<long>(c.get<std::int64_t>());
    } else if (c.is_string()) {
      if (coef.set_str(c.get<std::string>(), 10) != 0)
        throw InputError("polynomial: malformed coefficient '" + c.get<std::string>() + "'");
    } else {
      throw InputError("polynomial: coefficient must be an integer");
    }
    p.add_term(exp, coef);
  }
  return p;
}

json poly_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json coef = c.fits_slong_p() ? json(c.get_si()) : json(c.get_str());
    terms.push_back(json{{"exp", e}, {"coef", coef}});
  }
  return json{{"vars", p.vars()}, {"terms", terms}};
}

LaurentPoly load_poly(const std::filesystem::path& path) {
  try {
    return poly_from_json(read_json(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json matrix_to_json(const LaurentMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return json{{"vars", m.vars()}, {"rows", m.row_labels()}, {"cols", m.col_labels()},
              {"entries", rows}};
}

std::string matrix_to_table(const LaurentMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows() + 1);
  cells[0].push_back("");
  for (const auto& c : m.col_labels()) cells[0].push_back(c);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cells[i + 1].push_back(m.row_labels()[i]);
    for (std::size_t j = 0; j < m.cols(); ++j) cells[i + 1].push_back(m(i, j).str());
  }
  std::vector<std::size_t> width(m.cols() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << std::left << std::setw(static_cast<int>(width[j])) << row[j];
      if (j + 1 < row.size()) os << " | ";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace foxhom::io
