#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "foxhom/fox.hpp"
#include "foxhom/laurent.hpp"
#include "foxhom/laurent_matrix.hpp"
#include "foxhom/presentation.hpp"

namespace foxhom::io {

using nlohmann::json;

// Bad or missing input file; the CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);
json read_json(const std::filesystem::path& path);
// Lowercase hex SHA-256 of the file contents.
std::string sha256_hex(const std::string& bytes);

// {"name": str, "generators": [str], "relators": [str]}
Presentation presentation_from_json(const json& j);
json presentation_to_json(const Presentation& p);
Presentation load_presentation(const std::filesystem::path& path);

// Either {"gen": {"sign": +-1, "exp": [...]}, ...} with default variable
// names (x, y, z, then x1, x2, ...) or {"vars": [...], "images": {...}}.
AbelianizationMap map_from_json(const json& j, const std::vector<std::string>& generators);
AbelianizationMap load_map(const std::filesystem::path& path,
                           const std::vector<std::string>& generators);
std::vector<std::string> default_variable_names(std::size_t count);

// {"vars": [...], "terms": [{"exp": [...], "coef": int}]}; coefficients that
// do not fit in 64 bits are written as decimal strings.
LaurentPoly poly_from_json(const json& j);
json poly_to_json(const LaurentPoly& p);
LaurentPoly load_poly(const std::filesystem::path& path);

json matrix_to_json(const LaurentMatrix& m);
// Aligned plain-text table with row and column labels.
std::string matrix_to_table(const LaurentMatrix& m);

}  // namespace foxhom::io
