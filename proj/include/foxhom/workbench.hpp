#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "foxhom/io.hpp"

namespace foxhom::workbench {

using nlohmann::json;
namespace fs = std::filesystem;

inline constexpr const char* kToolName = "foxhom";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Format { json, table };

struct InputDigest {
  std::string path;
  std::string sha256;
};

// Result of one CLI command. The JSON form is the machine interface; the
// table is a fixed-layout ASCII rendering of the same results.
struct Report {
  std::string command;
  std::vector<InputDigest> inputs;
  json results = json::array();
  std::string table;
  int exit_code = 0;

  void add_input(const fs::path& path);
  json to_json() const;
  std::string render(Format f) const;
};

// Bundled data directory compiled into the library.
fs::path default_data_dir();

// "7", "3..9", "3,5,7" or a mix such as "3..7,11".
std::vector<std::int64_t> parse_int_list(const std::string& text);

Report cmd_abelianize(const fs::path& presentation);
Report cmd_alexander(const fs::path& presentation, const fs::path& map, bool minors);

// Job file: {"presentation": path relative to the job file, "degrees":
// {gen: int}, "n": int | [ints] | "a..b", "fill": [words], "mode":
// "h1|fill|sakuma|hn"}.
struct CoverJob {
  fs::path presentation;
  std::vector<std::pair<std::string, std::int64_t>> degrees;
  std::vector<std::int64_t> n_values;
  std::vector<std::string> fill;
  std::string mode = "h1";
};
CoverJob load_cover_job(const fs::path& job_file);
Report cmd_cover(const fs::path& job_file, std::optional<std::string> mode,
                 std::optional<std::vector<std::int64_t>> n_values, unsigned jobs);

// k == nullopt sweeps every k in 1..n-1 coprime to n.
Report cmd_branched(const fs::path& delta, const std::vector<std::int64_t>& n_values,
                    std::optional<std::int64_t> k, unsigned jobs);

// Without `force` a range a..b enumerates the odd values only, and an
// explicitly requested even n is an input error.
Report cmd_rhs_sweep(const fs::path& data_dir, const std::string& n_spec, bool force,
                     unsigned jobs);

// Golden comparisons against the bundled data; `only` restricts to one item.
std::vector<std::string> verify_items();
Report cmd_verify_paper(const fs::path& data_dir, std::optional<std::string> only);

}  // namespace foxhom::workbench
