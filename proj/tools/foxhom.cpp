#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "foxhom/workbench.hpp"

namespace wb = foxhom::workbench;

namespace {

struct Common {
  std::string format = "json";
  unsigned jobs = 1;
  std::string output;
};

void add_common(CLI::App* cmd, Common& c, bool parallel) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", c.output, "Write the report to FILE instead of stdout");
  if (parallel)
    cmd->add_option("--jobs,-j", c.jobs, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
}

int emit(const wb::Report& r, const Common& c) {
  const std::string body = r.render(c.format == "table" ? wb::Format::table : wb::Format::json);
  if (c.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw foxhom::io::InputError("cannot write '" + c.output + "'");
    out << body;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fox calculus, Alexander polynomials and cyclic cover homology"};
  app.set_version_flag("--version", std::string(wb::kToolName) + " " + wb::kToolVersion);
  app.require_subcommand(1);

  Common common;
  std::function<wb::Report()> run;

  std::string pres_file, map_file, job_file, delta_file, n_spec, k_spec, item;
  std::string data_dir = wb::default_data_dir().string();
  bool minors = false, force = false;

  auto* abel = app.add_subcommand("abelianize", "H_1 of a presentation (rank and torsion)");
  abel->add_option("presentation", pres_file, "Presentation JSON")->required();
  add_common(abel, common, false);
  abel->callback([&] { run = [&] { return wb::cmd_abelianize(pres_file); }; });

  auto* alex = app.add_subcommand("alexander", "Alexander matrix, minors and polynomial");
  alex->add_option("presentation", pres_file, "Presentation JSON")->required();
  alex->add_option("--map", map_file, "Abelianization map JSON")->required();
  alex->add_flag("--minors", minors, "Also report the row-deleted minors");
  add_common(alex, common, false);
  alex->callback([&] { run = [&] { return wb::cmd_alexander(pres_file, map_file, minors); }; });

  auto cover_cmd = [&](const char* name, const char* help, std::optional<std::string> mode) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("job", job_file, "Cover job JSON")->required();
    cmd->add_option("--n", n_spec, "INT or RANGE (a..b), overrides the job file");
    add_common(cmd, common, true);
    cmd->callback([&, mode] {
      run = [&, mode] {
        std::optional<std::vector<std::int64_t>> ns;
        if (!n_spec.empty()) ns = wb::parse_int_list(n_spec);
        return wb::cmd_cover(job_file, mode, ns, common.jobs);
      };
    });
  };
  cover_cmd("cover", "H_1 of cyclic covers (mode from the job file, default h1)", std::nullopt);
  cover_cmd("fill", "H_1 of the filled covers", "fill");
  cover_cmd("sakuma", "H_1 of the cover modulo tr(m), 2tr(s), 2tr(t)", "sakuma");
  cover_cmd("hn", "H_1 of the cover modulo the transfers of all generators", "hn");

  auto* branched = app.add_subcommand("branched", "Betti numbers of branched covers of a link");
  branched->add_option("delta", delta_file, "Two-variable polynomial JSON")->required();
  branched->add_option("--n", n_spec, "INT or RANGE")->required();
  branched->add_option("--k", k_spec, "INT or all")->default_str("all");
  add_common(branched, common, true);
  branched->callback([&] {
    run = [&] {
      std::optional<std::int64_t> k;
      if (!k_spec.empty() && k_spec != "all") {
        const auto ks = wb::parse_int_list(k_spec);
        if (ks.size() != 1) throw foxhom::io::InputError("--k takes one integer or 'all'");
        k = ks.front();
      }
      return wb::cmd_branched(delta_file, wb::parse_int_list(n_spec), k, common.jobs);
    };
  });

  auto* rhs = app.add_subcommand("rhs-sweep", "Rational homology sphere check of the filled covers");
  rhs->add_option("--n", n_spec, "Odd INT or RANGE")->required();
  rhs->add_flag("--force", force, "Accept even n");
  rhs->add_option("--data", data_dir, "Data directory")->capture_default_str();
  add_common(rhs, common, true);
  rhs->callback([&] { run = [&] { return wb::cmd_rhs_sweep(data_dir, n_spec, force, common.jobs); }; });

  auto* verify = app.add_subcommand("verify-paper", "Compare against the bundled golden values");
  verify->add_option("--item", item, "Run a single item")->check(CLI::IsMember(wb::verify_items()));
  verify->add_option("--data", data_dir, "Data directory")->capture_default_str();
  add_common(verify, common, false);
  verify->callback([&] {
    run = [&] {
      return wb::cmd_verify_paper(data_dir, item.empty() ? std::nullopt : std::optional(item));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return emit(run(), common);
  } catch (const foxhom::io::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const foxhom::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
