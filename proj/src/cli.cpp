#include "freecomm/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "freecomm/error.hpp"
#include "freecomm/hall.hpp"
#include "freecomm/verify.hpp"

namespace freecomm {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::io, "cannot read " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!(file << text)) {
    throw Error(ErrorCode::io, "cannot write " + path);
  }
}

TowerConfig load_config(const std::string& path) {
  return path.empty() ? TowerConfig::defaults() : TowerConfig::load(path);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Virtual automorphisms of F(x, y) and the Hall tower embedding", "freecomm"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "tower configuration file")->check(CLI::ExistingFile);

  std::size_t level = 0;
  std::string elem;
  std::string format_name = "json";
  std::string out_path;
  auto* embed = app.add_subcommand("embed", "write embed(level, elem) as JSON or its domain as DOT");
  embed->add_option("--level", level, "tower level")->required();
  embed->add_option("--elem", elem, "residue at level 0, cycle notation above")->required();
  embed->add_option("--format", format_name, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  embed->add_option("--out", out_path, "output file (default stdout)");

  std::string suite;
  std::optional<std::size_t> verify_level;
  VerifyOptions options;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "homomorphism, injectivity, compat, stallings or hall")
      ->required();
  verify->add_option("--level", verify_level, "single level (default: all up to max_level)");
  verify->add_option("--samples", options.samples, "sample size at level 2")
      ->capture_default_str();
  verify->add_option("--seed", options.seed, "random seed")->capture_default_str();

  std::string file_a;
  std::string file_b;
  auto* compose_cmd = app.add_subcommand("compose", "write OUTER o INNER as JSON");
  compose_cmd->add_option("outer", file_a, "JSON file")->required()->check(CLI::ExistingFile);
  compose_cmd->add_option("inner", file_b, "JSON file")->required()->check(CLI::ExistingFile);
  compose_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* equal = app.add_subcommand("equal", "decide equality in the commensurator");
  equal->add_option("a", file_a, "JSON file")->required()->check(CLI::ExistingFile);
  equal->add_option("b", file_b, "JSON file")->required()->check(CLI::ExistingFile);

  std::size_t table_level = 1;
  auto* table = app.add_subcommand("table", "print the generator table of m_level");
  table->add_option("--level", table_level, "1 or 2")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*embed) {
      auto config = load_config(config_path);
      HallTower hall(config);
      auto g = hall.tower().parse_element(level, elem);
      auto va = hall.embed(level, g);
      write_output(format_name == "json" ? to_json(va) : va.domain().graph().dot(Alphabet::free2()),
                   out_path, out);
      err << "embed level " << level << " element " << hall.tower().element_name(level, g)
          << ": domain index " << *va.domain().index() << ", image index "
          << *va.image_subgroup().index() << " (config " << config.digest() << ")\n";
      return kOk;
    }
    if (*verify) {
      HallTower hall(load_config(config_path));
      options.level = verify_level;
      auto report = run_suite(hall, suite, options);
      for (const auto& f : report.failures) {
        out << "FAIL " << f.name << (f.detail.empty() ? "" : ": " + f.detail) << "\n";
      }
      out << report.summary() << "\n";
      return report.ok() ? kOk : kCheckFailed;
    }
    if (*compose_cmd) {
      auto outer = from_json(read_file(file_a));
      auto inner = from_json(read_file(file_b));
      write_output(to_json(compose(outer, inner)), out_path, out);
      return kOk;
    }
    if (*equal) {
      auto a = from_json(read_file(file_a));
      auto b = from_json(read_file(file_b));
      bool same = comm_equal(a, b);
      out << (same ? "true" : "false") << "\n";
      return same ? kOk : kCheckFailed;
    }
    if (*table) {
      Tower tower(load_config(config_path));
      out << tower.m_map_table(table_level);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace freecomm
