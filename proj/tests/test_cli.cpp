#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "freecomm/cli.hpp"
#include "freecomm/virtual_aut.hpp"
#include "helpers.hpp"

using namespace freecomm;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "freecomm");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("freecomm_cli_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string file(const std::string& name, const std::string& contents = {}) const {
    auto p = path_ / name;
    if (!contents.empty()) {
      std::ofstream(p) << contents;
    }
    return p.string();
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kSwap = R"({"ambient_rank": 2, "domain_basis": ["x", "y"], "images": ["y", "x"]})";
const char* kIdentity = R"({"ambient_rank": 2, "domain_basis": ["x", "y"], "images": ["x", "y"]})";

}  // namespace

TEST_CASE("cli: embed") {
  auto r = cli({"embed", "--level", "0", "--elem", "1"});
  CHECK(r.code == 0);
  auto va = from_json(r.out);
  CHECK(va.images() == test::xy_list({"x.y.x^-1", "x.x.y.x^-1.x^-1", "y", "x.x.x"}));
  CHECK(r.err.find("domain index 3, image index 3") != std::string::npos);

  auto id = cli({"embed", "--level", "1", "--elem", "()"});
  CHECK(id.code == 0);
  auto idva = from_json(id.out);
  CHECK(is_identity(idva));
  CHECK(idva.domain().index() == 6);

  // reload without drift, byte-identical reruns
  CHECK(to_json(va) == r.out);
  CHECK(cli({"embed", "--level", "1", "--elem", "(012)"}).out ==
        cli({"embed", "--level", "1", "--elem", "(012)"}).out);

  auto dot = cli({"embed", "--level", "0", "--elem", "2", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph core {", 0) == 0);
}

TEST_CASE("cli: equal and compose through files") {
  TempDir dir;
  auto lifted = dir.file("lifted.json");
  auto base = dir.file("base.json");
  CHECK(cli({"embed", "--level", "1", "--elem", "(012)", "--out", lifted}).code == 0);
  CHECK(cli({"embed", "--level", "0", "--elem", "1", "--out", base}).code == 0);
  auto eq = cli({"equal", lifted, base});
  CHECK(eq.code == 0);
  CHECK(eq.out == "true\n");

  auto swap = dir.file("swap.json", kSwap);
  auto id = dir.file("id.json", kIdentity);
  auto ne = cli({"equal", swap, id});
  CHECK(ne.code == 1);
  CHECK(ne.out == "false\n");

  auto composite = dir.file("composite.json");
  CHECK(cli({"compose", id, base, "--out", composite}).code == 0);
  CHECK(comm_equal(from_json(slurp(composite)), from_json(slurp(base))));
  CHECK(cli({"equal", composite, base}).code == 0);

  auto twice = cli({"compose", swap, swap});
  CHECK(twice.code == 0);
  CHECK(is_identity(from_json(twice.out)));

  auto bad = dir.file("bad.json", R"({"ambient_rank": 2, "domain_basis": ["x", "y"], "images": ["x", "x"]})");
  auto r = cli({"equal", bad, id});
  CHECK(r.code == 2);
  CHECK(r.err.find("not-injective") != std::string::npos);
  CHECK(cli({"compose", dir.file("missing.json"), id}).code == 2);
}

TEST_CASE("cli: verify") {
  auto hom = cli({"verify", "--suite", "homomorphism", "--level", "1"});
  CHECK(hom.code == 0);
  CHECK(hom.out.rfind("homomorphism: 36/36 passed", 0) == 0);
  auto inj = cli({"verify", "--suite", "injectivity", "--level", "1"});
  CHECK(inj.out.rfind("injectivity: 5/5 passed", 0) == 0);
  auto compat = cli({"verify", "--suite", "compat", "--level", "2"});
  CHECK(compat.code == 0);
  CHECK(compat.out.rfind("compat: 6/6 passed", 0) == 0);
  auto st = cli({"verify", "--suite", "stallings", "--samples", "200", "--seed", "9"});
  CHECK(st.out.rfind("stallings: 400/400 passed", 0) == 0);
  auto hall = cli({"verify", "--suite", "hall"});
  CHECK(hall.code == 0);

  CHECK(cli({"verify", "--suite", "bogus"}).code == 2);
  CHECK(cli({"verify", "--suite", "compat", "--level", "0"}).code == 2);
  CHECK(cli({"verify", "--suite", "homomorphism", "--level", "3"}).code == 2);
}

TEST_CASE("cli: config, table and usage errors") {
  TempDir dir;
  auto cfg = dir.file("swapped.cfg", "transversal.1 = (), (01)\n");
  auto t = cli({"--config", cfg, "table", "--level", "1"});
  CHECK(t.code == 0);
  CHECK(t.out.find("a_(021)(01) -> a_*.a_2.a_*^-1\n") != std::string::npos);
  auto low = dir.file("low.cfg", "max_level = 1\n");
  CHECK(cli({"embed", "--config", low, "--level", "2", "--elem", "()"}).code == 2);
  auto broken = dir.file("broken.cfg", "g0 = S3\n");
  auto r = cli({"embed", "--config", broken, "--level", "0", "--elem", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("invalid-config") != std::string::npos);

  CHECK(cli({}).code == 2);
  CHECK(cli({"embed", "--level", "0"}).code == 2);
  CHECK(cli({"embed", "--level", "0", "--elem", "7"}).code == 2);
  CHECK(cli({"embed", "--level", "1", "--elem", "(0a)"}).code == 2);
  CHECK(cli({"embed", "--level", "0", "--elem", "1", "--format", "png"}).code == 2);
  CHECK(cli({"embed", "--level", "3", "--elem", "()"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}
