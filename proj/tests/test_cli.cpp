#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + BIHARM_EXE + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json without_duration(std::string text) {
  nlohmann::json j = nlohmann::json::parse(text);
  j.erase("duration_ms");
  return j;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("suite run exits 0 and reports deterministically") {
  Run a = run("suite sol-cmc --seed 3");
  Run b = run("suite sol-cmc --seed 3");
  REQUIRE(a.code == 0);
  CHECK(without_duration(a.out) == without_duration(b.out));
  nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j["suite"] == "sol-cmc");
  CHECK(j["pass"] == true);
  CHECK(j["config"]["seed"] == 3);
}

TEST_CASE("usage and configuration errors exit 2") {
  CHECK(run("suite bogus").code == 2);
  CHECK(run("suite hopf-circle --grid 0x3").code == 2);
  CHECK(run("suite hopf-circle --tol -1").code == 2);
  CHECK(run("--config /nonexistent/cfg suite hopf-circle").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("sweep --m-range 1").code == 2);
}

TEST_CASE("unwritable output exits 3") {
  CHECK(run("suite sol-cmc --out /nonexistent/dir/report.json").code == 3);
}

TEST_CASE("residual verdicts and --expect") {
  CHECK(run("residual hopf-circle --m 1 --l 1 --expect proper_biharmonic").code == 0);
  CHECK(run("residual sol-plane-z --expect minimal").code == 0);
  CHECK(run("residual sphere --radius 1.0471975511965976 --expect proper_biharmonic").code == 1);
  CHECK(run("residual sphere --radius 1.0471975511965976 --expect not_biharmonic").code == 0);
}

TEST_CASE("BIHARM_OUT_DIR receives reports") {
  TempDir dir("biharm_cli_out");
  Run r = run("suite sol-cmc", "BIHARM_OUT_DIR=" + dir.path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  REQUIRE(fs::exists(dir.path / "suite-sol-cmc.json"));
  CHECK(nlohmann::json::parse(slurp(dir.path / "suite-sol-cmc.json"))["pass"] == true);

  Run c = run("--format csv sweep --steps 2", "BIHARM_OUT_DIR=" + dir.path.string());
  CHECK(c.code == 0);
  REQUIRE(fs::exists(dir.path / "sweep.csv"));
  CHECK(slurp(dir.path / "sweep.csv").rfind("m,l,", 0) == 0);

  const fs::path explicit_out = dir.path / "explicit.json";
  CHECK(run("suite sol-cmc --out " + explicit_out.string(), "BIHARM_OUT_DIR=" + dir.path.string()).code == 0);
  CHECK(fs::exists(explicit_out));
}

TEST_CASE("flags override the config file") {
  TempDir dir("biharm_cli_cfg");
  const fs::path cfg = dir.path / "run.cfg";
  std::ofstream(cfg) << "# sample\ngrid=3x3\ntol=1e-7\nformat=json\n";
  nlohmann::json a = nlohmann::json::parse(run("--config " + cfg.string() + " suite sol-cmc").out);
  CHECK(a["config"]["grid"] == "3x3");
  CHECK(a["config"]["tol"] == 1e-7);
  nlohmann::json b = nlohmann::json::parse(run("--config " + cfg.string() + " --grid 4x2 suite sol-cmc").out);
  CHECK(b["config"]["grid"] == "4x2");
  CHECK(b["config"]["tol"] == 1e-7);
}

TEST_CASE("sweep output") {
  Run j = run("sweep --m-range 1:1 --l-range 0:2 --steps 3");
  REQUIRE(j.code == 0);
  nlohmann::json doc = nlohmann::json::parse(j.out);
  REQUIRE(doc["rows"].size() == 3);
  CHECK(doc["rows"][0]["verdict"] == "proper_biharmonic");
  CHECK(doc["rows"][2]["verdict"] == "minimal");
  CHECK(doc["rows"][2]["R"].is_number());

  Run c = run("--format csv sweep --steps 2");
  REQUIRE(c.code == 0);
  CHECK(c.out.rfind("m,l,kappa_g,", 0) == 0);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 5);
}
