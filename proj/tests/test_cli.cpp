#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "glh/csv.hpp"

namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
  const fs::path d = fs::temp_directory_path() / "glh_test_cli";
  fs::create_directories(d);
  return d;
}

struct Run {
  int status;
  std::string output;
};

Run run(const std::string& args) {
  const fs::path log = work_dir() / "last.log";
  const std::string cmd = std::string(GLH_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_config(const std::string& name, const std::string& text) {
  const fs::path p = work_dir() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("profile smoke run writes the profile and its validation report") {
  const fs::path out = work_dir() / "profile";
  fs::remove_all(out);
  const Run r = run("profile --out " + out.string());
  CHECK(r.status == 0);
  CHECK(fs::exists(out / "profile.csv"));
  CHECK(fs::exists(out / "profile_validation.csv"));
  CHECK(fs::exists(out / "manifest.json"));
  const glh::CsvTable t = glh::read_csv((out / "profile.csv").string());
  CHECK(t.header == std::vector<std::string>{"ell", "w_plus", "dw_plus", "w_minus", "dw_minus"});
  CHECK(t.rows.size() > 1000);
  const std::string manifest = slurp(out / "manifest.json");
  CHECK(manifest.find("\"subcommand\": \"profile\"") != std::string::npos);
  CHECK(manifest.find("\"profile_ratio\"") != std::string::npos);
  CHECK(manifest.find("wall_time_seconds") != std::string::npos);
}

TEST_CASE("unknown config key exits with ConfigParse and names the key") {
  const fs::path cfg = write_config("bad.conf", "k = 2\nnot_a_key = 3\n");
  const Run r = run("profile --config " + cfg.string() + " --out " + (work_dir() / "bad").string());
  CHECK(r.status == 2);
  CHECK(r.output.find("not_a_key") != std::string::npos);
}

TEST_CASE("violated invariant exits with ValidationFailure") {
  // B > A+ makes c- negative, so W- approaches t- from above and the bound W < t fails.
  const fs::path cfg = write_config("overshoot.conf", "b = 1.5\na_plus = 1\na_minus = 4\n");
  const Run r = run("profile --config " + cfg.string() + " --out " + (work_dir() / "overshoot").string());
  CHECK(r.status == 3);
  CHECK(r.output.find("ValidationFailure") != std::string::npos);
  CHECK(fs::exists(work_dir() / "overshoot" / "profile.csv"));
}

TEST_CASE("unknown subcommand is a usage error") {
  CHECK(run("frobnicate").status != 0);
}

TEST_CASE("helix runs are byte-for-byte reproducible") {
  const fs::path a = work_dir() / "helix_a", b = work_dir() / "helix_b";
  fs::remove_all(a);
  fs::remove_all(b);
  REQUIRE(run("helix --out " + a.string()).status == 0);
  REQUIRE(run("helix --out " + b.string()).status == 0);
  int files = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    if (e.path().extension() != ".csv") continue;
    CHECK(slurp(e.path()) == slurp(b / e.path().filename()));
    ++files;
  }
  CHECK(files == 5);
  const glh::CsvTable c = glh::read_csv((a / "curves.csv").string());
  CHECK(c.rows.size() == 128);
}

TEST_CASE("kernel run honours config overrides and the seed") {
  const fs::path cfg = write_config("kernel.conf", "kernel_h = 0.2, 0.1\nkernel_half_width = 10\n");
  const fs::path a = work_dir() / "kernel_a", b = work_dir() / "kernel_b";
  REQUIRE(run("kernel --config " + cfg.string() + " --seed 5 --out " + a.string()).status == 0);
  REQUIRE(run("kernel --config " + cfg.string() + " --seed 5 --out " + b.string()).status == 0);
  CHECK(slurp(a / "kernel.csv") == slurp(b / "kernel.csv"));
  const glh::CsvTable t = glh::read_csv((a / "kernel.csv").string());
  CHECK(t.rows.size() == 6);
  CHECK(slurp(a / "manifest.json").find("\"seed\": \"5\"") != std::string::npos);
}

TEST_CASE("sweep writes one row per epsilon") {
  const fs::path out = work_dir() / "sweep";
  const Run r = run("sweep --eps 1e-2 --out " + out.string());
  REQUIRE(r.status == 0);
  const glh::CsvTable t = glh::read_csv((out / "sweep.csv").string());
  REQUIRE(t.rows.size() == 1);
  for (const char* col : {"norm_R", "sharpsharp_R_alpha", "d_hat_star"}) {
    CHECK(std::stod(t.rows[0][t.column(col)]) > 0.0);
  }
}
