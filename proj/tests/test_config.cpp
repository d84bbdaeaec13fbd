#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>

#include "glh/config.hpp"
#include "glh/csv.hpp"
#include "glh/errors.hpp"

using namespace glh;

namespace {

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "glh_test_config";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidParams;
}

}  // namespace

TEST_CASE("key = value lines with comments and lists") {
  RunConfig c;
  apply_config_text(c,
                    "# comment line\n"
                    "b = -0.25   # trailing comment\n"
                    "\n"
                    "epsilon = 1e-2, 5e-3\n"
                    "k=3\n"
                    "central = true\n"
                    "seed = 99\n");
  CHECK(c.params.b == -0.25);
  CHECK(c.epsilons == std::vector<double>{1e-2, 5e-3});
  CHECK(c.k == 3);
  CHECK(c.central);
  CHECK(c.seed == 99);
}

TEST_CASE("unknown keys name the key and line") {
  RunConfig c;
  try {
    apply_config_text(c, "k = 2\nbogus_key = 1\n", "run.conf");
    FAIL("expected ConfigParse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigParse);
    const std::string msg = e.what();
    CHECK(msg.find("bogus_key") != std::string::npos);
    CHECK(msg.find("run.conf:2") != std::string::npos);
    CHECK(msg.find("ConfigParse: ConfigParse") == std::string::npos);
  }
}

TEST_CASE("malformed values are rejected") {
  RunConfig c;
  CHECK(code_of([&] { apply_config_text(c, "k = two\n"); }) == ErrorCode::ConfigParse);
  CHECK(code_of([&] { apply_config_text(c, "alpha = 0.3x\n"); }) == ErrorCode::ConfigParse);
  CHECK(code_of([&] { apply_config_text(c, "epsilon = 1e-2,,3e-3\n"); }) == ErrorCode::ConfigParse);
  CHECK(code_of([&] { apply_config_text(c, "central = maybe\n"); }) == ErrorCode::ConfigParse);
  CHECK(code_of([&] { apply_config_text(c, "seed = -4\n"); }) == ErrorCode::ConfigParse);
  CHECK(code_of([&] { apply_config_text(c, "just words\n"); }) == ErrorCode::ConfigParse);
  CHECK(code_of([&] { load_config("/nonexistent.conf"); }) == ErrorCode::ConfigParse);
}

TEST_CASE("every value round-trips through its text form") {
  RunConfig a;
  a.params.b = -0.123456789012345;
  a.epsilons = {1e-2, 2.5e-3};
  a.alpha0 = 0.25;
  a.central = true;
  a.seed = 123456789012ULL;
  std::string text;
  for (const auto& [k, v] : config_values(a)) text += k + " = " + v + "\n";
  const std::string path = temp_path("roundtrip.conf");
  std::ofstream(path) << text;
  const RunConfig b = load_config(path);
  CHECK(config_values(b) == config_values(a));
  CHECK(b.params.b == a.params.b);
  CHECK(b.seed == a.seed);
}

TEST_CASE("manifest keys cover the physical parameters") {
  const auto v = config_values(RunConfig{});
  for (const char* key : {"a_plus", "a_minus", "b", "t_plus", "t_minus", "epsilon", "k", "alpha0", "alpha", "sigma",
                          "grid_h", "profile_tol", "dhat_tol", "seed"}) {
    CHECK(v.count(key) == 1);
  }
}

TEST_CASE("CSV doubles round-trip bitwise") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> vals{0.0, -0.0, 1.0 / 3.0, std::numeric_limits<double>::min(),
                           std::numeric_limits<double>::max(), 2.0 * std::acos(0.0)};
  for (int i = 0; i < 200; ++i) vals.push_back(u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20));
  const std::string path = temp_path("values.csv");
  {
    CsvWriter w(path, {"i", "value", "label"});
    for (std::size_t i = 0; i < vals.size(); ++i) {
      w << i << vals[i] << "x";
      w.end_row();
    }
    w.close();
  }
  const CsvTable t = read_csv(path);
  REQUIRE(t.rows.size() == vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double back = std::stod(t.rows[i][t.column("value")]);
    CHECK(std::memcmp(&back, &vals[i], sizeof back) == 0);
  }
}

TEST_CASE("CSV writer enforces the column count and plain fields") {
  CsvWriter w(temp_path("bad.csv"), {"a", "b"});
  w << 1.0;
  CHECK_THROWS_AS(w.end_row(), Error);
  CsvWriter x(temp_path("bad2.csv"), {"a"});
  CHECK_THROWS_AS(x << "has,comma", Error);
  CHECK_THROWS_AS(CsvWriter("/nonexistent/dir/x.csv", {"a"}), Error);
  CHECK_THROWS_AS(read_csv("/nonexistent/x.csv"), Error);
}

TEST_CASE("shipped default config matches the built-in defaults") {
  CHECK(config_values(load_config(GLH_DEFAULT_CONF)) == config_values(RunConfig{}));
}
