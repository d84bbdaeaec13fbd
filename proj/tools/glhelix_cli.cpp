#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glh/config.hpp"
#include "glh/csv.hpp"
#include "glh/errors.hpp"
#include "glh/pipeline.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string out_dir = "out";
  std::vector<double> eps;
  int k = 0;
  long long seed = -1;
  bool central = false;
};

int exit_code(glh::ErrorCode c) {
  switch (c) {
    case glh::ErrorCode::ConfigParse:
      return 2;
    case glh::ErrorCode::ValidationFailure:
      return 3;
    default:
      return 1;
  }
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + glh::format_double(v[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Helical vortex filaments in a two-component Ginzburg-Landau system"};
  app.require_subcommand(1);
  Options opt;
  for (const std::string& name : glh::subcommand_names()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " pipeline");
    sub->add_option("--config", opt.config_path, "key = value configuration file")->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out_dir, "output directory")->capture_default_str();
    sub->add_option("--eps", opt.eps, "comma separated epsilon list")->delimiter(',');
    sub->add_option("--k", opt.k, "number of helical filaments");
    sub->add_option("--seed", opt.seed, "seed for sampled probes");
    sub->add_flag("--central", opt.central, "add a straight central anti-vortex");
  }
  CLI11_PARSE(app, argc, argv);
  const std::string name = app.get_subcommands().front()->get_name();

  try {
    glh::RunConfig cfg = opt.config_path.empty() ? glh::RunConfig{} : glh::load_config(opt.config_path);
    if (!opt.eps.empty()) glh::set_config_value(cfg, "epsilon", join(opt.eps));
    if (opt.k != 0) cfg.k = opt.k;
    if (opt.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt.seed);
    if (opt.central) cfg.central = true;

    const glh::RunSummary s = glh::run_subcommand(name, cfg, opt.out_dir);
    for (const auto& a : s.artifacts) std::printf("wrote %s/%s\n", opt.out_dir.c_str(), a.c_str());
    for (const auto& [k, v] : s.metrics) std::printf("%s = %.10g\n", k.c_str(), v);
    std::printf("%s finished in %.2f s\n", name.c_str(), s.wall_seconds);
  } catch (const glh::Error& e) {
    std::fprintf(stderr, "glhelix %s: %s\n", name.c_str(), e.what());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "glhelix %s: %s\n", name.c_str(), e.what());
    return 1;
  }
  return 0;
}
