#include "glh/config.hpp"

#include <fstream>
#include <functional>
#include <type_traits>
#include <sstream>

#include "glh/csv.hpp"
#include "glh/errors.hpp"

namespace glh {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v) {
  std::size_t used = 0;
  const double x = std::stod(v, &used);
  if (trim(v.substr(used)).size() != 0) throw std::invalid_argument("trailing characters");
  return x;
}

long long parse_int(const std::string& v) {
  std::size_t used = 0;
  const long long x = std::stoll(v, &used);
  if (trim(v.substr(used)).size() != 0) throw std::invalid_argument("trailing characters");
  return x;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::invalid_argument("expected a boolean");
}

std::vector<double> parse_list(const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("empty list item");
    out.push_back(parse_double(item));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::string list_text(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_double(v[i]);
  return s;
}

struct Entry {
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <class T>
Entry number(T RunConfig::*m) {
  return {[m](RunConfig& c, const std::string& v) {
            if constexpr (std::is_same_v<T, double>) {
              c.*m = parse_double(v);
            } else if constexpr (std::is_same_v<T, bool>) {
              c.*m = parse_bool(v);
            } else {
              const long long x = parse_int(v);
              if (x < 0 && std::is_unsigned_v<T>) throw std::invalid_argument("negative value");
              c.*m = static_cast<T>(x);
            }
          },
          [m](const RunConfig& c) {
            if constexpr (std::is_same_v<T, double>) {
              return format_double(c.*m);
            } else if constexpr (std::is_same_v<T, bool>) {
              return std::string(c.*m ? "true" : "false");
            } else {
              return std::to_string(c.*m);
            }
          }};
}

Entry list(std::vector<double> RunConfig::*m) {
  return {[m](RunConfig& c, const std::string& v) { c.*m = parse_list(v); },
          [m](const RunConfig& c) { return list_text(c.*m); }};
}

Entry param(double GLParams::*m) {
  return {[m](RunConfig& c, const std::string& v) { c.params.*m = parse_double(v); },
          [m](const RunConfig& c) { return format_double(c.params.*m); }};
}

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> r = {
      {"a_plus", param(&GLParams::a_plus)},
      {"a_minus", param(&GLParams::a_minus)},
      {"b", param(&GLParams::b)},
      {"t_plus", param(&GLParams::t_plus)},
      {"t_minus", param(&GLParams::t_minus)},
      {"degree_plus", number(&RunConfig::degree_plus)},
      {"degree_minus", number(&RunConfig::degree_minus)},
      {"profile_first", number(&RunConfig::profile_first)},
      {"profile_ratio", number(&RunConfig::profile_ratio)},
      {"profile_L", number(&RunConfig::profile_L)},
      {"profile_tol", number(&RunConfig::profile_tol)},
      {"profile_max_iterations", number(&RunConfig::profile_max_iterations)},
      {"tail_fit_lo", number(&RunConfig::tail_fit_lo)},
      {"tail_fit_hi", number(&RunConfig::tail_fit_hi)},
      {"epsilon", list(&RunConfig::epsilons)},
      {"k", number(&RunConfig::k)},
      {"d_hat", number(&RunConfig::d_hat)},
      {"central", number(&RunConfig::central)},
      {"grid_h", number(&RunConfig::grid_h)},
      {"grid_margin", number(&RunConfig::grid_margin)},
      {"grid_below", number(&RunConfig::grid_below)},
      {"window_half_width", number(&RunConfig::window_half_width)},
      {"alpha", number(&RunConfig::alpha)},
      {"sigma", number(&RunConfig::sigma)},
      {"alpha0", number(&RunConfig::alpha0)},
      {"region_factor", number(&RunConfig::region_factor)},
      {"holder_centers", number(&RunConfig::holder_centers)},
      {"holder_pairs", number(&RunConfig::holder_pairs)},
      {"fourier_K", number(&RunConfig::fourier_K)},
      {"fourier_radii", list(&RunConfig::fourier_radii)},
      {"kernel_h", list(&RunConfig::kernel_h)},
      {"kernel_half_width", number(&RunConfig::kernel_half_width)},
      {"quad_theta", number(&RunConfig::quad_theta)},
      {"quad_ratio", number(&RunConfig::quad_ratio)},
      {"quad_alpha0", list(&RunConfig::quad_alpha0)},
      {"dhat_lo", number(&RunConfig::dhat_lo)},
      {"dhat_hi", number(&RunConfig::dhat_hi)},
      {"dhat_tol", number(&RunConfig::dhat_tol)},
      {"energy_k", list(&RunConfig::energy_k)},
      {"helix_samples", number(&RunConfig::helix_samples)},
      {"helix_epsilon", number(&RunConfig::helix_epsilon)},
      {"slice_t", list(&RunConfig::slice_t)},
      {"slice_h", number(&RunConfig::slice_h)},
      {"slice_margin", number(&RunConfig::slice_margin)},
      {"seed", number(&RunConfig::seed)},
  };
  return r;
}

}  // namespace

void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value) {
  const auto& r = registry();
  const auto it = r.find(key);
  if (it == r.end()) throw Error(ErrorCode::ConfigParse, "unknown key '" + key + "'");
  try {
    it->second.set(cfg, trim(value));
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ConfigParse, "bad value '" + trim(value) + "' for key '" + key + "': " + e.what());
  }
}

void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string::npos) throw Error(ErrorCode::ConfigParse, where + "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    try {
      set_config_value(cfg, key, line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigParse, where + e.detail());
    }
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigParse, "cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  RunConfig cfg;
  apply_config_text(cfg, ss.str(), path);
  return cfg;
}

std::map<std::string, std::string> config_values(const RunConfig& cfg) {
  std::map<std::string, std::string> out;
  for (const auto& [key, entry] : registry()) out[key] = entry.get(cfg);
  return out;
}

}  // namespace glh
