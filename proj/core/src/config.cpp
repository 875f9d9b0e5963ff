#include "sunitcount/config.hpp"

#include <cstdlib>
#include <fstream>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sunit {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  size_t pos = 0;
  double d = std::stod(value, &pos);
  if (pos != value.size()) throw std::invalid_argument("config: bad value for " + key);
  return d;
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
  size_t pos = 0;
  unsigned long long n = std::stoull(value, &pos);
  if (pos != value.size()) throw std::invalid_argument("config: bad value for " + key);
  return n;
}

}  // namespace

ToolConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);

  ToolConfig cfg;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: expected key = value at " + path + ":" +
                                  std::to_string(lineno));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "c0_lemma1") {
      cfg.consts.c0_lemma1 = parse_double(key, value);
    } else if (key == "c1_lemma2") {
      cfg.consts.c1_lemma2 = parse_double(key, value);
    } else if (key == "c_bw") {
      cfg.consts.c_bw = parse_double(key, value);
    } else if (key == "c_abc") {
      cfg.consts.c_abc = parse_double(key, value);
    } else if (key == "abc_eps") {
      cfg.consts.abc_eps = parse_double(key, value);
    } else if (key == "pp6" || key == "pp7" || key == "pp9" || key == "pp10" || key == "pp11" ||
               key == "pp12") {
      std::string upper = key;
      for (char& ch : upper) ch = static_cast<char>(std::toupper(ch));
      cfg.consts.theorem_constants[upper] = parse_double(key, value);
    } else if (key == "height_cap") {
      cfg.height_cap = Integer(value);
    } else if (key == "max_subsets") {
      cfg.guards.max_subsets = parse_u64(key, value);
    } else if (key == "max_family") {
      cfg.guards.max_family = parse_u64(key, value);
    } else if (key == "strata_scan_limit") {
      cfg.guards.strata_scan_limit = parse_u64(key, value);
    } else if (key == "max_smooth_cells") {
      cfg.guards.max_smooth_cells = parse_u64(key, value);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "' at " + path + ":" +
                                  std::to_string(lineno));
    }
  }
  return cfg;
}

ToolConfig load_default_config() {
  const char* path = std::getenv("SUNITCOUNT_CONFIG");
  if (path && *path) return load_config(path);
  return ToolConfig{};
}

}  // namespace sunit
