#include "fdrel/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "fdrel/error.hpp"

namespace fdrel {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw UsageError("config: bad number for '" + std::string(key) + "': " +
                     std::string(v));
  }
  return out;
}

int to_int(std::string_view key, std::string_view v) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw UsageError("config: bad integer for '" + std::string(key) + "': " +
                     std::string(v));
  }
  return out;
}

bool to_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw UsageError("config: bad boolean for '" + std::string(key) + "': " +
                   std::string(v));
}

}  // namespace

void apply_setting(Config& cfg, std::string_view key, std::string_view value) {
  if (key == "eta_neg_max") cfg.eta_neg_max = to_double(key, value);
  else if (key == "eta_big") cfg.eta_big = to_double(key, value);
  else if (key == "beta_big") cfg.beta_big = to_double(key, value);
  else if (key == "beta_small") cfg.beta_small = to_double(key, value);
  else if (key == "large_eta_min_beta_eta") cfg.large_eta_min_beta_eta = to_double(key, value);
  else if (key == "small_beta_max_beta_eta") cfg.small_beta_max_beta_eta = to_double(key, value);
  else if (key == "large_eta_nmax") cfg.large_eta_nmax = to_int(key, value);
  else if (key == "sommerfeld_terms") cfg.sommerfeld_terms = to_int(key, value);
  else if (key == "large_beta_kmax") cfg.large_beta_kmax = to_int(key, value);
  else if (key == "small_beta_nmax") cfg.small_beta_nmax = to_int(key, value);
  else if (key == "include_exp_small") cfg.include_exp_small = to_bool(key, value);
  else if (key == "series_tol") cfg.series_tol = to_double(key, value);
  else if (key == "oracle_tol") cfg.oracle_tol = to_double(key, value);
  else if (key == "fhat_tol") cfg.fhat_tol = to_double(key, value);
  else if (key == "z_switch") cfg.kummer.z_switch = to_double(key, value);
  else if (key == "z_series") cfg.kummer.z_series = to_double(key, value);
  else if (key == "asymptotic_max_terms") cfg.kummer.asymptotic_max_terms = to_int(key, value);
  else throw UsageError("config: unknown key '" + std::string(key) + "'");
}

Config parse_config(std::string_view text, Config cfg) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config: line " + std::to_string(line_no) +
                       " is not 'key = value'");
    }
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

Config paper_sec6_preset() {
  Config cfg;
  cfg.large_eta_nmax = 10;
  cfg.sommerfeld_terms = 8;
  cfg.large_beta_kmax = 5;
  cfg.series_tol = 1e-14;
  return cfg;
}

Config load_config(const std::string& path_or_preset, Config cfg) {
  std::ifstream in(path_or_preset);
  if (!in) {
    if (path_or_preset == "paper-sec6") return paper_sec6_preset();
    throw IoError("cannot open config file '" + path_or_preset + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), cfg);
}

}  // namespace fdrel
