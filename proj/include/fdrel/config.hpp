#pragma once

#include <string>
#include <string_view>

#include "fdrel/kummer.hpp"

namespace fdrel {

// Dispatch thresholds and term budgets. Every field can be set from a
// "key = value" config file; see apply_setting for the key names.
struct Config {
  double eta_neg_max = -0.5;   // convergent eta < 0 series at and below
  double eta_big = 15.0;       // large-eta expansions at and above
  double beta_big = 30.0;      // large-beta expansions at and above
  double beta_small = 0.05;    // small-beta expansion at and below
  double large_eta_min_beta_eta = 10.0;
  double small_beta_max_beta_eta = 0.5;

  int large_eta_nmax = 10;     // highest index kept in large-eta sums
  int sommerfeld_terms = 8;
  int large_beta_kmax = 5;
  int small_beta_nmax = 12;    // highest index kept in the small-beta sum
  bool include_exp_small = true;

  double series_tol = 1e-15;
  double oracle_tol = 1e-13;
  double fhat_tol = 1e-14;

  KummerConfig kummer;
};

// Sets one key; throws UsageError for an unknown key or malformed value.
void apply_setting(Config& cfg, std::string_view key, std::string_view value);

// Parses "key = value" lines ('#' starts a comment) on top of cfg.
Config parse_config(std::string_view text, Config cfg = {});

// Reads a config file. The name "paper-sec6" resolves to the built-in preset
// when no file of that name exists. Throws IoError / UsageError.
Config load_config(const std::string& path_or_preset, Config cfg = {});

// Budgets used for the published numerical experiments: large-eta series up
// to n = 10, 8 Sommerfeld terms, k up to 5 for large beta.
Config paper_sec6_preset();

}  // namespace fdrel
