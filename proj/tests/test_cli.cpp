#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "cli_commands.hpp"
#include "doctest.h"
#include "fdrel/error.hpp"

using namespace fdrel;
using namespace fdrel::cli;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("method names") {
  CHECK(parse_method("neg-eta-series").method == Method::NegEtaSeries);
  CHECK(parse_method("large-eta-noexp").exp_small == false);
  CHECK(parse_method("large-beta").by_q_class);
  CHECK(parse_method_list("auto,quadrature").size() == 2);
  CHECK_THROWS_AS(parse_method("fast"), UsageError);
  CHECK_THROWS_AS(parse_method_list(","), UsageError);
}

TEST_CASE("round-trip formatting") {
  for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300, 0.0, 912.1664472882993}) {
    const std::string s = fmt(x);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == x);
  }
  CHECK(fmt(0.1) == "0.1");
  CHECK(fmt(NAN) == "nan");
}

TEST_CASE("flags override the config") {
  Overrides ov;
  ov.nterms = 4;
  ov.kmax = 2;
  const Config c = effective_config(std::string("paper-sec6"), {"eta_big = 20"}, ov);
  CHECK(c.large_eta_nmax == 4);
  CHECK(c.small_beta_nmax == 4);
  CHECK(c.large_beta_kmax == 2);
  CHECK(c.eta_big == 20.0);
  CHECK(c.sommerfeld_terms == 8);
  CHECK_THROWS_AS(effective_config(std::string("/nonexistent/x.conf"), {}, {}), IoError);
  CHECK_THROWS_AS(effective_config(std::nullopt, {"nokey = 1"}, {}), UsageError);
  CHECK_THROWS_AS(effective_config(std::nullopt, {"eta_big"}, {}), UsageError);
}

TEST_CASE("shipped config file matches the built-in preset") {
  const Config a = load_config(FDREL_SOURCE_DIR "/config/paper-sec6.conf");
  const Config b = paper_sec6_preset();
  CHECK(a.large_eta_nmax == b.large_eta_nmax);
  CHECK(a.sommerfeld_terms == b.sommerfeld_terms);
  CHECK(a.large_beta_kmax == b.large_beta_kmax);
  CHECK(a.series_tol == b.series_tol);
  CHECK(a.eta_big == b.eta_big);
  CHECK(a.kummer.z_switch == b.kummer.z_switch);
}

TEST_CASE("eval records") {
  const Row r = evaluate({0, 0, 0}, parse_method("auto"), Config{});
  CHECK(std::abs(r.value - 0.6931471806) < 1e-10);
  CHECK(r.method == "auto/small-beta");
  const Row n = evaluate({0.75, -7, 10.5}, parse_method("neg-eta-series"), Config{});
  CHECK(n.terms_used <= 10);
  Config c;
  c.large_beta_kmax = 2;
  const Row b = evaluate({2.4, 4.5, 50}, parse_method("large-beta"), c);
  CHECK(b.method == "large-beta-generic");
  CHECK(b.rel_error > 9.8e-9);
  CHECK(b.rel_error < 9.8e-7);
  const std::string kv = kv_line(b);
  CHECK(kv.find("rel_error=") != std::string::npos);
  CHECK(kv.find('\n') == std::string::npos);
}

TEST_CASE("degenerate reference") {
  // F underflows far below the smallest normal double
  const Row r = evaluate({0.5, -800, 0}, parse_method("neg-eta-series"), Config{});
  CHECK(r.degenerate);
  CHECK(split(csv_line(r), ',')[6] == "degenerate");
}

TEST_CASE("sweep shape and order") {
  SweepSpec s;
  s.fixed = {0.25, 0, 4.0 / 3.0};
  s.start = 6;
  s.stop = 16;
  s.count = 2;
  s.methods = parse_method_list("large-eta,large-eta-noexp,quadrature");
  const auto rows = run_sweep(s, Config{});
  CHECK(rows.size() == 6);
  CHECK(rows[0].p.eta == 6.0);
  CHECK(rows[5].p.eta == 16.0);
  CHECK(rows[1].method == "large-eta-noexp");
  std::ostringstream a, b;
  write_csv(a, rows);
  write_csv(b, run_sweep(s, Config{}, 3));
  CHECK(a.str() == b.str());
  CHECK(split(a.str(), '\n')[0] == "q,eta,beta,method,value,reference,rel_error,terms_used,err_est");
  CHECK(split(a.str(), '\n').size() == 7);

  s.count = 1;
  CHECK_THROWS_AS(check(s), UsageError);
  s.count = 3;
  s.stop = 5;
  CHECK_THROWS_AS(check(s), UsageError);
}

TEST_CASE("sweeps over the exponentially small and negative-eta regimes") {
  SweepSpec s;
  s.fixed = {0.25, 0, 4.0 / 3.0};
  s.start = 6;
  s.stop = 16;
  s.count = 6;
  s.methods = parse_method_list("large-eta,large-eta-noexp");
  const auto rows = run_sweep(s, Config{});
  for (std::size_t i = 0; i < rows.size(); i += 2) CHECK(rows[i].rel_error <= rows[i + 1].rel_error);

  SweepSpec n;
  n.fixed = {0.75, 0, 0};
  n.start = -30;
  n.stop = -5;
  n.count = 6;
  n.methods = parse_method_list("neg-eta-series");
  for (const auto& r : run_sweep(n, Config{})) CHECK(r.rel_error <= 1e-13);
}

TEST_CASE("tables") {
  const Table t1 = make_table("table1", Config{});
  CHECK(t1.rows.size() == 6);
  CHECK(t1.rows[4].measured[0] > 1.7e-13);
  CHECK(t1.rows[4].measured[0] < 1.7e-11);
  CHECK(t1.rows[4].paper[0] == 1.7e-12);
  const Table t2 = make_table("table2", Config{});
  CHECK(t2.rows[1].measured[0] > 3.1e-11);
  CHECK(t2.rows[1].measured[0] < 3.1e-9);
  CHECK(t2.rows[4].measured[1] <= 1e-14);
  CHECK(t2.rows[5].measured[1] <= 1e-14);
  std::ostringstream os;
  write_table(os, t1);
  CHECK(split(os.str(), '\n')[0] == "k,measured_beta_50,paper_beta_50,measured_beta_100,paper_beta_100");
  CHECK_THROWS_AS(make_table("table3", Config{}), UsageError);
}

TEST_CASE("output errors") {
  CHECK_THROWS_AS(write_output("/nonexistent-dir/out.csv", "x"), IoError);
}

}
