#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fdrel/config.hpp"
#include "fdrel/types.hpp"

namespace fdrel::cli {

inline constexpr const char* kCsvHeader =
    "q,eta,beta,method,value,reference,rel_error,terms_used,err_est";

// below this the reference is too small for a relative error
inline constexpr double kDegenerateReference = 1e-300;

// What the user asked for on the command line. Some names map onto the same
// library method with a different switch (large-eta-noexp) or pick the
// generic/half-integer variant from q (large-eta, large-beta).
struct MethodChoice {
  std::string name;
  Method method = Method::Auto;
  bool exp_small = true;
  bool by_q_class = false;
};

MethodChoice parse_method(const std::string& name);
std::vector<MethodChoice> parse_method_list(const std::string& csv);

// Budgets given on the command line; unset ones come from the config.
struct Overrides {
  std::optional<double> tol;
  std::optional<int> nterms;
  std::optional<int> kmax;
  std::optional<double> oracle_tol;
};

Config effective_config(const std::optional<std::string>& config_path,
                        const std::vector<std::string>& settings,
                        const Overrides& ov);

struct Row {
  FdParams p;
  std::string method;
  double value = 0.0;
  double reference = 0.0;
  double rel_error = 0.0;
  bool degenerate = false;
  bool has_reference = false;
  int terms_used = 0;
  double err_est = 0.0;
};

// Evaluates one point with the chosen method; the reference comes from the
// quadrature oracle at cfg.oracle_tol when with_reference is set.
Row evaluate(const FdParams& p, const MethodChoice& m, const Config& cfg,
             bool with_reference = true);

// Shortest decimal that reads back to the same double.
std::string fmt(double x);

std::string csv_line(const Row& r);
std::string kv_line(const Row& r);
void print_human(std::ostream& os, const Row& r);

struct SweepSpec {
  std::string axis = "eta";
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
  FdParams fixed;
  std::vector<MethodChoice> methods;
};

void check(const SweepSpec& s);
std::vector<double> grid(const SweepSpec& s);

// Rows ordered by grid index, then by method order. jobs <= 1 runs serially.
std::vector<Row> run_sweep(const SweepSpec& s, const Config& cfg, int jobs = 1);

void write_csv(std::ostream& os, const std::vector<Row>& rows);

struct TableRow {
  int k = 0;
  double measured[2] = {0.0, 0.0};
  double paper[2] = {0.0, 0.0};
};

struct Table {
  std::string name;
  double q = 0.0;
  double eta = 0.0;
  double beta[2] = {0.0, 0.0};
  std::vector<TableRow> rows;
};

// table1: generic large-beta at q = 2.4; table2: half-integer at q = 3/2.
Table make_table(const std::string& name, const Config& cfg);
void write_table(std::ostream& os, const Table& t);

// Writes text to path, or to stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& text);

}  // namespace fdrel::cli
