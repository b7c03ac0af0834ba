#include "cli_commands.hpp"

#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "fdrel/error.hpp"
#include "fdrel/fd_relativistic.hpp"
#include "fdrel/oracle.hpp"

namespace fdrel::cli {

MethodChoice parse_method(const std::string& name) {
  MethodChoice m;
  m.name = name;
  if (name == "auto") m.method = Method::Auto;
  else if (name == "neg-eta-series" || name == "neg-eta") m.method = Method::NegEtaSeries;
  else if (name == "large-eta") { m.method = Method::LargeEtaGeneric; m.by_q_class = true; }
  else if (name == "large-eta-generic") m.method = Method::LargeEtaGeneric;
  else if (name == "large-eta-noexp") { m.method = Method::LargeEtaGeneric; m.exp_small = false; }
  else if (name == "large-eta-halfint") m.method = Method::LargeEtaHalfInt;
  else if (name == "small-beta") m.method = Method::SmallBeta;
  else if (name == "large-beta") { m.method = Method::LargeBetaGeneric; m.by_q_class = true; }
  else if (name == "large-beta-generic") m.method = Method::LargeBetaGeneric;
  else if (name == "large-beta-halfint") m.method = Method::LargeBetaHalfInt;
  else if (name == "quadrature") m.method = Method::Quadrature;
  else throw UsageError("unknown method '" + name + "'");
  return m;
}

std::vector<MethodChoice> parse_method_list(const std::string& csv) {
  std::vector<MethodChoice> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_method(item));
  if (out.empty()) throw UsageError("empty method list");
  return out;
}

Config effective_config(const std::optional<std::string>& config_path,
                        const std::vector<std::string>& settings,
                        const Overrides& ov) {
  Config cfg;
  if (config_path) cfg = load_config(*config_path);
  for (const auto& s : settings) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects key=value, got '" + s + "'");
    cfg = parse_config(s, cfg);
  }
  if (ov.tol) cfg.series_tol = *ov.tol;
  if (ov.nterms) {
    if (*ov.nterms < 0) throw UsageError("--nterms must be nonnegative");
    cfg.large_eta_nmax = cfg.small_beta_nmax = *ov.nterms;
  }
  if (ov.kmax) {
    if (*ov.kmax < 0) throw UsageError("--kmax must be nonnegative");
    cfg.large_beta_kmax = *ov.kmax;
  }
  if (ov.oracle_tol) cfg.oracle_tol = *ov.oracle_tol;
  return cfg;
}

Row evaluate(const FdParams& p, const MethodChoice& m, const Config& cfg,
             bool with_reference) {
  Method method = m.method;
  if (m.by_q_class && classify_q(p.q) == QClass::HalfInteger)
    method = method == Method::LargeEtaGeneric ? Method::LargeEtaHalfInt
                                               : Method::LargeBetaHalfInt;
  Config c = cfg;
  c.include_exp_small = cfg.include_exp_small && m.exp_small;
  const EvalResult r = fd_rel_eval(p, method, c);

  Row row;
  row.p = p;
  // auto rows name the method they resolved to
  if (m.method == Method::Auto) row.method = "auto/" + std::string(method_name(r.method));
  else if (m.by_q_class) row.method = std::string(method_name(r.method));
  else row.method = m.name;
  row.value = r.value;
  row.terms_used = r.terms_used;
  row.err_est = r.err_est;
  if (with_reference) {
    row.has_reference = true;
    row.reference = quad_fd_rel(p, cfg.oracle_tol).value;
    row.degenerate = !(std::abs(row.reference) >= kDegenerateReference);
    if (!row.degenerate)
      row.rel_error = std::abs(row.value - row.reference) / std::abs(row.reference);
  }
  return row;
}

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string rel_field(const Row& r) {
  if (!r.has_reference) return "";
  return r.degenerate ? "degenerate" : fmt(r.rel_error);
}

}  // namespace

std::string csv_line(const Row& r) {
  std::string s = fmt(r.p.q) + ',' + fmt(r.p.eta) + ',' + fmt(r.p.beta) + ',' +
                  r.method + ',' + fmt(r.value) + ',';
  if (r.has_reference) s += fmt(r.reference);
  s += ',' + rel_field(r) + ',' + std::to_string(r.terms_used) + ',' + fmt(r.err_est);
  return s;
}

std::string kv_line(const Row& r) {
  std::string s = "q=" + fmt(r.p.q) + " eta=" + fmt(r.p.eta) + " beta=" + fmt(r.p.beta) +
                  " method=" + r.method + " value=" + fmt(r.value) +
                  " err_est=" + fmt(r.err_est) + " terms_used=" + std::to_string(r.terms_used);
  if (r.has_reference)
    s += " reference=" + fmt(r.reference) + " rel_error=" + rel_field(r);
  return s;
}

void print_human(std::ostream& os, const Row& r) {
  os << "q          " << fmt(r.p.q) << '\n'
     << "eta        " << fmt(r.p.eta) << '\n'
     << "beta       " << fmt(r.p.beta) << '\n'
     << "method     " << r.method << '\n'
     << "value      " << fmt(r.value) << '\n'
     << "err_est    " << fmt(r.err_est) << '\n'
     << "terms_used " << r.terms_used << '\n';
  if (r.has_reference)
    os << "reference  " << fmt(r.reference) << '\n'
       << "rel_error  " << rel_field(r) << '\n';
}

void check(const SweepSpec& s) {
  if (s.axis != "eta" && s.axis != "beta")
    throw UsageError("--axis must be eta or beta");
  if (s.count < 2) throw UsageError("--count must be at least 2");
  if (!(s.start < s.stop)) throw UsageError("sweep needs start < stop");
  if (s.methods.empty()) throw UsageError("no methods given");
}

std::vector<double> grid(const SweepSpec& s) {
  check(s);
  std::vector<double> g(s.count);
  for (int i = 0; i < s.count; ++i)
    g[i] = s.start + (s.stop - s.start) * i / (s.count - 1);
  g.back() = s.stop;
  return g;
}

std::vector<Row> run_sweep(const SweepSpec& s, const Config& cfg, int jobs) {
  const auto g = grid(s);
  const std::size_t nm = s.methods.size();
  const std::size_t n = g.size() * nm;
  std::vector<Row> rows(n);
  std::vector<std::exception_ptr> errs(n);

  auto work = [&](std::size_t i) {
    FdParams p = s.fixed;
    (s.axis == "eta" ? p.eta : p.beta) = g[i / nm];
    try {
      rows[i] = evaluate(p, s.methods[i % nm], cfg);
    } catch (...) {
      errs[i] = std::current_exception();
    }
  };

  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < n; i += jobs) work(i);
      });
    for (auto& th : pool) th.join();
  }
  // first failure in grid order, so the reported error does not depend on timing
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return rows;
}

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) os << csv_line(r) << '\n';
}

namespace {

// printed values of the published tables, rows k = 0..5
constexpr double kTable1Paper[6][2] = {
    {4.2e-3, 2.1e-3}, {1.1e-5, 2.8e-5}, {9.8e-8, 1.2e-8},
    {4.7e-9, 2.9e-10}, {1.7e-12, 5.3e-14}, {8.5e-15, 2.2e-16}};
constexpr double kTable2Paper[6][2] = {
    {2.5e-8, 6.7e-10}, {3.1e-10, 3.5e-12}, {4.6e-12, 2.2e-14},
    {5.9e-14, 2.2e-16}, {8.9e-16, 4.4e-16}, {2.2e-16, 4.4e-16}};

}  // namespace

Table make_table(const std::string& name, const Config& cfg) {
  Table t;
  t.name = name;
  const double (*paper)[2] = nullptr;
  Method method;
  if (name == "table1") {
    t.q = 2.4; t.eta = 4.5; t.beta[0] = 50; t.beta[1] = 100;
    paper = kTable1Paper; method = Method::LargeBetaGeneric;
  } else if (name == "table2") {
    t.q = 1.5; t.eta = 4.5; t.beta[0] = 20; t.beta[1] = 50;
    paper = kTable2Paper; method = Method::LargeBetaHalfInt;
  } else {
    throw UsageError("unknown table '" + name + "' (table1 or table2)");
  }
  double ref[2];
  for (int j = 0; j < 2; ++j)
    ref[j] = quad_fd_rel({t.q, t.eta, t.beta[j]}, cfg.oracle_tol).value;
  for (int k = 0; k <= 5; ++k) {
    TableRow row;
    row.k = k;
    Config c = cfg;
    c.large_beta_kmax = k;
    for (int j = 0; j < 2; ++j) {
      const double v = fd_rel_eval({t.q, t.eta, t.beta[j]}, method, c).value;
      row.measured[j] = std::abs(v - ref[j]) / std::abs(ref[j]);
      row.paper[j] = paper[k][j];
    }
    t.rows.push_back(row);
  }
  return t;
}

void write_table(std::ostream& os, const Table& t) {
  const std::string b0 = fmt(t.beta[0]), b1 = fmt(t.beta[1]);
  os << "k,measured_beta_" << b0 << ",paper_beta_" << b0 << ",measured_beta_" << b1
     << ",paper_beta_" << b1 << '\n';
  for (const auto& r : t.rows)
    os << r.k << ',' << fmt(r.measured[0]) << ',' << fmt(r.paper[0]) << ','
       << fmt(r.measured[1]) << ',' << fmt(r.paper[1]) << '\n';
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace fdrel::cli
