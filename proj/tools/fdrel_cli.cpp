// fdrel: evaluate relativistic Fermi-Dirac integrals, sweep, reproduce tables.
//
//   fdrel eval --q 0.25 --eta 20 --beta 1.5 [--method auto] [--kv]
//   fdrel sweep --q 0.25 --beta 1.5 --axis eta --start 6 --stop 16 --count 6
//               --methods large-eta,large-eta-noexp --out fig1.csv
//   fdrel table table1 --out t1.csv
//
// exit codes: 0 ok, 2 usage/domain, 3 convergence, 4 io

#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cli_commands.hpp"
#include "fdrel/error.hpp"

namespace {

int exit_code(fdrel::ErrorKind k) {
  switch (k) {
    case fdrel::ErrorKind::Convergence: return 3;
    case fdrel::ErrorKind::Io: return 4;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fdrel::cli;

  CLI::App app{"Relativistic Fermi-Dirac integrals"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  std::vector<std::string> settings;
  Overrides ov;
  std::string out;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value file, or the preset name paper-sec6");
    sub->add_option("--set", settings, "extra key=value setting (repeatable)");
    sub->add_option("--tol", ov.tol, "series tolerance");
    sub->add_option("--nterms", ov.nterms, "highest index of the large-eta / small-beta sums");
    sub->add_option("--kmax", ov.kmax, "highest k of the large-beta sums");
    sub->add_option("--oracle-tol", ov.oracle_tol, "quadrature reference tolerance");
    sub->add_option("--out", out, "output file (default stdout)");
  };

  fdrel::FdParams p;
  std::string method = "auto";
  bool kv = false, no_ref = false;
  auto* eval = app.add_subcommand("eval", "evaluate one point");
  eval->add_option("--q", p.q)->required();
  eval->add_option("--eta", p.eta)->required();
  eval->add_option("--beta", p.beta)->required();
  eval->add_option("--method", method);
  eval->add_flag("--kv", kv, "single-line key=value record");
  eval->add_flag("--no-reference", no_ref, "skip the quadrature reference");
  common(eval);

  SweepSpec spec;
  std::string methods = "auto";
  int jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "CSV over an eta or beta grid");
  sweep->add_option("--q", spec.fixed.q)->required();
  sweep->add_option("--eta", spec.fixed.eta, "fixed eta when sweeping beta");
  sweep->add_option("--beta", spec.fixed.beta, "fixed beta when sweeping eta");
  sweep->add_option("--axis", spec.axis)->check(CLI::IsMember({"eta", "beta"}));
  sweep->add_option("--start", spec.start)->required();
  sweep->add_option("--stop", spec.stop)->required();
  sweep->add_option("--count", spec.count)->required();
  sweep->add_option("--methods,--method", methods, "comma separated");
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  common(sweep);

  std::string table_name;
  auto* table = app.add_subcommand("table", "reproduce table1 or table2");
  table->add_option("name", table_name)->required()->check(CLI::IsMember({"table1", "table2"}));
  common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    const fdrel::Config cfg = effective_config(config_path, settings, ov);
    std::ostringstream os;
    if (*eval) {
      const Row r = evaluate(p, parse_method(method), cfg, !no_ref);
      if (kv) os << kv_line(r) << '\n';
      else print_human(os, r);
    } else if (*sweep) {
      spec.methods = parse_method_list(methods);
      write_csv(os, run_sweep(spec, cfg, jobs));
    } else {
      write_table(os, make_table(table_name, cfg));
    }
    write_output(out, os.str());
  } catch (const fdrel::Error& e) {
    std::cerr << "fdrel: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "fdrel: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
