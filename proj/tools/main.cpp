#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "agsim/analog_search.hpp"
#include "agsim/sweep.hpp"
#include "agsim/types.hpp"
#include "agsim/verify.hpp"

namespace {

struct IoError {
  std::string message;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError{"writing to stdout failed"};
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError{"cannot open " + path + " for writing"};
  file << text;
  file.flush();
  if (!file) throw IoError{"writing to " + path + " failed"};
}

double parse_log_base(const std::string& s) {
  if (s == "2") return 2.0;
  if (s == "e") return std::exp(1.0);
  throw std::invalid_argument("--log-base must be 2 or e");
}

int resolve_qubits(std::optional<int> n_qubits, std::optional<long long> dim) {
  if (dim) {
    const int from_dim = agsim::qubit_count(static_cast<agsim::Index>(*dim));
    if (n_qubits && *n_qubits != from_dim)
      throw std::invalid_argument("--n-qubits and --dim disagree");
    if (from_dim < 1 || from_dim > 12)
      throw std::invalid_argument("--dim must be between 2 and 4096");
    return from_dim;
  }
  return n_qubits.value_or(2);
}

std::string render(const agsim::Table& table, const agsim::RunConfig& cfg) {
  const agsim::SearchParams p = agsim::params_from_config(cfg);
  return cfg.format == agsim::OutputFormat::csv ? agsim::to_csv(table)
                                                : agsim::to_json(table, cfg, p);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous-time quantum search with coherence and entanglement diagnostics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "agsim 0.1.0");

  std::optional<int> n_qubits;
  std::optional<long long> dim;
  std::optional<double> energy;
  std::optional<double> overlap;
  std::optional<int> marked;
  std::optional<double> t_max;
  std::optional<int> steps;
  std::string format = "csv";
  std::string out;
  std::string log_base = "2";
  unsigned long seed = 12345;

  const auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n-qubits", n_qubits, "Register size n, dimension N = 2^n")
        ->check(CLI::Range(1, 12));
    cmd->add_option("--dim", dim, "Dimension N, must be a power of two")
        ->check(CLI::Range(2LL, 4096LL));
    cmd->add_option("--energy", energy, "Hamiltonian energy scale E")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--overlap", overlap,
                    "Start overlap x = <s|w> in (0, 1]; defaults to 1/sqrt(N)");
    cmd->add_option("--marked", marked, "Index of the marked basis state")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--t-max", t_max, "Sweep end time; defaults to one full period 2 t_m")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--steps", steps, "Number of grid intervals (rows = steps + 1)")
        ->check(CLI::Range(1, 10000000));
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out, "Output file; stdout when omitted");
    cmd->add_option("--log-base", log_base, "Entropy logarithm base")
        ->check(CLI::IsMember({"2", "e"}));
    cmd->add_option("--seed", seed, "Seed recorded in the output config");
  };

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Tabulate the diagnostics over a time grid");
  add_run_flags(sweep_cmd);

  std::string figure_id;
  CLI::App* figure_cmd =
      app.add_subcommand("figure", "Reproduce the data behind one figure (1, 2, 3a, 3b, 4, 5)");
  figure_cmd->add_option("id", figure_id, "Figure id")->required();
  add_run_flags(figure_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the closed-form-vs-oracle check battery");
  agsim::VerifyOptions vopts;
  verify_cmd->add_option("--n-min", vopts.n_min, "Smallest register size")
      ->check(CLI::Range(1, 12));
  verify_cmd->add_option("--n-max", vopts.n_max, "Largest register size")
      ->check(CLI::Range(1, 12));
  verify_cmd->add_option("--energy", vopts.energy, "Hamiltonian energy scale E")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--steps", vopts.grid_steps, "Time grid intervals per check")
      ->check(CLI::Range(10, 1000000));
  std::string verify_log_base = "2";
  verify_cmd->add_option("--log-base", verify_log_base, "Entropy logarithm base")
      ->check(CLI::IsMember({"2", "e"}));
  verify_cmd->add_option("--seed", vopts.seed, "Seed for the randomized property checks");
  verify_cmd->add_option("--out", out, "Report file; stdout when omitted");
  verify_cmd->add_option("--integrator-dt", vopts.integrator_dt)->group("");
  verify_cmd->add_option("--inject-integrator-error", vopts.error_injection)->group("");

  try {
    app.parse(argc, argv);

    if (verify_cmd->parsed()) {
      vopts.log_base = parse_log_base(verify_log_base);
      const std::vector<agsim::CheckResult> results = agsim::run_verification(vopts);
      write_output(agsim::format_check_table(results), out);
      return agsim::all_passed(results) ? 0 : 3;
    }

    if (sweep_cmd->parsed()) {
      agsim::RunConfig cfg;
      cfg.n_qubits = resolve_qubits(n_qubits, dim);
      if (energy) cfg.energy = *energy;
      cfg.overlap = overlap;
      if (marked) cfg.marked = *marked;
      cfg.t_max = t_max;
      if (steps) cfg.steps = *steps;
      cfg.format = format == "json" ? agsim::OutputFormat::json : agsim::OutputFormat::csv;
      cfg.out = out;
      cfg.log_base = parse_log_base(log_base);
      cfg.seed = seed;
      const agsim::SearchParams p = agsim::params_from_config(cfg);
      const double end = cfg.t_max ? *cfg.t_max : 2.0 * agsim::peak_time(p);
      const agsim::Table table =
          agsim::sweep_table(agsim::compute_sweep(p, end, cfg.steps, cfg.log_base));
      write_output(render(table, cfg), cfg.out);
      return 0;
    }

    // figure
    if (!agsim::is_figure_id(figure_id)) {
      std::cerr << "unknown figure id '" << figure_id << "' (known: 1, 2, 3a, 3b, 4, 5)\n";
      return 1;
    }
    agsim::FigureRequest req;
    if (dim || n_qubits) req.n_qubits = resolve_qubits(n_qubits, dim);
    req.energy = energy;
    req.overlap = overlap;
    req.marked = marked;
    req.t_max = t_max;
    req.steps = steps;
    req.log_base = parse_log_base(log_base);
    req.format = format == "json" ? agsim::OutputFormat::json : agsim::OutputFormat::csv;
    req.out = out;
    req.seed = seed;
    const agsim::RunConfig cfg = agsim::figure_config(figure_id, req);
    write_output(render(agsim::figure_table(figure_id, cfg), cfg), cfg.out);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
