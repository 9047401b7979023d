#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agsim/analog_search.hpp"
#include "agsim/types.hpp"

namespace agsim {

enum class OutputFormat { csv, json };

/// Resolved run configuration shared by the sweep and figure commands.
struct RunConfig {
  int n_qubits = 2;
  double energy = 1.0;
  std::optional<double> overlap; // unset selects 1/sqrt(N)
  int marked = 0;
  std::optional<double> t_max;   // unset selects 2 * peak_time
  int steps = 1000;
  OutputFormat format = OutputFormat::csv;
  std::string out;               // empty writes to stdout
  double log_base = 2.0;
  unsigned long seed = 12345;
};

/// One grid point of the sweep. Entanglement fields are empty unless the
/// overlap is uniform and n >= 2.
struct SweepRecord {
  double t;
  double P;
  double C_l1;
  double C_r;
  std::optional<double> S_ent;
  std::optional<double> C_1_rest;
  std::optional<double> dC_dt;
  std::optional<double> C_pair;
  std::optional<double> delta_C;
  std::optional<double> delta_EoF2;
};

/// Column-oriented output table; cells are empty or numeric.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
};

SearchParams params_from_config(const RunConfig& cfg);

/// Evenly spaced grid including both endpoints.
std::vector<double> time_grid(double t_max, int steps);

std::vector<SweepRecord> compute_sweep(const SearchParams& p, double t_max, int steps,
                                       double log_base = 2.0);

Table sweep_table(const std::vector<SweepRecord>& records);

/// Fields the caller set explicitly; everything else takes the per-figure
/// default.
struct FigureRequest {
  std::optional<int> n_qubits;
  std::optional<double> energy;
  std::optional<double> overlap;
  std::optional<int> marked;
  std::optional<double> t_max;
  std::optional<int> steps;
  std::optional<double> log_base;
  OutputFormat format = OutputFormat::csv;
  std::string out;
  unsigned long seed = 12345;
};

bool is_figure_id(const std::string& id);

/// Figure defaults merged with the caller's explicit fields.
RunConfig figure_config(const std::string& id, const FigureRequest& req);

/// Data behind one published figure. Known ids: 1, 2, 3a, 3b, 4, 5.
/// The config must come from figure_config for the same id.
Table figure_table(const std::string& id, const RunConfig& cfg);

/// 12 significant digits, locale independent.
std::string format_number(double v);

std::string to_csv(const Table& table);
std::string to_json(const Table& table, const RunConfig& cfg, const SearchParams& p);

} // namespace agsim
