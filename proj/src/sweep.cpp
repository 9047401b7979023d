#include "agsim/sweep.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

#include "agsim/coherence.hpp"
#include "agsim/entanglement.hpp"
#include "agsim/grover_discrete.hpp"
#include "agsim/monogamy.hpp"
#include "agsim/qmath.hpp"

namespace agsim {

namespace {

const std::vector<std::string> kSweepColumns = {
    "t",     "P",        "C_l1",  "C_r",    "S_ent",
    "C_1_rest", "dC_dt", "C_pair", "delta_C", "delta_EoF2"};

double resolve_t_max(const RunConfig& cfg, const SearchParams& p) {
  return cfg.t_max ? *cfg.t_max : 2.0 * peak_time(p);
}

std::optional<double> record_field(const SweepRecord& r, const std::string& name) {
  if (name == "t") return r.t;
  if (name == "P") return r.P;
  if (name == "C_l1") return r.C_l1;
  if (name == "C_r") return r.C_r;
  if (name == "S_ent") return r.S_ent;
  if (name == "C_1_rest") return r.C_1_rest;
  if (name == "dC_dt") return r.dC_dt;
  if (name == "C_pair") return r.C_pair;
  if (name == "delta_C") return r.delta_C;
  if (name == "delta_EoF2") return r.delta_EoF2;
  throw std::logic_error("unknown sweep column " + name);
}

Table select_columns(const std::vector<SweepRecord>& records,
                     const std::vector<std::string>& columns) {
  Table t;
  t.columns = columns;
  t.rows.reserve(records.size());
  for (const SweepRecord& r : records) {
    std::vector<std::optional<double>> row;
    row.reserve(columns.size());
    for (const std::string& c : columns) row.push_back(record_field(r, c));
    t.rows.push_back(std::move(row));
  }
  return t;
}

} // namespace

SearchParams params_from_config(const RunConfig& cfg) {
  if (cfg.overlap)
    return SearchParams::with_overlap(cfg.n_qubits, cfg.energy, *cfg.overlap, cfg.marked);
  return SearchParams::uniform_overlap(cfg.n_qubits, cfg.energy, cfg.marked);
}

std::vector<double> time_grid(double t_max, int steps) {
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i)
    grid[static_cast<std::size_t>(i)] = t_max * static_cast<double>(i) / steps;
  grid.front() = 0.0;
  grid.back() = t_max;
  return grid;
}

std::vector<SweepRecord> compute_sweep(const SearchParams& p, double t_max, int steps,
                                       double log_base) {
  const std::vector<double> grid = time_grid(t_max, steps);
  const bool entangled = p.uniform && p.n_qubits >= 2;
  std::vector<SweepRecord> records;
  records.reserve(grid.size());
  for (double t : grid) {
    SweepRecord r;
    r.t = t;
    r.P = success_probability(p, t);
    const CoherencePair c = coherence_closed_form(p, t, log_base);
    r.C_l1 = c.l1;
    r.C_r = c.rel_ent;
    if (entangled) {
      r.S_ent = binary_entropy(rdm_eigvals_closed(p, t)[0], log_base);
      const double c_rest = concurrence_one_vs_rest_closed(p, t);
      const double c_pair = pair_concurrence_closed(p, t);
      r.C_1_rest = c_rest;
      r.dC_dt = concurrence_rate_closed(p, t);
      r.C_pair = c_pair;
      r.delta_C = monogamy_score_closed(p, t);
      const double e_rest = eof_from_concurrence(c_rest, log_base);
      const double e_pair = eof_from_concurrence(c_pair, log_base);
      r.delta_EoF2 = e_rest * e_rest - (p.n_qubits - 1) * e_pair * e_pair;
    }
    records.push_back(r);
  }
  return records;
}

Table sweep_table(const std::vector<SweepRecord>& records) {
  return select_columns(records, kSweepColumns);
}

bool is_figure_id(const std::string& id) {
  return id == "1" || id == "2" || id == "3a" || id == "3b" || id == "4" || id == "5";
}

RunConfig figure_config(const std::string& id, const FigureRequest& req) {
  if (!is_figure_id(id)) throw std::invalid_argument("unknown figure id " + id);
  RunConfig cfg;
  if (id == "1") {
    cfg.n_qubits = 1;
    cfg.overlap = 0.707;
  } else if (id == "5") {
    cfg.n_qubits = 5;
  } else {
    cfg.n_qubits = 2;
  }
  cfg.steps = id == "3b" ? 8 : 1000;
  if (req.n_qubits) cfg.n_qubits = *req.n_qubits;
  if (req.energy) cfg.energy = *req.energy;
  if (req.overlap) cfg.overlap = *req.overlap;
  if (req.marked) cfg.marked = *req.marked;
  if (req.t_max) cfg.t_max = *req.t_max;
  if (req.steps) cfg.steps = *req.steps;
  if (req.log_base) cfg.log_base = *req.log_base;
  cfg.format = req.format;
  cfg.out = req.out;
  cfg.seed = req.seed;
  return cfg;
}

Table figure_table(const std::string& id, const RunConfig& cfg) {
  if (!is_figure_id(id)) throw std::invalid_argument("unknown figure id " + id);
  const SearchParams p = params_from_config(cfg);
  if (id == "3b") {
    const GroverTrace trace = grover_trace(p, cfg.steps);
    const std::vector<double> dc = trace.delta_c();
    Table t;
    t.columns = {"k", "delta_C"};
    for (std::size_t k = 0; k < dc.size(); ++k)
      t.rows.push_back({static_cast<double>(k), dc[k]});
    return t;
  }
  const std::vector<SweepRecord> records =
      compute_sweep(p, resolve_t_max(cfg, p), cfg.steps, cfg.log_base);
  if (id == "1") return select_columns(records, {"t", "P", "C_l1", "C_r"});
  if (id == "2") return select_columns(records, {"t", "P", "S_ent", "C_1_rest"});
  if (id == "3a") return select_columns(records, {"t", "dC_dt"});
  if (id == "5") return select_columns(records, {"t", "P", "delta_C", "delta_EoF2"});
  // Figure 4 pairs the pair concurrence with the success probability rate.
  Table t = select_columns(records, {"t", "C_pair"});
  t.columns.push_back("dP_dt");
  const double x = p.overlap;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double time = records[i].t;
    t.rows[i].push_back((1.0 - p.overlap_sq) * p.energy * x *
                        std::sin(2.0 * p.energy * x * time));
  }
  return t;
}

std::string format_number(double v) {
  char buf[64];
  const std::to_chars_result res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (row[c]) out += format_number(*row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table, const RunConfig& cfg, const SearchParams& p) {
  nlohmann::ordered_json config;
  config["n_qubits"] = p.n_qubits;
  config["dim"] = p.dim;
  config["energy"] = p.energy;
  config["overlap"] = p.overlap;
  config["uniform"] = p.uniform;
  config["marked"] = p.marked;
  bool has_time = false;
  for (const std::string& c : table.columns) has_time = has_time || c == "t";
  if (has_time)
    config["t_max"] = resolve_t_max(cfg, p);
  else
    config["t_max"] = nullptr;
  config["steps"] = cfg.steps;
  config["log_base"] = cfg.log_base;
  config["seed"] = cfg.seed;

  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c])
        rec[table.columns[c]] = *row[c];
      else
        rec[table.columns[c]] = nullptr;
    }
    records.push_back(std::move(rec));
  }

  nlohmann::ordered_json doc;
  doc["config"] = std::move(config);
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

} // namespace agsim
