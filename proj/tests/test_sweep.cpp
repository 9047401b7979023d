#include <cmath>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "agsim/sweep.hpp"

using namespace agsim;

TEST_CASE("time grid hits both endpoints exactly") {
  const std::vector<double> grid = time_grid(3.7, 10);
  REQUIRE(grid.size() == 11);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 3.7);
  CHECK(grid[5] == doctest::Approx(1.85).epsilon(1e-15));
  CHECK_THROWS_AS(time_grid(0.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(time_grid(1.0, 0), std::invalid_argument);
}

TEST_CASE("sweep records carry the full diagnostic set for uniform n >= 2") {
  const SearchParams p = SearchParams::uniform_overlap(2, 1.0);
  const std::vector<SweepRecord> records = compute_sweep(p, 2.0 * peak_time(p), 100);
  REQUIRE(records.size() == 101);
  const SweepRecord& first = records.front();
  CHECK(first.P == 0.25);
  CHECK(first.C_l1 == doctest::Approx(0.8660254037844386).epsilon(1e-14));
  REQUIRE(first.S_ent.has_value());
  CHECK(*first.S_ent == doctest::Approx(0.0).epsilon(1e-12));
  REQUIRE(first.delta_C.has_value());
  CHECK(*first.delta_C == 0.0);
  REQUIRE(first.dC_dt.has_value());
  CHECK(*first.dC_dt == doctest::Approx(0.5).epsilon(1e-14));

  // Midpoint of the grid sits on the success peak.
  const SweepRecord& mid = records[50];
  CHECK(mid.P == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mid.C_l1 < 1e-12);
}

TEST_CASE("entanglement fields are empty off the uniform branch") {
  const SearchParams p = SearchParams::with_overlap(2, 1.0, 0.3);
  const std::vector<SweepRecord> records = compute_sweep(p, 1.0, 4);
  for (const SweepRecord& r : records) {
    CHECK_FALSE(r.S_ent.has_value());
    CHECK_FALSE(r.C_1_rest.has_value());
    CHECK_FALSE(r.delta_EoF2.has_value());
  }
  const SearchParams single = SearchParams::uniform_overlap(1, 1.0);
  for (const SweepRecord& r : compute_sweep(single, 1.0, 4))
    CHECK_FALSE(r.C_pair.has_value());
}

TEST_CASE("number formatting is compact and 12 significant digits") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.25) == "0.25");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(3.141592653589793) == "3.14159265359");
  CHECK(format_number(-0.5) == "-0.5");
  CHECK(format_number(1e-17) == "1e-17");
}

TEST_CASE("CSV layout") {
  const SearchParams p = SearchParams::uniform_overlap(2, 1.0);
  const Table table = sweep_table(compute_sweep(p, 1.0, 2));
  const std::string csv = to_csv(table);

  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header == "t,P,C_l1,C_r,S_ent,C_1_rest,dC_dt,C_pair,delta_C,delta_EoF2");

  // header + 3 rows, each line terminated
  int lines = 0;
  for (const char c : csv) lines += c == '\n';
  CHECK(lines == 4);
  CHECK(csv.back() == '\n');

  // n = 1 leaves the entanglement cells empty between commas
  const SearchParams single = SearchParams::uniform_overlap(1, 1.0);
  const std::string csv1 = to_csv(sweep_table(compute_sweep(single, 1.0, 1)));
  CHECK(csv1.find(",,") != std::string::npos);
}

TEST_CASE("JSON document structure") {
  RunConfig cfg;
  cfg.n_qubits = 2;
  cfg.steps = 3;
  const SearchParams p = params_from_config(cfg);
  const Table table = sweep_table(compute_sweep(p, 2.0 * peak_time(p), cfg.steps));
  const nlohmann::json doc = nlohmann::json::parse(to_json(table, cfg, p));

  CHECK(doc["config"]["n_qubits"] == 2);
  CHECK(doc["config"]["dim"] == 4);
  CHECK(doc["config"]["uniform"] == true);
  CHECK(doc["config"]["steps"] == 3);
  REQUIRE(doc["records"].size() == 4);
  CHECK(doc["records"][0]["P"] == 0.25);
  CHECK(doc["records"][0].contains("delta_EoF2"));
}

TEST_CASE("rendering is deterministic") {
  RunConfig cfg;
  cfg.n_qubits = 3;
  cfg.steps = 50;
  const auto render = [&cfg]() {
    const SearchParams p = params_from_config(cfg);
    const Table t = sweep_table(compute_sweep(p, 2.0 * peak_time(p), cfg.steps));
    return to_csv(t) + to_json(t, cfg, p);
  };
  CHECK(render() == render());
}

TEST_CASE("figure ids and defaults") {
  CHECK(is_figure_id("1"));
  CHECK(is_figure_id("3b"));
  CHECK_FALSE(is_figure_id("6"));
  CHECK_THROWS_AS(figure_config("6", {}), std::invalid_argument);

  const RunConfig one = figure_config("1", {});
  CHECK(one.n_qubits == 1);
  REQUIRE(one.overlap.has_value());
  CHECK(*one.overlap == 0.707);

  const RunConfig five = figure_config("5", {});
  CHECK(five.n_qubits == 5);
  CHECK_FALSE(five.overlap.has_value());

  FigureRequest req;
  req.n_qubits = 3;
  req.energy = 2.0;
  const RunConfig overridden = figure_config("5", req);
  CHECK(overridden.n_qubits == 3);
  CHECK(overridden.energy == 2.0);
  CHECK(overridden.steps == 1000);
}

TEST_CASE("figure tables carry the documented columns") {
  CHECK(figure_table("1", figure_config("1", {})).columns ==
        std::vector<std::string>{"t", "P", "C_l1", "C_r"});
  CHECK(figure_table("2", figure_config("2", {})).columns ==
        std::vector<std::string>{"t", "P", "S_ent", "C_1_rest"});
  CHECK(figure_table("3a", figure_config("3a", {})).columns ==
        std::vector<std::string>{"t", "dC_dt"});
  CHECK(figure_table("5", figure_config("5", {})).columns ==
        std::vector<std::string>{"t", "P", "delta_C", "delta_EoF2"});

  const Table fig3b = figure_table("3b", figure_config("3b", {}));
  CHECK(fig3b.columns == std::vector<std::string>{"k", "delta_C"});
  CHECK(fig3b.rows.size() == 8);
  CHECK(*fig3b.rows[1][1] == doctest::Approx(1.0).epsilon(1e-12)); // N=4 swing up after success
}

TEST_CASE("figure 4 aligns the pair concurrence peak with the probability rate peak") {
  FigureRequest req;
  req.t_max = peak_time(SearchParams::uniform_overlap(2, 1.0));
  const Table fig4 = figure_table("4", figure_config("4", req));
  REQUIRE(fig4.columns == std::vector<std::string>{"t", "C_pair", "dP_dt"});
  std::size_t argmax_c = 0, argmax_r = 0;
  for (std::size_t i = 0; i < fig4.rows.size(); ++i) {
    if (*fig4.rows[i][1] > *fig4.rows[argmax_c][1]) argmax_c = i;
    if (*fig4.rows[i][2] > *fig4.rows[argmax_r][2]) argmax_r = i;
  }
  const auto gap = argmax_c > argmax_r ? argmax_c - argmax_r : argmax_r - argmax_c;
  CHECK(gap <= 1);
}

TEST_CASE("config resolution") {
  RunConfig cfg;
  cfg.n_qubits = 2;
  CHECK(params_from_config(cfg).uniform);
  cfg.overlap = 0.3;
  CHECK_FALSE(params_from_config(cfg).uniform);
  cfg.overlap = 1.5;
  CHECK_THROWS_AS(params_from_config(cfg), std::invalid_argument);
}
