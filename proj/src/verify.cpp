#include "agsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "agsim/analog_search.hpp"
#include "agsim/coherence.hpp"
#include "agsim/entanglement.hpp"
#include "agsim/grover_discrete.hpp"
#include "agsim/monogamy.hpp"
#include "agsim/qmath.hpp"
#include "agsim/sweep.hpp"

namespace agsim {

namespace {

CheckResult judge(std::string name, double max_dev, double tol, std::string note = "") {
  CheckResult r;
  r.name = std::move(name);
  r.status = max_dev <= tol ? CheckStatus::pass : CheckStatus::fail;
  r.max_dev = max_dev;
  r.tol = tol;
  r.note = std::move(note);
  return r;
}

CheckResult skipped(std::string name, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.status = CheckStatus::skip;
  r.max_dev = 0.0;
  r.tol = 0.0;
  r.note = std::move(note);
  return r;
}

StateVector closed_state(const SearchParams& p, double t) {
  return embed_full(evolve_closed_form(p, t), p);
}

StateVector random_state(std::mt19937_64& rng, Index dim) {
  std::normal_distribution<double> dist(0.0, 1.0);
  StateVector psi(dim);
  for (Index i = 0; i < dim; ++i) psi(i) = Complex(dist(rng), dist(rng));
  psi.normalize();
  return psi;
}

// The |1 vs rest| concurrence of a pure state has kinks where it touches
// zero; finite differences are only meaningful away from them.
bool near_kink(double t, double t_m, double spacing, int width) {
  const double kinks[] = {0.0, t_m, 2.0 * t_m};
  for (double k : kinks)
    if (std::abs(t - k) < width * spacing) return true;
  return false;
}

CheckResult check_oracle_trace_distance(const VerifyOptions& o) {
  double worst = 0.0;
  IntegratorOptions io;
  io.dt = o.integrator_dt;
  io.error_injection = o.error_injection;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    const std::vector<double> times = time_grid(2.0 * peak_time(p), o.grid_steps);
    const std::vector<StateVector> numeric = evolve_numeric_grid(p, times, io);
    for (std::size_t i = 0; i < times.size(); ++i)
      worst = std::max(worst, trace_distance_pure(closed_state(p, times[i]), numeric[i]));
  }
  return judge("oracle_trace_distance", worst, 1e-6, "closed form vs fixed-step integrator");
}

CheckResult check_success_peak(const VerifyOptions& o) {
  double worst = 0.0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    worst = std::max(worst, std::abs(success_probability(p, 0.0) - 1.0 / p.dim));
    worst = std::max(worst, std::max(0.0, 1.0 - success_probability(p, peak_time(p))));
    for (double t : time_grid(2.0 * peak_time(p), o.grid_steps)) {
      const double prob = success_probability(p, t);
      worst = std::max(worst, std::max(prob - 1.0, -prob));
    }
  }
  return judge("success_peak", worst, 1e-10, "P(0) = 1/N, P(t_m) = 1, P in [0, 1]");
}

std::vector<CheckResult> check_conservation(const VerifyOptions& o) {
  double worst_norm = 0.0;
  double worst_energy = 0.0;
  IntegratorOptions io;
  io.dt = o.integrator_dt;
  io.error_injection = o.error_injection;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    const std::vector<double> times = time_grid(2.0 * peak_time(p), o.grid_steps);
    const std::vector<StateVector> states = evolve_numeric_grid(p, times, io);
    const double e0 = states.front().dot(apply_hamiltonian(p, states.front())).real();
    for (const StateVector& psi : states) {
      worst_norm = std::max(worst_norm, std::abs(psi.squaredNorm() - 1.0));
      const double e = psi.dot(apply_hamiltonian(p, psi)).real();
      worst_energy = std::max(worst_energy, std::abs(e - e0));
    }
  }
  return {judge("norm_conservation", worst_norm, 1e-9),
          judge("energy_conservation", worst_energy, 1e-8, "<H> drift along the trajectory")};
}

CheckResult check_coherence_identity(const VerifyOptions& o) {
  double worst = 0.0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    for (double t : time_grid(2.0 * peak_time(p), o.grid_steps)) {
      const TwoLevelState st = evolve_closed_form(p, t);
      const double prob = success_probability(p, t);
      DensityMatrix rho(2, 2);
      rho(0, 0) = std::norm(st.alpha);
      rho(0, 1) = st.alpha * std::conj(st.beta);
      rho(1, 0) = std::conj(rho(0, 1));
      rho(1, 1) = std::norm(st.beta);
      const CoherencePair c = coherence_closed_form(p, t, o.log_base);
      worst = std::max(worst, std::abs(c.l1 - l1_coherence(rho)));
      worst = std::max(worst, std::abs(c.l1 - l1_from_probability(prob)));
      worst = std::max(worst, std::abs(c.rel_ent - rel_ent_coherence(rho, o.log_base)));
      worst = std::max(worst, std::abs(c.rel_ent - rel_ent_from_probability(prob, o.log_base)));
    }
  }
  return judge("coherence_identity", worst, 1e-10, "closed forms vs density-matrix measures");
}

CheckResult check_coherence_min_at_peak(const VerifyOptions& o) {
  double worst = 0.0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    const std::vector<double> times = time_grid(2.0 * peak_time(p), o.grid_steps);
    std::size_t i_p = 0, i_l1 = 0, i_re = 0;
    double best_p = -1.0, best_l1 = 2.0 * p.dim, best_re = 1e300;
    for (std::size_t i = 0; i < times.size(); ++i) {
      const double prob = success_probability(p, times[i]);
      const CoherencePair c = coherence_closed_form(p, times[i], o.log_base);
      if (prob > best_p) { best_p = prob; i_p = i; }
      if (c.l1 < best_l1) { best_l1 = c.l1; i_l1 = i; }
      if (c.rel_ent < best_re) { best_re = c.rel_ent; i_re = i; }
    }
    const auto gap = [i_p](std::size_t i) {
      return static_cast<double>(i > i_p ? i - i_p : i_p - i);
    };
    worst = std::max({worst, gap(i_l1), gap(i_re)});
  }
  return judge("coherence_min_at_peak", worst, 1.0, "grid distance between argmin C and argmax P");
}

CheckResult check_full_basis_l1(const VerifyOptions& o) {
  double worst = 0.0;
  const int stride = std::max(1, o.grid_steps / 100);
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    const std::vector<double> times = time_grid(2.0 * peak_time(p), o.grid_steps);
    for (std::size_t i = 0; i < times.size(); i += static_cast<std::size_t>(stride)) {
      const StateVector psi = closed_state(p, times[i]);
      double measured;
      if (p.dim <= 256) {
        measured = l1_coherence(outer(psi));
      } else {
        const double abs_sum = psi.cwiseAbs().sum();
        measured = abs_sum * abs_sum - psi.squaredNorm();
      }
      worst = std::max(worst, std::abs(measured - l1_full_basis_closed(p, times[i])));
    }
    worst = std::max(worst, std::abs(l1_full_basis_closed(p, 0.0) - (p.dim - 1.0)));
    worst = std::max(worst, std::abs(l1_full_basis_closed(p, peak_time(p))));
  }
  return judge("full_basis_l1", worst, 1e-9, "computational-basis l1 vs closed form");
}

CheckResult check_rdm_eigvals(const VerifyOptions& o) {
  const int lo = std::max(2, o.n_min);
  if (lo > o.n_max) return skipped("rdm_eigvals", "needs n >= 2");
  double worst = 0.0;
  const int stride = std::max(1, o.grid_steps / 200);
  for (int n = lo; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    const std::vector<double> times = time_grid(2.0 * peak_time(p), o.grid_steps);
    for (std::size_t i = 0; i < times.size(); i += static_cast<std::size_t>(stride)) {
      const DensityMatrix rdm =
          reduced_density_matrix(closed_state(p, times[i]), Bipartition(n, {0}));
      const std::vector<double> eigs = hermitian_eigvals(rdm);
      const std::array<double, 2> closed = rdm_eigvals_closed(p, times[i]);
      worst = std::max(worst, std::abs(eigs[0] - closed[0]));
      worst = std::max(worst, std::abs(eigs[1] - closed[1]));
      worst = std::max(
          worst, (rdm - single_qubit_rdm_closed(p, times[i])).cwiseAbs().maxCoeff());
    }
    const std::array<double, 2> at0 = rdm_eigvals_closed(p, 0.0);
    worst = std::max(worst, std::abs(at0[0] - 1.0));
    worst = std::max(worst, std::abs(at0[1]));
  }
  return judge("rdm_eigvals", worst, 1e-10, "single-qubit spectrum, closed vs traced out");
}

CheckResult check_entropy_symmetry(const VerifyOptions& o, std::mt19937_64& rng) {
  const int lo = std::max(2, o.n_min);
  if (lo > o.n_max) return skipped("entropy_symmetry", "needs n >= 2");
  double worst = 0.0;
  for (int n = lo; n <= o.n_max; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const StateVector psi = random_state(rng, Index{1} << n);
      std::uniform_int_distribution<int> size_dist(1, n - 1);
      const int k = size_dist(rng);
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<int> kept(all.begin(), all.begin() + k);
      std::sort(kept.begin(), kept.end());
      const Bipartition part(n, kept);
      const Bipartition rest(n, part.complement());
      worst = std::max(worst, std::abs(entanglement_entropy(psi, part, o.log_base) -
                                       entanglement_entropy(psi, rest, o.log_base)));
    }
  }
  return judge("entropy_symmetry", worst, 1e-9, "random pure states, both cut sides");
}

CheckResult check_concurrence_vs_tangle(const VerifyOptions& o) {
  const int lo = std::max(2, o.n_min);
  if (lo > o.n_max) return skipped("concurrence_vs_tangle", "needs n >= 2");
  double worst = 0.0;
  const int stride = std::max(1, o.grid_steps / 200);
  for (int n = lo; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    const std::vector<double> times = time_grid(2.0 * peak_time(p), o.grid_steps);
    for (std::size_t i = 0; i < times.size(); i += static_cast<std::size_t>(stride)) {
      const StateVector psi = closed_state(p, times[i]);
      const Bipartition part(n, {0});
      const double c = concurrence_one_vs_rest(psi, n);
      worst = std::max(worst, std::abs(c - concurrence_one_vs_rest_closed(p, times[i])));
      const double tau = tangle(psi, part);
      worst = std::max(worst, std::abs(tau - c * c));
      const DensityMatrix rdm = reduced_density_matrix(psi, part);
      const double det4 = 4.0 * (rdm(0, 0) * rdm(1, 1) - rdm(0, 1) * rdm(1, 0)).real();
      worst = std::max(worst, std::abs(tau - std::max(0.0, det4)));
    }
  }
  return judge("concurrence_vs_tangle", worst, 1e-10, "Schmidt, purity, det routes vs closed");
}

std::vector<CheckResult> check_pair_concurrence(const VerifyOptions& o) {
  const int lo = std::max(2, o.n_min);
  if (lo > o.n_max)
    return {skipped("pair_concurrence", "needs n >= 2"),
            skipped("pair_symmetry", "needs n >= 3")};
  double worst = 0.0;
  const int stride = std::max(1, o.grid_steps / 50);
  for (int n = lo; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    const std::vector<double> times = time_grid(2.0 * peak_time(p), o.grid_steps);
    for (std::size_t i = 0; i < times.size(); i += static_cast<std::size_t>(stride)) {
      const StateVector psi = closed_state(p, times[i]);
      const double closed = pair_concurrence_closed(p, times[i]);
      for (int j = 1; j < n; ++j) {
        const DensityMatrix rho =
            n == 2 ? outer(psi) : reduced_density_matrix(psi, Bipartition(n, {0, j}));
        worst = std::max(worst, std::abs(wootters_concurrence(rho) - closed));
      }
    }
  }
  CheckResult pairs = judge("pair_concurrence", worst, 1e-9, "Wootters vs closed form, all j");

  const int lo3 = std::max(3, o.n_min);
  if (lo3 > o.n_max) return {pairs, skipped("pair_symmetry", "needs n >= 3")};
  double spread = 0.0;
  for (int n = lo3; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    const double t_m = peak_time(p);
    for (double f : {0.3, 0.7, 1.3}) {
      const StateVector psi = closed_state(p, f * t_m);
      double lo_c = 2.0, hi_c = -1.0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          const double c =
              wootters_concurrence(reduced_density_matrix(psi, Bipartition(n, {a, b})));
          lo_c = std::min(lo_c, c);
          hi_c = std::max(hi_c, c);
        }
      spread = std::max(spread, hi_c - lo_c);
    }
  }
  return {pairs, judge("pair_symmetry", spread, 1e-9, "all qubit pairs agree")};
}

CheckResult check_rate_finite_difference(const VerifyOptions& o) {
  const int lo = std::max(2, o.n_min);
  if (lo > o.n_max) return skipped("rate_finite_difference", "needs n >= 2");
  double worst = 0.0;
  const double h = 1e-5;
  const int stride = std::max(1, o.grid_steps / 100);
  for (int n = lo; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    const double t_m = peak_time(p);
    const std::vector<double> times = time_grid(2.0 * t_m, o.grid_steps);
    const double spacing = 2.0 * t_m / o.grid_steps;
    for (std::size_t i = 0; i < times.size(); i += static_cast<std::size_t>(stride)) {
      const double t = times[i];
      if (near_kink(t, t_m, spacing, 10)) continue;
      const double c_plus = concurrence_one_vs_rest(closed_state(p, t + h), n);
      const double c_minus = concurrence_one_vs_rest(closed_state(p, t - h), n);
      const double fd = (c_plus - c_minus) / (2.0 * h);
      const double phase = std::sin(2.0 * p.energy * t / std::sqrt(static_cast<double>(p.dim)));
      const double expected = (phase < 0.0 ? -1.0 : 1.0) * concurrence_rate_closed(p, t);
      worst = std::max(worst, std::abs(fd - expected));
    }
  }
  return judge("rate_finite_difference", worst, 1e-6, "d/dt concurrence vs closed rate");
}

std::vector<CheckResult> check_monogamy(const VerifyOptions& o) {
  const int lo = std::max(2, o.n_min);
  if (lo > o.n_max)
    return {skipped("monogamy_nonneg", "needs n >= 2"),
            skipped("monogamy_closed_vs_ckw", "needs n >= 2"),
            skipped("monogamy_eof_sq", "needs n >= 2")};
  double worst_neg = 0.0, worst_closed = 0.0, worst_eof = 0.0;
  const int stride = std::max(1, o.grid_steps / 25);
  for (int n = lo; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    const std::vector<double> times = time_grid(2.0 * peak_time(p), o.grid_steps);
    for (std::size_t i = 0; i < times.size(); i += static_cast<std::size_t>(stride)) {
      const MonogamyReport rep = ckw_check(closed_state(p, times[i]), n, o.log_base);
      worst_neg = std::max({worst_neg, -rep.delta_c, -rep.delta_eof_sq});
      worst_closed = std::max(worst_closed,
                              std::abs(rep.delta_c - monogamy_score_closed(p, times[i])));
      const double e_rest =
          eof_from_concurrence(concurrence_one_vs_rest_closed(p, times[i]), o.log_base);
      const double e_pair =
          eof_from_concurrence(pair_concurrence_closed(p, times[i]), o.log_base);
      const double eof_closed = e_rest * e_rest - (n - 1) * e_pair * e_pair;
      worst_eof = std::max(worst_eof, std::abs(rep.delta_eof_sq - eof_closed));
    }
  }
  return {judge("monogamy_nonneg", std::max(0.0, worst_neg), 1e-9,
                "delta_C and delta_EoF^2 stay nonnegative"),
          judge("monogamy_closed_vs_ckw", worst_closed, 1e-8),
          judge("monogamy_eof_sq", worst_eof, 1e-8, "report vs closed-concurrence route")};
}

CheckResult check_wootters_sanity(const VerifyOptions& o, std::mt19937_64& rng) {
  double worst = 0.0;
  StateVector bell(4);
  bell << 1.0 / std::numbers::sqrt2, 0.0, 0.0, 1.0 / std::numbers::sqrt2;
  worst = std::max(worst, std::abs(wootters_concurrence(outer(bell)) - 1.0));

  worst = std::max(worst, wootters_concurrence(DensityMatrix::Identity(4, 4) / 4.0));

  StateVector zero = StateVector::Zero(4);
  zero(0) = 1.0;
  worst = std::max(worst, wootters_concurrence(outer(zero)));

  for (int rep = 0; rep < 3; ++rep) {
    const StateVector a = random_state(rng, 2), b = random_state(rng, 2);
    StateVector prod(4);
    prod << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    worst = std::max(worst, wootters_concurrence(outer(prod)));
  }

  StateVector plus(4);
  plus.setConstant(0.5);
  worst = std::max(worst, wootters_concurrence(0.5 * outer(zero) + 0.5 * outer(plus)));

  StateVector ghz = StateVector::Zero(8);
  ghz(0) = ghz(7) = 1.0 / std::numbers::sqrt2;
  const MonogamyReport ghz_rep = ckw_check(ghz, 3, o.log_base);
  worst = std::max(worst, ghz_rep.sum_pair_c_sq);
  worst = std::max(worst, std::abs(ghz_rep.delta_c - 1.0));

  StateVector w3 = StateVector::Zero(8);
  w3(1) = w3(2) = w3(4) = 1.0 / std::sqrt(3.0);
  const MonogamyReport w_rep = ckw_check(w3, 3, o.log_base);
  worst = std::max(worst, std::abs(w_rep.c_sq_one_vs_rest - 8.0 / 9.0));
  worst = std::max(worst, std::abs(std::sqrt(w_rep.sum_pair_c_sq / 2.0) - 2.0 / 3.0));
  worst = std::max(worst, std::abs(w_rep.delta_c));

  return judge("wootters_sanity", worst, 1e-9, "Bell, mixed, product, GHZ, W");
}

CheckResult check_grover_amplitude(const VerifyOptions& o) {
  double worst = 0.0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(p.dim)));
    const int k_max = 2 * optimal_iterations(p.dim) + 4;
    StateVector psi = start_state(p);
    for (int k = 0; k <= k_max; ++k) {
      const Complex amp = psi(p.marked);
      worst = std::max(worst, std::abs(amp.real() - std::sin((2 * k + 1) * theta)));
      worst = std::max(worst, std::abs(amp.imag()));
      if (k < k_max) psi = grover_step(psi, p.marked);
    }
  }
  return judge("grover_amplitude", worst, 1e-10, "<w|psi_k> = sin((2k+1) theta)");
}

CheckResult check_grover_success_sign(const VerifyOptions& o) {
  double worst = 0.0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const SearchParams p = SearchParams::uniform_overlap(n, o.energy);
    const int k_star = optimal_iterations(p.dim);
    const GroverTrace trace = grover_trace(p, k_star + 2);
    const double target = 1.0 - 1.0 / static_cast<double>(p.dim);
    worst = std::max(worst, std::max(0.0, target - trace.rows[static_cast<std::size_t>(k_star)]
                                                      .success_prob));
    if (n >= 2) {
      const std::vector<double> dc = trace.delta_c();
      worst = std::max(worst, std::max(0.0, dc[static_cast<std::size_t>(k_star - 1)]));
      worst = std::max(worst, std::max(0.0, -dc[static_cast<std::size_t>(k_star)]));
    }
    if (p.dim == 4) {
      worst = std::max(worst, std::abs(trace.rows[1].success_prob - 1.0));
      worst = std::max(worst, trace.rows[1].concurrence);
    }
  }
  return judge("grover_success_sign", worst, 1e-9,
               "peak success and concurrence turning point");
}

CheckResult check_sweep_determinism(const VerifyOptions& o) {
  RunConfig cfg;
  cfg.n_qubits = std::clamp(o.n_max, 1, 3);
  cfg.energy = o.energy;
  cfg.steps = std::min(o.grid_steps, 200);
  cfg.log_base = o.log_base;
  bool same = true;
  const auto render = [&cfg]() {
    const SearchParams p = params_from_config(cfg);
    const double t_max = 2.0 * peak_time(p);
    const std::vector<SweepRecord> records =
        compute_sweep(p, t_max, cfg.steps, cfg.log_base);
    const Table table = sweep_table(records);
    return to_csv(table) + to_json(table, cfg, p);
  };
  same = same && render() == render();
  for (const char* id : {"1", "2", "3a", "3b", "4", "5"}) {
    FigureRequest req;
    req.steps = std::min(o.grid_steps, 200);
    const auto render_fig = [&]() {
      const RunConfig fig_cfg = figure_config(id, req);
      return to_csv(figure_table(id, fig_cfg));
    };
    same = same && render_fig() == render_fig();
  }
  return judge("sweep_determinism", same ? 0.0 : 1.0, 0.0, "repeated renders byte-identical");
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  if (opts.n_min < 1 || opts.n_max < opts.n_min || opts.n_max > 14)
    throw std::invalid_argument("verification range must satisfy 1 <= n_min <= n_max <= 14");
  if (opts.grid_steps < 10) throw std::invalid_argument("grid_steps must be at least 10");
  std::mt19937_64 rng(opts.seed);

  std::vector<CheckResult> results;
  results.push_back(check_oracle_trace_distance(opts));
  results.push_back(check_success_peak(opts));
  for (CheckResult& r : check_conservation(opts)) results.push_back(std::move(r));
  results.push_back(check_coherence_identity(opts));
  results.push_back(check_coherence_min_at_peak(opts));
  results.push_back(check_full_basis_l1(opts));
  results.push_back(check_rdm_eigvals(opts));
  results.push_back(check_entropy_symmetry(opts, rng));
  results.push_back(check_concurrence_vs_tangle(opts));
  for (CheckResult& r : check_pair_concurrence(opts)) results.push_back(std::move(r));
  results.push_back(check_rate_finite_difference(opts));
  for (CheckResult& r : check_monogamy(opts)) results.push_back(std::move(r));
  results.push_back(check_wootters_sanity(opts, rng));
  results.push_back(check_grover_amplitude(opts));
  results.push_back(check_grover_success_sign(opts));
  results.push_back(check_sweep_determinism(opts));
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (r.status == CheckStatus::fail) return false;
  return true;
}

std::string format_check_table(const std::vector<CheckResult>& results) {
  std::string out;
  char line[256];
  int passed = 0, failed = 0, skipped_n = 0;
  for (const CheckResult& r : results) {
    const char* status = r.status == CheckStatus::pass   ? "PASS"
                         : r.status == CheckStatus::fail ? "FAIL"
                                                         : "SKIP";
    if (r.status == CheckStatus::skip) {
      std::snprintf(line, sizeof(line), "%-26s %-4s %-24s %s\n", r.name.c_str(), status, "",
                    r.note.c_str());
    } else {
      char devs[64];
      std::snprintf(devs, sizeof(devs), "%.3e (tol %.1e)", r.max_dev, r.tol);
      std::snprintf(line, sizeof(line), "%-26s %-4s %-24s %s\n", r.name.c_str(), status, devs,
                    r.note.c_str());
    }
    out += line;
    passed += r.status == CheckStatus::pass;
    failed += r.status == CheckStatus::fail;
    skipped_n += r.status == CheckStatus::skip;
  }
  std::snprintf(line, sizeof(line), "%d passed, %d failed, %d skipped\n", passed, failed,
                skipped_n);
  out += line;
  return out;
}

} // namespace agsim
