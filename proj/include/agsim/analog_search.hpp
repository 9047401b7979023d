#pragma once

#include <vector>

#include "agsim/types.hpp"

namespace agsim {

/// Parameters of the continuous-time search Hamiltonian
/// H = E |w><w| + E |s><s| on N = 2^n basis states, where |s> is the start
/// state and x = <s|w> is real and positive.
struct SearchParams {
  int n_qubits;
  Index dim;
  double energy;
  double overlap;    // x
  double overlap_sq; // x^2, exactly 1/N for uniform params
  int marked;        // index of |w>
  bool uniform;      // overlap == 1/sqrt(dim)

  /// Uniform start state, x = 1/sqrt(N).
  static SearchParams uniform_overlap(int n_qubits, double energy, int marked = 0);

  /// Explicit overlap x in (0, 1]. The start state places amplitude x on the
  /// marked state and spreads the remainder uniformly.
  static SearchParams with_overlap(int n_qubits, double energy, double overlap, int marked = 0);
};

/// Coefficients of the evolved state on |w> and on the residual state |r>,
/// the normalized component of |s> orthogonal to |w>.
struct TwoLevelState {
  Complex alpha; // on |w>
  Complex beta;  // on |r>
};

/// Dense N x N Hamiltonian. Intended for small N; the integrator never
/// builds it.
Matrix hamiltonian_full(const SearchParams& p);

/// 2x2 Hamiltonian in the {|w>, |r>} basis,
/// E [[1+x^2, x sqrt(1-x^2)], [x sqrt(1-x^2), 1-x^2]].
Matrix hamiltonian_2d(const SearchParams& p);

/// Exact evolution of |s> under H for time t:
/// alpha = e^{-iEt} (x cos(Ext) - i sin(Ext)), beta = e^{-iEt} sqrt(1-x^2) cos(Ext).
TwoLevelState evolve_closed_form(const SearchParams& p, double t);

/// P(t) = sin^2(Ext) + x^2 cos^2(Ext).
double success_probability(const SearchParams& p, double t);

/// First success maximum, t_m = pi / (2 E x).
double peak_time(const SearchParams& p);

/// The start state |s> as a full N-dimensional vector.
StateVector start_state(const SearchParams& p);

/// Embed two-level coefficients into the N-dimensional space: amplitude
/// alpha on the marked state, beta / sqrt(N-1) on every other basis state.
StateVector embed_full(const TwoLevelState& s, const SearchParams& p);

/// H |psi> without forming the dense Hamiltonian.
StateVector apply_hamiltonian(const SearchParams& p, const StateVector& psi);

struct IntegratorOptions {
  double dt = 0.0;              // step size; 0 selects 1e-3 / energy
  double error_injection = 0.0; // test hook: per-step phase kick on the marked amplitude
};

/// Fixed-step fourth-order integration of i d|psi>/dt = H|psi> from |s>.
/// Rejects dt <= 0 after defaulting, dt > t for t > 0, and
/// dt * E * sqrt(N) > 0.1. Norm drift beyond 1e-9 raises.
StateVector evolve_numeric(const SearchParams& p, double t, const IntegratorOptions& opts = {});

/// One continuous integration pass that records the state at each requested
/// time. Times must be non-negative and non-decreasing.
std::vector<StateVector> evolve_numeric_grid(const SearchParams& p,
                                             const std::vector<double>& times,
                                             const IntegratorOptions& opts = {});

} // namespace agsim
