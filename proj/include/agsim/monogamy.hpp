#pragma once

#include "agsim/analog_search.hpp"
#include "agsim/types.hpp"

namespace agsim {

/// Squared-concurrence monogamy balance for qubit 0 of a pure n-qubit state.
struct MonogamyReport {
  double t = 0.0;            // filled by callers that sweep over time
  double c_sq_one_vs_rest;   // tangle of qubit 0 vs the rest
  double sum_pair_c_sq;      // sum over j of wootters_concurrence(rho_0j)^2
  double delta_c;            // c_sq_one_vs_rest - sum_pair_c_sq
  double delta_eof_sq;       // same difference for squared entanglement of formation
};

/// Monogamy balance of qubit 0 against all other qubits. Requires n >= 2.
MonogamyReport ckw_check(const StateVector& psi, int n_qubits, double log_base = 2.0);

/// Closed-form monogamy score of the evolved uniform-overlap state,
/// ((N-2)/(2N) - log2(N/2)/N) sin^2(2Et/sqrt(N)).
/// Identically zero at N = 4. Requires uniform overlap and N >= 4.
double monogamy_score_closed(const SearchParams& p, double t);

/// Squared-EoF monogamy score, EoF(C_0|rest)^2 - sum_j EoF(C_0j)^2.
/// No closed form is known; evaluated from the state.
double monogamy_score_eof_sq(const StateVector& psi, int n_qubits, double log_base = 2.0);

/// Unsquared variant, C_0|rest - sum_j C_0j. Can be negative; kept for
/// completeness and not part of the sweep schema.
double monogamy_delta_unsquared(const StateVector& psi, int n_qubits);

} // namespace agsim
