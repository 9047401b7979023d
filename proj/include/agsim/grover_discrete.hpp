#pragma once

#include <vector>

#include "agsim/analog_search.hpp"
#include "agsim/types.hpp"

namespace agsim {

/// One Grover iteration: oracle sign flip on the marked state, then
/// inversion about the mean (2|s><s| - 1 with |s> uniform).
StateVector grover_step(const StateVector& psi, int marked);

struct GroverRow {
  int k;
  double success_prob; // |<w|psi_k>|^2
  double concurrence;  // one qubit vs rest; 0 for n = 1
};

struct GroverTrace {
  std::vector<GroverRow> rows;
  /// First differences C(k+1) - C(k); the discrete concurrence rate.
  std::vector<double> delta_c() const;
};

/// Iterates k = 0 .. k_max from the uniform state and records success
/// probability and one-vs-rest concurrence per iteration. Requires uniform
/// overlap and k_max >= 1.
GroverTrace grover_trace(const SearchParams& p, int k_max);

/// Iteration count maximizing the success probability within the first
/// rotation period: round(pi / (4 arcsin(1/sqrt(N))) - 1/2), at least 1.
int optimal_iterations(Index dim);

} // namespace agsim
