#include "agsim/grover_discrete.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "agsim/entanglement.hpp"

namespace agsim {

StateVector grover_step(const StateVector& psi, int marked) {
  const Index n = psi.size();
  if (n < 2 || !is_power_of_two(n)) throw std::invalid_argument("state length must be 2^n");
  if (marked < 0 || marked >= n) throw std::invalid_argument("marked index out of range");
  StateVector out = psi;
  out(marked) = -out(marked);
  const Complex mean = out.mean();
  for (Index i = 0; i < n; ++i) out(i) = 2.0 * mean - out(i);
  return out;
}

std::vector<double> GroverTrace::delta_c() const {
  std::vector<double> out;
  if (rows.size() < 2) return out;
  out.reserve(rows.size() - 1);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    out.push_back(rows[i + 1].concurrence - rows[i].concurrence);
  return out;
}

GroverTrace grover_trace(const SearchParams& p, int k_max) {
  if (!p.uniform)
    throw std::invalid_argument("grover_trace requires the uniform start state");
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  GroverTrace trace;
  trace.rows.reserve(static_cast<std::size_t>(k_max) + 1);
  StateVector psi = start_state(p);
  for (int k = 0;; ++k) {
    GroverRow row;
    row.k = k;
    row.success_prob = std::norm(psi(p.marked));
    row.concurrence = p.n_qubits < 2 ? 0.0 : concurrence_one_vs_rest(psi, p.n_qubits);
    trace.rows.push_back(row);
    if (k == k_max) break;
    psi = grover_step(psi, static_cast<int>(p.marked));
  }
  return trace;
}

int optimal_iterations(Index dim) {
  if (dim < 2 || !is_power_of_two(dim)) throw std::invalid_argument("dimension must be 2^n");
  const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(dim)));
  const int k = static_cast<int>(std::lround(std::numbers::pi / (4.0 * theta) - 0.5));
  return std::max(1, k);
}

} // namespace agsim
