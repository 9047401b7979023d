#include "agsim/monogamy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "agsim/entanglement.hpp"
#include "agsim/qmath.hpp"

namespace agsim {

namespace {

struct PairData {
  double tangle_one_rest;
  std::vector<double> pair_concurrences; // qubit 0 with each of 1..n-1
};

PairData collect_pairs(const StateVector& psi, int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("monogamy needs at least two qubits");
  if (psi.size() != (Index{1} << n_qubits))
    throw std::invalid_argument("state length does not match the qubit count");
  PairData out;
  out.tangle_one_rest = tangle(psi, Bipartition(n_qubits, {0}));
  out.pair_concurrences.reserve(static_cast<std::size_t>(n_qubits - 1));
  for (int j = 1; j < n_qubits; ++j) {
    const DensityMatrix rho =
        n_qubits == 2 ? outer(psi) : reduced_density_matrix(psi, Bipartition(n_qubits, {0, j}));
    out.pair_concurrences.push_back(wootters_concurrence(rho));
  }
  return out;
}

} // namespace

MonogamyReport ckw_check(const StateVector& psi, int n_qubits, double log_base) {
  const PairData d = collect_pairs(psi, n_qubits);
  MonogamyReport r;
  r.c_sq_one_vs_rest = d.tangle_one_rest;
  r.sum_pair_c_sq = 0.0;
  double sum_pair_eof_sq = 0.0;
  for (double c : d.pair_concurrences) {
    r.sum_pair_c_sq += c * c;
    const double e = eof_from_concurrence(c, log_base);
    sum_pair_eof_sq += e * e;
  }
  r.delta_c = r.c_sq_one_vs_rest - r.sum_pair_c_sq;
  const double e_rest = eof_from_concurrence(std::sqrt(d.tangle_one_rest), log_base);
  r.delta_eof_sq = e_rest * e_rest - sum_pair_eof_sq;
  return r;
}

double monogamy_score_closed(const SearchParams& p, double t) {
  if (!p.uniform)
    throw std::invalid_argument("monogamy_score_closed requires the uniform overlap 1/sqrt(N)");
  if (p.dim < 4)
    throw std::invalid_argument("monogamy_score_closed needs at least two qubits");
  const double n = static_cast<double>(p.dim);
  const double prefactor = (n - 2.0) / (2.0 * n) - std::log2(n / 2.0) / n;
  const double s = std::sin(2.0 * p.energy * t / std::sqrt(n));
  return prefactor * s * s;
}

double monogamy_score_eof_sq(const StateVector& psi, int n_qubits, double log_base) {
  return ckw_check(psi, n_qubits, log_base).delta_eof_sq;
}

double monogamy_delta_unsquared(const StateVector& psi, int n_qubits) {
  const PairData d = collect_pairs(psi, n_qubits);
  double sum = 0.0;
  for (double c : d.pair_concurrences) sum += c;
  return concurrence_one_vs_rest(psi, n_qubits) - sum;
}

} // namespace agsim
