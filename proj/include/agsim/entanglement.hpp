#pragma once

#include <array>

#include "agsim/analog_search.hpp"
#include "agsim/types.hpp"

namespace agsim {

/// Closed-form reduced density matrix of any single qubit of the evolved
/// uniform-overlap state (marked index 0 keeps all qubits equivalent).
/// Requires uniform overlap and N >= 4.
DensityMatrix single_qubit_rdm_closed(const SearchParams& p, double t);

/// Closed-form eigenvalues of that matrix, descending:
/// (2N +- sqrt(N ((N-2) cos(4Et/sqrt(N)) + 3N + 2))) / (4N).
/// Requires uniform overlap.
std::array<double, 2> rdm_eigvals_closed(const SearchParams& p, double t);

/// Entropy of the reduced state on part.kept.
double entanglement_entropy(const StateVector& psi, const Bipartition& part,
                            double log_base = 2.0);

/// 2 (1 - Tr rho_A^2) for the reduced state on part.kept of a pure state.
double tangle(const StateVector& psi, const Bipartition& part);

/// Concurrence of qubit 0 against the rest, 2 sigma_1 sigma_2 with sigma the
/// singular values of the 2 x N/2 amplitude matrix. Agrees with sqrt(tangle)
/// but stays accurate to machine precision where the concurrence vanishes,
/// where the tangle route only reaches sqrt(eps).
double concurrence_one_vs_rest(const StateVector& psi, int n_qubits);

/// sqrt((N-2)/(2N)) |sin(2Et/sqrt(N))|, the one-qubit-vs-rest concurrence of
/// the evolved uniform-overlap state. Returns 0 at N = 2.
double concurrence_one_vs_rest_closed(const SearchParams& p, double t);

/// (E sqrt(2(N-2)) / N) cos(2Et/sqrt(N)), the derivative of the unsigned
/// form above; on stretches where sin(2Et/sqrt(N)) < 0 the derivative of the
/// |sin| expression is its negative.
double concurrence_rate_closed(const SearchParams& p, double t);

/// The four Wootters lambdas of a two-qubit density matrix, descending.
struct PairEigs {
  std::array<double, 4> lambdas;
};

/// Lambdas computed as the singular values of sqrt(rho) F conj(sqrt(rho))
/// with F = sy x sy. Identical to the descending square roots of
/// eig(rho * spin_flip(rho)); the product form keeps the rank-deficient
/// directions at machine zero instead of sqrt(machine zero).
PairEigs pair_eigs(const DensityMatrix& rho);

/// max(lambda1 - lambda2 - lambda3 - lambda4, 0).
double wootters_concurrence(const DensityMatrix& rho);

/// (1/sqrt(N)) |sin(2Et/sqrt(N))|, the concurrence of any qubit pair of the
/// evolved uniform-overlap state. Requires uniform overlap and N >= 4.
double pair_concurrence_closed(const SearchParams& p, double t);

/// Entanglement of formation from a concurrence value:
/// H((1 + sqrt(1 - C^2)) / 2) with H the binary entropy.
double eof_from_concurrence(double c, double log_base = 2.0);

} // namespace agsim
