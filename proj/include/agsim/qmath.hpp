#pragma once

#include <vector>

#include "agsim/types.hpp"

namespace agsim {

/// Kronecker product of two square matrices with power-of-two dimensions.
Matrix kron(const Matrix& a, const Matrix& b);

/// Projector |psi><psi|. Rejects vectors whose norm deviates from 1 by more
/// than kNormTol.
DensityMatrix outer(const StateVector& psi);

/// Partial trace of rho over the complement of part.kept.
DensityMatrix partial_trace(const DensityMatrix& rho, const Bipartition& part);

/// Reduced density matrix of a pure state, computed directly from the
/// amplitudes. Equals partial_trace(outer(psi), part) without forming the
/// full projector.
DensityMatrix reduced_density_matrix(const StateVector& psi, const Bipartition& part);

/// Real eigenvalues of a Hermitian matrix, sorted descending. Rejects input
/// whose anti-Hermitian part exceeds kHermitianTol.
std::vector<double> hermitian_eigvals(const Matrix& m);

/// Hermitian positive-semidefinite square root. Eigenvalues in
/// [-kEigClamp, 0) are clamped to zero; more negative ones are rejected.
Matrix psd_sqrt(const DensityMatrix& rho);

/// -sum lambda_i log(lambda_i) over the spectrum of rho, default log base 2.
double von_neumann_entropy(const DensityMatrix& rho, double log_base = 2.0);

/// -p log p - (1-p) log(1-p); p may deviate from [0,1] by at most 1e-12.
double binary_entropy(double p, double log_base = 2.0);

/// (sy x sy) conj(rho) (sy x sy) for a two-qubit density matrix.
DensityMatrix spin_flip(const DensityMatrix& rho);

/// 1/2 ||a - b||_1 for density matrices.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Trace distance between two pure states, sqrt(1 - |<a|b>|^2); inputs are
/// normalized first so integrator norm drift does not bias the result.
double trace_distance_pure(const StateVector& a, const StateVector& b);

} // namespace agsim
