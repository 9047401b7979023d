#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace agsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using DensityMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

// Shared tolerances. Rejection thresholds are deliberately looser than the
// accuracy the own routines deliver, so valid user input never trips them.
inline constexpr double kNormTol = 1e-8;       // unnormalized state rejection
inline constexpr double kHermitianTol = 1e-10; // non-Hermitian input rejection
inline constexpr double kPsdTol = 1e-8;        // negative eigenvalue rejection
inline constexpr double kEigClamp = 1e-10;     // eigenvalues in [-kEigClamp, 0) count as 0

inline bool is_power_of_two(Index n) { return n > 0 && (n & (n - 1)) == 0; }

/// Number of qubits for a dimension that is a power of two.
inline int qubit_count(Index dim) {
  if (!is_power_of_two(dim)) throw std::invalid_argument("dimension is not a power of two");
  int n = 0;
  while ((Index{1} << n) < dim) ++n;
  return n;
}

/// A cut of an n-qubit register into kept qubits and their complement.
/// Qubit 0 is the most significant bit of the computational basis index.
struct Bipartition {
  int n_qubits;
  std::vector<int> kept; // strictly increasing, non-empty, proper subset

  Bipartition(int n, std::vector<int> kept_qubits);

  int n_kept() const { return static_cast<int>(kept.size()); }
  int n_rest() const { return n_qubits - n_kept(); }
  std::vector<int> complement() const;
};

} // namespace agsim
