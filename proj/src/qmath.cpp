#include "agsim/qmath.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace agsim {

namespace {

// Places the bits of a kept-subsystem index and a complement index into one
// full basis index, qubit 0 first (most significant).
std::vector<Index> scatter_table(int n, const std::vector<int>& qubits) {
  const int k = static_cast<int>(qubits.size());
  std::vector<Index> table(Index{1} << k);
  for (Index pattern = 0; pattern < static_cast<Index>(table.size()); ++pattern) {
    Index idx = 0;
    for (int j = 0; j < k; ++j) {
      if ((pattern >> (k - 1 - j)) & 1) idx |= Index{1} << (n - 1 - qubits[j]);
    }
    table[pattern] = idx;
  }
  return table;
}

double entropy_from_probs(const std::vector<double>& probs, double log_base) {
  double s = 0.0;
  for (double p : probs) {
    if (p < -kEigClamp) throw std::domain_error("negative probability beyond tolerance");
    if (p > 1e-15) s -= (log_base == 2.0) ? p * std::log2(p) : p * std::log(p) / std::log(log_base);
  }
  return s;
}

const Matrix& spin_flip_matrix() {
  static const Matrix f = [] {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return f;
}

} // namespace

Bipartition::Bipartition(int n, std::vector<int> kept_qubits)
    : n_qubits(n), kept(std::move(kept_qubits)) {
  if (n < 1) throw std::invalid_argument("bipartition needs at least one qubit");
  if (kept.empty()) throw std::invalid_argument("kept set is empty");
  if (static_cast<int>(kept.size()) >= n)
    throw std::invalid_argument("kept set must be a proper subset");
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] < 0 || kept[i] >= n) throw std::invalid_argument("kept qubit out of range");
    if (i > 0 && kept[i] <= kept[i - 1])
      throw std::invalid_argument("kept qubits must be strictly increasing");
  }
}

std::vector<int> Bipartition::complement() const {
  std::vector<int> rest;
  rest.reserve(n_rest());
  std::size_t j = 0;
  for (int q = 0; q < n_qubits; ++q) {
    if (j < kept.size() && kept[j] == q) {
      ++j;
    } else {
      rest.push_back(q);
    }
  }
  return rest;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("kron expects square matrices");
  if (!is_power_of_two(a.rows()) || !is_power_of_two(b.rows()))
    throw std::invalid_argument("kron expects power-of-two dimensions");
  return Eigen::kroneckerProduct(a, b);
}

DensityMatrix outer(const StateVector& psi) {
  if (std::abs(psi.norm() - 1.0) > kNormTol)
    throw std::invalid_argument("outer expects a normalized state");
  return psi * psi.adjoint();
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Bipartition& part) {
  const Index dim = Index{1} << part.n_qubits;
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("density matrix does not match the bipartition size");
  const auto ks = scatter_table(part.n_qubits, part.kept);
  const auto rs = scatter_table(part.n_qubits, part.complement());
  const Index dk = static_cast<Index>(ks.size());
  DensityMatrix out = DensityMatrix::Zero(dk, dk);
  for (Index a = 0; a < dk; ++a)
    for (Index b = 0; b < dk; ++b) {
      Complex acc = 0.0;
      for (Index r : rs) acc += rho(ks[a] + r, ks[b] + r);
      out(a, b) = acc;
    }
  return out;
}

DensityMatrix reduced_density_matrix(const StateVector& psi, const Bipartition& part) {
  const Index dim = Index{1} << part.n_qubits;
  if (psi.size() != dim) throw std::invalid_argument("state does not match the bipartition size");
  const auto ks = scatter_table(part.n_qubits, part.kept);
  const auto rs = scatter_table(part.n_qubits, part.complement());
  const Index dk = static_cast<Index>(ks.size());
  DensityMatrix out = DensityMatrix::Zero(dk, dk);
  for (Index a = 0; a < dk; ++a)
    for (Index b = a; b < dk; ++b) {
      Complex acc = 0.0;
      for (Index r : rs) acc += psi(ks[a] + r) * std::conj(psi(ks[b] + r));
      out(a, b) = acc;
      if (b != a) out(b, a) = std::conj(acc);
    }
  return out;
}

std::vector<double> hermitian_eigvals(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigvals expects a square matrix");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw std::invalid_argument("matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> vals(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + m.rows());
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

Matrix psd_sqrt(const DensityMatrix& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw std::invalid_argument("matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
  Eigen::VectorXd vals = solver.eigenvalues();
  for (Index i = 0; i < vals.size(); ++i) {
    if (vals[i] < -kPsdTol) throw std::domain_error("matrix has a negative eigenvalue beyond tolerance");
    vals[i] = std::sqrt(std::max(vals[i], 0.0));
  }
  return solver.eigenvectors() * vals.asDiagonal() * solver.eigenvectors().adjoint();
}

double von_neumann_entropy(const DensityMatrix& rho, double log_base) {
  auto vals = hermitian_eigvals(rho);
  for (double& v : vals) {
    if (v < 0.0 && v >= -kEigClamp) v = 0.0;
  }
  return entropy_from_probs(vals, log_base);
}

double binary_entropy(double p, double log_base) {
  if (p < -1e-12 || p > 1.0 + 1e-12) throw std::domain_error("probability outside [0, 1]");
  p = std::clamp(p, 0.0, 1.0);
  return entropy_from_probs({p, 1.0 - p}, log_base);
}

DensityMatrix spin_flip(const DensityMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("spin flip is defined for two-qubit matrices");
  const Matrix& f = spin_flip_matrix();
  return f * rho.conjugate() * f;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("trace distance expects equal dimensions");
  auto vals = hermitian_eigvals(a - b);
  double sum = 0.0;
  for (double v : vals) sum += std::abs(v);
  return 0.5 * sum;
}

double trace_distance_pure(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("trace distance expects equal dimensions");
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw std::invalid_argument("zero vector");
  const double ov = std::abs(a.dot(b)) / (na * nb);
  return std::sqrt(std::max(0.0, 1.0 - ov * ov));
}

} // namespace agsim
