#include "agsim/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "agsim/qmath.hpp"

namespace agsim {

namespace {

void require_uniform(const SearchParams& p, const char* what) {
  if (!p.uniform)
    throw std::invalid_argument(std::string(what) + " requires the uniform overlap 1/sqrt(N)");
}

// Phase argument shared by the closed forms below.
double rotation_arg(const SearchParams& p, double t) {
  return 2.0 * p.energy * t / std::sqrt(static_cast<double>(p.dim));
}

} // namespace

DensityMatrix single_qubit_rdm_closed(const SearchParams& p, double t) {
  require_uniform(p, "single_qubit_rdm_closed");
  if (p.dim < 4)
    throw std::invalid_argument("single_qubit_rdm_closed needs at least two qubits");
  const double n = static_cast<double>(p.dim);
  const TwoLevelState st = evolve_closed_form(p, t);
  const Complex g = st.beta / std::sqrt(n - 1.0); // per-state residual amplitude
  const double g2 = std::norm(g);
  DensityMatrix rho(2, 2);
  rho(0, 0) = std::norm(st.alpha) + (n / 2.0 - 1.0) * g2;
  rho(0, 1) = st.alpha * std::conj(g) + (n / 2.0 - 1.0) * g2;
  rho(1, 0) = std::conj(rho(0, 1));
  rho(1, 1) = (n / 2.0) * g2;
  return rho;
}

std::array<double, 2> rdm_eigvals_closed(const SearchParams& p, double t) {
  require_uniform(p, "rdm_eigvals_closed");
  const double n = static_cast<double>(p.dim);
  const double root =
      std::sqrt(n * ((n - 2.0) * std::cos(2.0 * rotation_arg(p, t)) + 3.0 * n + 2.0));
  return {(2.0 * n + root) / (4.0 * n), (2.0 * n - root) / (4.0 * n)};
}

double entanglement_entropy(const StateVector& psi, const Bipartition& part, double log_base) {
  return von_neumann_entropy(reduced_density_matrix(psi, part), log_base);
}

double tangle(const StateVector& psi, const Bipartition& part) {
  const DensityMatrix rho = reduced_density_matrix(psi, part);
  const double purity = (rho * rho).trace().real();
  return std::max(0.0, 2.0 * (1.0 - purity));
}

double concurrence_one_vs_rest(const StateVector& psi, int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("concurrence needs at least two qubits");
  const Index half = Index{1} << (n_qubits - 1);
  if (psi.size() != 2 * half)
    throw std::invalid_argument("state length does not match the qubit count");
  Matrix a(2, half);
  a.row(0) = psi.head(half).transpose();
  a.row(1) = psi.tail(half).transpose();
  Eigen::JacobiSVD<Matrix> svd(a);
  return 2.0 * svd.singularValues()(0) * svd.singularValues()(1);
}

double concurrence_one_vs_rest_closed(const SearchParams& p, double t) {
  require_uniform(p, "concurrence_one_vs_rest_closed");
  const double n = static_cast<double>(p.dim);
  if (p.dim == 2) return 0.0;
  return std::sqrt((n - 2.0) / (2.0 * n)) * std::abs(std::sin(rotation_arg(p, t)));
}

double concurrence_rate_closed(const SearchParams& p, double t) {
  require_uniform(p, "concurrence_rate_closed");
  const double n = static_cast<double>(p.dim);
  return p.energy * std::sqrt(2.0 * (n - 2.0)) / n * std::cos(rotation_arg(p, t));
}

PairEigs pair_eigs(const DensityMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("pair eigenvalues are defined for two-qubit matrices");
  if (std::abs(rho.trace().real() - 1.0) > 1e-6 || std::abs(rho.trace().imag()) > 1e-6)
    throw std::invalid_argument("matrix trace is not 1");
  const Matrix root = psd_sqrt(rho); // rejects non-Hermitian and non-PSD input
  static const Matrix flip = [] {
    Matrix f = Matrix::Zero(4, 4);
    f(0, 3) = -1.0;
    f(1, 2) = 1.0;
    f(2, 1) = 1.0;
    f(3, 0) = -1.0;
    return f;
  }();
  const Matrix m = root * flip * root.conjugate();
  Eigen::JacobiSVD<Matrix> svd(m);
  PairEigs out;
  for (int i = 0; i < 4; ++i) out.lambdas[static_cast<std::size_t>(i)] = svd.singularValues()(i);
  return out;
}

double wootters_concurrence(const DensityMatrix& rho) {
  const auto l = pair_eigs(rho).lambdas;
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double pair_concurrence_closed(const SearchParams& p, double t) {
  require_uniform(p, "pair_concurrence_closed");
  if (p.dim < 4)
    throw std::invalid_argument("pair_concurrence_closed needs at least two qubits");
  const double n = static_cast<double>(p.dim);
  return std::abs(std::sin(rotation_arg(p, t))) / std::sqrt(n);
}

double eof_from_concurrence(double c, double log_base) {
  if (c < -1e-12 || c > 1.0 + 1e-12) throw std::domain_error("concurrence outside [0, 1]");
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)), log_base);
}

} // namespace agsim
