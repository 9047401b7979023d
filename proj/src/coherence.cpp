#include "agsim/coherence.hpp"

#include <algorithm>
#include <cmath>

#include "agsim/qmath.hpp"

namespace agsim {

double l1_coherence(const DensityMatrix& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("expected a square matrix");
  return rho.cwiseAbs().sum() - rho.diagonal().cwiseAbs().sum();
}

double rel_ent_coherence(const DensityMatrix& rho, double log_base) {
  std::vector<double> diag(rho.rows());
  for (Index i = 0; i < rho.rows(); ++i) diag[static_cast<std::size_t>(i)] = rho(i, i).real();
  double s_diag = 0.0;
  for (double p : diag) {
    if (p < 0.0 && p >= -kEigClamp) p = 0.0;
    if (p > 1e-15)
      s_diag -= (log_base == 2.0) ? p * std::log2(p) : p * std::log(p) / std::log(log_base);
  }
  return s_diag - von_neumann_entropy(rho, log_base);
}

double l1_from_probability(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12) throw std::domain_error("probability outside [0, 1]");
  p = std::clamp(p, 0.0, 1.0);
  return 2.0 * std::sqrt(p * (1.0 - p));
}

double rel_ent_from_probability(double p, double log_base) {
  return binary_entropy(p, log_base);
}

CoherencePair coherence_closed_form(const SearchParams& p, double t, double log_base) {
  const double c = std::cos(p.energy * p.overlap * t);
  const double s = std::sin(p.energy * p.overlap * t);
  const double prob = s * s + p.overlap_sq * c * c;
  const double residual = std::max(0.0, 1.0 - p.overlap_sq) * c * c; // 1 - P
  CoherencePair out;
  out.l1 = 2.0 * std::abs(c) * std::sqrt(std::max(0.0, 1.0 - p.overlap_sq) * prob);
  double rel = 0.0;
  for (double q : {prob, residual}) {
    if (q > 1e-15)
      rel -= (log_base == 2.0) ? q * std::log2(q) : q * std::log(q) / std::log(log_base);
  }
  out.rel_ent = rel;
  return out;
}

double l1_full_basis_closed(const SearchParams& p, double t) {
  const TwoLevelState st = evolve_closed_form(p, t);
  const double total = std::abs(st.alpha) +
                       std::sqrt(static_cast<double>(p.dim - 1)) * std::abs(st.beta);
  return total * total - 1.0;
}

} // namespace agsim
