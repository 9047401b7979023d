#include "agsim/analog_search.hpp"

#include <cmath>
#include <numbers>

namespace agsim {

namespace {

void validate_common(int n_qubits, double energy, int marked) {
  if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
  if (n_qubits > 30) throw std::invalid_argument("qubit count too large");
  if (!(energy > 0.0)) throw std::invalid_argument("energy must be positive");
  const Index dim = Index{1} << n_qubits;
  if (marked < 0 || marked >= dim) throw std::invalid_argument("marked index out of range");
}

// -i H psi with H = E (|w><w| + |s><s|), applied without forming H.
void schrodinger_rhs(const SearchParams& p, const StateVector& s, const StateVector& psi,
                     StateVector& out) {
  const Complex sw = s.dot(psi); // <s|psi>
  out = (p.energy * sw) * s;
  out(p.marked) += p.energy * psi(p.marked);
  out *= Complex(0.0, -1.0);
}

struct Rk4Workspace {
  StateVector k1, k2, k3, k4, tmp;
  explicit Rk4Workspace(Index n) : k1(n), k2(n), k3(n), k4(n), tmp(n) {}
};

void rk4_step(const SearchParams& p, const StateVector& s, StateVector& psi, double h,
              Rk4Workspace& w, double injection) {
  schrodinger_rhs(p, s, psi, w.k1);
  w.tmp = psi + (h / 2.0) * w.k1;
  schrodinger_rhs(p, s, w.tmp, w.k2);
  w.tmp = psi + (h / 2.0) * w.k2;
  schrodinger_rhs(p, s, w.tmp, w.k3);
  w.tmp = psi + h * w.k3;
  schrodinger_rhs(p, s, w.tmp, w.k4);
  psi += (h / 6.0) * (w.k1 + 2.0 * w.k2 + 2.0 * w.k3 + w.k4);
  if (injection != 0.0) psi(p.marked) *= std::polar(1.0, injection);
}

double resolve_dt(const SearchParams& p, const IntegratorOptions& opts) {
  const double dt = opts.dt > 0.0 ? opts.dt : 1e-3 / p.energy;
  if (!(dt > 0.0)) throw std::invalid_argument("step size must be positive");
  if (dt * p.energy * std::sqrt(static_cast<double>(p.dim)) > 0.1)
    throw std::invalid_argument("step size too large for this energy and dimension");
  return dt;
}

void check_norm(const StateVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-9)
    throw std::runtime_error("integrator norm drift exceeded 1e-9");
}

} // namespace

SearchParams SearchParams::uniform_overlap(int n_qubits, double energy, int marked) {
  validate_common(n_qubits, energy, marked);
  SearchParams p;
  p.n_qubits = n_qubits;
  p.dim = Index{1} << n_qubits;
  p.energy = energy;
  p.overlap = 1.0 / std::sqrt(static_cast<double>(p.dim));
  p.overlap_sq = 1.0 / static_cast<double>(p.dim); // exact, so P(0) is exactly 1/N
  p.marked = marked;
  p.uniform = true;
  return p;
}

SearchParams SearchParams::with_overlap(int n_qubits, double energy, double overlap, int marked) {
  validate_common(n_qubits, energy, marked);
  if (!(overlap > 0.0) || overlap > 1.0)
    throw std::invalid_argument("overlap must lie in (0, 1]");
  SearchParams p;
  p.n_qubits = n_qubits;
  p.dim = Index{1} << n_qubits;
  p.energy = energy;
  p.overlap = overlap;
  p.overlap_sq = overlap * overlap;
  p.marked = marked;
  p.uniform = std::abs(overlap * overlap * static_cast<double>(p.dim) - 1.0) <= 1e-9;
  if (p.uniform) p.overlap_sq = 1.0 / static_cast<double>(p.dim);
  return p;
}

Matrix hamiltonian_full(const SearchParams& p) {
  const StateVector s = start_state(p);
  Matrix h = p.energy * (s * s.adjoint());
  h(p.marked, p.marked) += p.energy;
  return h;
}

Matrix hamiltonian_2d(const SearchParams& p) {
  const double x = p.overlap;
  const double s = std::sqrt(std::max(0.0, 1.0 - p.overlap_sq));
  Matrix h(2, 2);
  h(0, 0) = p.energy * (1.0 + x * x);
  h(0, 1) = p.energy * x * s;
  h(1, 0) = h(0, 1);
  h(1, 1) = p.energy * (1.0 - x * x);
  return h;
}

TwoLevelState evolve_closed_form(const SearchParams& p, double t) {
  const double x = p.overlap;
  const double phase = p.energy * x * t;
  const Complex global = std::polar(1.0, -p.energy * t);
  TwoLevelState out;
  out.alpha = global * Complex(x * std::cos(phase), -std::sin(phase));
  out.beta = global * std::sqrt(std::max(0.0, 1.0 - p.overlap_sq)) * std::cos(phase);
  return out;
}

double success_probability(const SearchParams& p, double t) {
  const double c = std::cos(p.energy * p.overlap * t);
  const double s = std::sin(p.energy * p.overlap * t);
  return s * s + p.overlap_sq * c * c;
}

double peak_time(const SearchParams& p) {
  return std::numbers::pi / (2.0 * p.energy * p.overlap);
}

StateVector start_state(const SearchParams& p) {
  if (p.uniform)
    return StateVector::Constant(p.dim, 1.0 / std::sqrt(static_cast<double>(p.dim)));
  return embed_full({p.overlap, std::sqrt(std::max(0.0, 1.0 - p.overlap_sq))}, p);
}

StateVector embed_full(const TwoLevelState& s, const SearchParams& p) {
  const double norm_sq = std::norm(s.alpha) + std::norm(s.beta);
  if (std::abs(norm_sq - 1.0) > kNormTol)
    throw std::invalid_argument("two-level coefficients are not normalized");
  StateVector out(p.dim);
  const Complex rest = s.beta / std::sqrt(static_cast<double>(p.dim - 1));
  out.setConstant(rest);
  out(p.marked) = s.alpha;
  return out;
}

StateVector apply_hamiltonian(const SearchParams& p, const StateVector& psi) {
  if (psi.size() != p.dim) throw std::invalid_argument("state dimension mismatch");
  const StateVector s = start_state(p);
  StateVector out = (p.energy * s.dot(psi)) * s;
  out(p.marked) += p.energy * psi(p.marked);
  return out;
}

StateVector evolve_numeric(const SearchParams& p, double t, const IntegratorOptions& opts) {
  if (t < 0.0) throw std::invalid_argument("time must be non-negative");
  const double dt = resolve_dt(p, opts);
  StateVector psi = start_state(p);
  if (t == 0.0) return psi;
  if (dt > t) throw std::invalid_argument("step size exceeds the requested time");
  const StateVector s = start_state(p);
  Rk4Workspace w(p.dim);
  const long steps = static_cast<long>(std::ceil(t / dt - 1e-12));
  const double h = t / static_cast<double>(steps);
  for (long i = 0; i < steps; ++i) rk4_step(p, s, psi, h, w, opts.error_injection);
  check_norm(psi);
  return psi;
}

std::vector<StateVector> evolve_numeric_grid(const SearchParams& p,
                                             const std::vector<double>& times,
                                             const IntegratorOptions& opts) {
  const double dt = resolve_dt(p, opts);
  const StateVector s = start_state(p);
  StateVector psi = s;
  Rk4Workspace w(p.dim);
  std::vector<StateVector> out;
  out.reserve(times.size());
  double current = 0.0;
  for (double target : times) {
    if (target < 0.0) throw std::invalid_argument("times must be non-negative");
    if (target < current) throw std::invalid_argument("times must be non-decreasing");
    const double span = target - current;
    if (span > 0.0) {
      const long steps = std::max<long>(1, static_cast<long>(std::ceil(span / dt - 1e-12)));
      const double h = span / static_cast<double>(steps);
      for (long i = 0; i < steps; ++i) rk4_step(p, s, psi, h, w, opts.error_injection);
      current = target;
    }
    check_norm(psi);
    out.push_back(psi);
  }
  return out;
}

} // namespace agsim
