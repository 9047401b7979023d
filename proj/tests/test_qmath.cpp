#include <cmath>
#include <random>

#include "doctest.h"

#include "agsim/qmath.hpp"
#include "agsim/types.hpp"

using namespace agsim;

namespace {

StateVector random_state(std::mt19937_64& rng, Index dim) {
  std::normal_distribution<double> dist;
  StateVector psi(dim);
  for (Index i = 0; i < dim; ++i) psi(i) = Complex(dist(rng), dist(rng));
  psi.normalize();
  return psi;
}

StateVector bell() {
  StateVector psi(4);
  psi << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  return psi;
}

} // namespace

TEST_CASE("qubit_count maps dimensions back to register sizes") {
  CHECK(qubit_count(2) == 1);
  CHECK(qubit_count(8) == 3);
  CHECK(qubit_count(4096) == 12);
  CHECK_THROWS_AS(qubit_count(6), std::invalid_argument);
  CHECK_THROWS_AS(qubit_count(0), std::invalid_argument);
}

TEST_CASE("Bipartition rejects malformed cuts") {
  CHECK_NOTHROW(Bipartition(3, {0, 2}));
  CHECK_THROWS_AS(Bipartition(3, {}), std::invalid_argument);       // empty
  CHECK_THROWS_AS(Bipartition(3, {0, 1, 2}), std::invalid_argument); // nothing traced out
  CHECK_THROWS_AS(Bipartition(3, {2, 0}), std::invalid_argument);   // not increasing
  CHECK_THROWS_AS(Bipartition(3, {0, 3}), std::invalid_argument);   // out of range
  CHECK(Bipartition(4, {1, 3}).complement() == std::vector<int>{0, 2});
}

TEST_CASE("kron of Pauli-style blocks") {
  Matrix z(2, 2), x(2, 2);
  z << 1, 0, 0, -1;
  x << 0, 1, 1, 0;
  const Matrix zx = kron(z, x);
  CHECK(zx.rows() == 4);
  CHECK(zx(0, 1) == Complex(1.0));
  CHECK(zx(2, 3) == Complex(-1.0));
  CHECK(zx(0, 0) == Complex(0.0));
  Matrix odd = Matrix::Identity(3, 3);
  CHECK_THROWS_AS(kron(z, odd), std::invalid_argument);
}

TEST_CASE("outer builds projectors and insists on normalization") {
  const DensityMatrix rho = outer(bell());
  CHECK(rho(0, 0).real() == doctest::Approx(0.5));
  CHECK(rho(0, 3).real() == doctest::Approx(0.5));
  CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-14);
  StateVector unnormalized(2);
  unnormalized << 1.0, 1.0;
  CHECK_THROWS_AS(outer(unnormalized), std::invalid_argument);
}

TEST_CASE("qubit 0 is the most significant bit of the basis index") {
  // |0> on qubit 0, |+> on qubit 1: amplitudes on indices 0 and 1 only.
  StateVector psi(4);
  psi << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0, 0.0;
  const DensityMatrix first = reduced_density_matrix(psi, Bipartition(2, {0}));
  CHECK(first(0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(first(1, 1)) < 1e-15);
  const DensityMatrix second = reduced_density_matrix(psi, Bipartition(2, {1}));
  CHECK(second(0, 0).real() == doctest::Approx(0.5));
  CHECK(second(0, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("partial trace of a Bell pair is maximally mixed") {
  const DensityMatrix rho = outer(bell());
  for (const int q : {0, 1}) {
    const DensityMatrix r = partial_trace(rho, Bipartition(2, {q}));
    CHECK((r - DensityMatrix::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("reduced_density_matrix agrees with partial_trace of the projector") {
  std::mt19937_64 rng(7);
  for (const int n : {2, 3, 4, 5}) {
    const StateVector psi = random_state(rng, Index{1} << n);
    for (const auto& kept : {std::vector<int>{0}, std::vector<int>{n - 1},
                             std::vector<int>{0, n - 1}}) {
      if (static_cast<int>(kept.size()) >= n) continue;
      const Bipartition part(n, kept);
      const DensityMatrix a = reduced_density_matrix(psi, part);
      const DensityMatrix b = partial_trace(outer(psi), part);
      CHECK((a - b).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("both sides of a pure-state cut carry the same entropy") {
  std::mt19937_64 rng(11);
  for (const int n : {3, 4, 5}) {
    const StateVector psi = random_state(rng, Index{1} << n);
    const Bipartition part(n, {0, 1});
    const Bipartition rest(n, part.complement());
    const double sa = von_neumann_entropy(reduced_density_matrix(psi, part));
    const double sb = von_neumann_entropy(reduced_density_matrix(psi, rest));
    CHECK(sa == doctest::Approx(sb).epsilon(1e-10));
  }
}

TEST_CASE("hermitian_eigvals sorts descending and rejects non-Hermitian input") {
  Matrix m(2, 2);
  m << 1.0, Complex(0.0, 0.5), Complex(0.0, -0.5), 2.0;
  const std::vector<double> eigs = hermitian_eigvals(m);
  CHECK(eigs[0] > eigs[1]);
  CHECK(eigs[0] + eigs[1] == doctest::Approx(3.0));
  m(0, 1) = 0.3; // breaks hermiticity against m(1,0)
  CHECK_THROWS_AS(hermitian_eigvals(m), std::invalid_argument);
}

TEST_CASE("psd_sqrt squares back to the input") {
  const DensityMatrix rho = 0.5 * outer(bell()) +
                            0.5 * DensityMatrix::Identity(4, 4) / 4.0;
  const Matrix root = psd_sqrt(rho);
  CHECK((root * root - rho).cwiseAbs().maxCoeff() < 1e-13);
  DensityMatrix negative = DensityMatrix::Identity(2, 2);
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(psd_sqrt(negative), std::domain_error);
}

TEST_CASE("von Neumann entropy in bits and nats") {
  const DensityMatrix mixed = DensityMatrix::Identity(2, 2) * 0.5;
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(1.0));
  CHECK(von_neumann_entropy(mixed, std::exp(1.0)) == doctest::Approx(std::log(2.0)));
  StateVector zero(2);
  zero << 1.0, 0.0;
  CHECK(von_neumann_entropy(outer(zero)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("binary entropy endpoints and domain") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-14));
  CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
}

TEST_CASE("spin flip is an involution and swaps |00> with |11>") {
  StateVector zero = StateVector::Zero(4);
  zero(0) = 1.0;
  const DensityMatrix flipped = spin_flip(outer(zero));
  CHECK(flipped(3, 3).real() == doctest::Approx(1.0));
  CHECK(std::abs(flipped(0, 0)) < 1e-15);

  const DensityMatrix rho = outer(bell());
  CHECK((spin_flip(spin_flip(rho)) - rho).cwiseAbs().maxCoeff() < 1e-14);
  // The Bell projector is its own spin flip.
  CHECK((spin_flip(rho) - rho).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(spin_flip(DensityMatrix::Identity(8, 8) / 8.0), std::invalid_argument);
}

TEST_CASE("trace distances") {
  const DensityMatrix a = outer(bell());
  CHECK(trace_distance(a, a) == doctest::Approx(0.0).epsilon(1e-12));
  StateVector zero(2), one(2);
  zero << 1.0, 0.0;
  one << 0.0, 1.0;
  CHECK(trace_distance(outer(zero), outer(one)) == doctest::Approx(1.0));
  CHECK(trace_distance_pure(zero, one) == doctest::Approx(1.0));
  // A global phase is not a physical difference.
  const StateVector phased = std::polar(1.0, 1.2) * zero;
  CHECK(trace_distance_pure(zero, phased) == doctest::Approx(0.0).epsilon(1e-12));
}
