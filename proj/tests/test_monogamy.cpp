#include <cmath>
#include <numbers>

#include "doctest.h"

#include "agsim/analog_search.hpp"
#include "agsim/entanglement.hpp"
#include "agsim/monogamy.hpp"
#include "agsim/qmath.hpp"

using namespace agsim;

namespace {

StateVector closed_state(const SearchParams& p, double t) {
  return embed_full(evolve_closed_form(p, t), p);
}

StateVector w3() {
  StateVector psi = StateVector::Zero(8);
  psi(1) = psi(2) = psi(4) = 1.0 / std::sqrt(3.0);
  return psi;
}

StateVector ghz3() {
  StateVector psi = StateVector::Zero(8);
  psi(0) = psi(7) = 1.0 / std::numbers::sqrt2;
  return psi;
}

} // namespace

TEST_CASE("W state saturates the pairwise bound") {
  const MonogamyReport r = ckw_check(w3(), 3);
  CHECK(r.c_sq_one_vs_rest == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
  CHECK(r.sum_pair_c_sq == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
  CHECK(std::abs(r.delta_c) < 1e-12);
  CHECK(wootters_concurrence(reduced_density_matrix(w3(), Bipartition(3, {0, 1}))) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("GHZ entanglement is invisible to the pairs") {
  const MonogamyReport r = ckw_check(ghz3(), 3);
  CHECK(r.c_sq_one_vs_rest == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.sum_pair_c_sq < 1e-12);
  CHECK(r.delta_c == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(monogamy_score_eof_sq(ghz3(), 3) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two qubits always balance exactly") {
  const SearchParams p = SearchParams::uniform_overlap(2, 1.0);
  for (const double t : {0.0, 0.6, 1.5, 2.8}) {
    const MonogamyReport r = ckw_check(closed_state(p, t), 2);
    CHECK(std::abs(r.delta_c) < 1e-12);
    CHECK(std::abs(r.delta_eof_sq) < 1e-12);
    CHECK(monogamy_score_closed(p, t) == 0.0); // the N = 4 prefactor is exactly zero
  }
}

TEST_CASE("closed-form score at N = 32, frozen") {
  const SearchParams p = SearchParams::uniform_overlap(5, 1.0);
  const double t = 0.7;
  CHECK(monogamy_score_closed(p, t) == doctest::Approx(0.02062831622321544).epsilon(1e-12));

  const double arg = 2.0 * t / std::sqrt(32.0);
  const double sin_sq = std::sin(arg) * std::sin(arg);
  CHECK(monogamy_score_closed(p, t) == doctest::Approx(0.34375 * sin_sq).epsilon(1e-14));

  // The generic state-side computation lands on the same number.
  const MonogamyReport r = ckw_check(closed_state(p, t), 5);
  CHECK(r.delta_c == doctest::Approx(monogamy_score_closed(p, t)).epsilon(1e-9));
}

TEST_CASE("both scores stay nonnegative along the sweep") {
  for (const int n : {3, 4, 5}) {
    const SearchParams p = SearchParams::uniform_overlap(n, 1.0);
    const double t_m = peak_time(p);
    for (int i = 0; i <= 20; ++i) {
      const double t = 2.0 * t_m * i / 20.0;
      const MonogamyReport r = ckw_check(closed_state(p, t), n);
      CHECK(r.delta_c >= -1e-12);
      CHECK(r.delta_eof_sq >= -1e-12);
    }
  }
}

TEST_CASE("squared-EoF score at the half period, frozen") {
  const SearchParams p = SearchParams::uniform_overlap(5, 1.0);
  const double t = std::numbers::pi * std::sqrt(32.0) / 4.0;
  CHECK(monogamy_score_eof_sq(closed_state(p, t), 5) ==
        doctest::Approx(0.3101556613494819).epsilon(1e-8));
}

TEST_CASE("unsquared difference can go negative") {
  // For W3: C(0|rest) = 2 sqrt(2)/3 while the pair concurrences sum to 4/3.
  const double expected = 2.0 * std::numbers::sqrt2 / 3.0 - 4.0 / 3.0;
  CHECK(monogamy_delta_unsquared(w3(), 3) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(monogamy_delta_unsquared(w3(), 3) < 0.0);
  // For GHZ3 it is maximal: 1 - 0.
  CHECK(monogamy_delta_unsquared(ghz3(), 3) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("report rejects inconsistent input") {
  CHECK_THROWS_AS(ckw_check(w3(), 4), std::invalid_argument);
  StateVector single(2);
  single << 1.0, 0.0;
  CHECK_THROWS_AS(ckw_check(single, 1), std::invalid_argument);
  CHECK_THROWS_AS(monogamy_score_closed(SearchParams::with_overlap(3, 1.0, 0.2), 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(monogamy_score_closed(SearchParams::uniform_overlap(1, 1.0), 0.5),
                  std::invalid_argument);
}
