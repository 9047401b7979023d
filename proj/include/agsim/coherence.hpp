#pragma once

#include "agsim/analog_search.hpp"
#include "agsim/types.hpp"

namespace agsim {

/// l1 coherence: sum of |rho_ij| over i != j.
double l1_coherence(const DensityMatrix& rho);

/// Relative entropy of coherence: S(diag(rho)) - S(rho).
double rel_ent_coherence(const DensityMatrix& rho, double log_base = 2.0);

/// l1 coherence of the evolved pure state as a function of its success
/// probability: 2 sqrt(P (1-P)).
double l1_from_probability(double p);

/// Relative entropy of coherence as a function of success probability: the
/// binary entropy of P.
double rel_ent_from_probability(double p, double log_base = 2.0);

struct CoherencePair {
  double l1;
  double rel_ent;
};

/// Both coherence monotones of the evolved state in the {|w>, |r>} basis,
/// evaluated from the time-domain closed forms.
CoherencePair coherence_closed_form(const SearchParams& p, double t, double log_base = 2.0);

/// l1 coherence of the embedded state in the full computational basis,
/// (|alpha| + sqrt(N-1) |beta|)^2 - 1. Starts at N-1 and vanishes at the
/// success peak.
double l1_full_basis_closed(const SearchParams& p, double t);

} // namespace agsim
