#pragma once

#include "renyi/measures.hpp"
#include "renyi/thermal.hpp"

namespace renyi {

// Correction terms linking S_alpha(rho_N) to the thermal entropy:
//   traditional: delta = ln[1 - beta(1-alpha)(U_N - U_T)] / (alpha-1)
//   sandwiched:  delta = ln[Tr(A^(1/2a) rho_N A^(1/2a))^a / Tr rho_N^a] / (alpha-1)
// and in both cases delta_prime = beta (U_T - U_N) + delta.
// At alpha = 1 both reduce to delta = beta (U_N - U_T), delta_prime = 0.
struct DeltaTerms {
  double delta;
  double delta_prime;
  Divergence variant;
};

// CutoffViolation when the traditional log argument is <= 0 or when A has a
// negative eigenvalue (sandwiched).
DeltaTerms delta_terms(const DensityMatrix& rho_n, const ThermalState& th, Divergence variant);

}  // namespace renyi
