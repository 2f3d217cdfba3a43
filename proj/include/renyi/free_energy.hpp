#pragma once

#include <cstdint>
#include <functional>

#include "renyi/delta_terms.hpp"
#include "renyi/random.hpp"
#include "renyi/thermal.hpp"

namespace renyi {

// Nonequilibrium free energies of rho_N relative to a thermal state:
//   f_tilde = F_T + (D_alpha(rho_N || rho_T) - Delta'_alpha) / beta
//   f_sand  = F_T + (D~_alpha(rho_N || rho_T) - Delta~'_alpha) / beta
//   f_form  = U_N - S_alpha(rho_N) / beta
// The first two are evaluated through their divergences, never through f_form.
struct FreeEnergyReport {
  double f_tilde;
  double f_sand;
  double f_form;
  double f_equilibrium;
  double gap;  // f_form - f_equilibrium
  double divergence_trad;
  double divergence_sand;
  DeltaTerms delta_trad;
  DeltaTerms delta_sand;
};

// Requires beta > 0.
FreeEnergyReport free_energy_report(const DensityMatrix& rho_n, const ThermalState& th);

// U_N - S_alpha(rho_N)/beta - F_T.
double free_energy_gap(const DensityMatrix& rho_n, const ThermalState& th);

struct MinimalityCertificate {
  double min_gap;
  DensityMatrix argmin;
};

using StateSampler = std::function<DensityMatrix(Rng&)>;

// Smallest free-energy gap over `samples` Hilbert-Schmidt random states drawn
// from a generator seeded with `seed`.
MinimalityCertificate minimality_certificate(const ThermalState& th, int samples,
                                             std::uint64_t seed);
MinimalityCertificate minimality_certificate(const ThermalState& th, int samples,
                                             std::uint64_t seed, const StateSampler& sampler);

}  // namespace renyi
