#include "renyi/free_energy.hpp"

#include <optional>

namespace renyi {
namespace {

void require_positive_beta(const ThermalState& th) {
  if (!(th.beta > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "free energies need beta > 0");
  }
}

}  // namespace

FreeEnergyReport free_energy_report(const DensityMatrix& rho_n, const ThermalState& th) {
  require_positive_beta(th);
  const double t = 1.0 / th.beta;
  const double d_trad = trad_relative_entropy(rho_n, th.state, th.alpha);
  const double d_sand = sandwiched_relative_entropy(rho_n, th.state, th.alpha);
  const DeltaTerms trad = delta_terms(rho_n, th, Divergence::Traditional);
  const DeltaTerms sand = delta_terms(rho_n, th, Divergence::Sandwiched);

  const double f_tilde = th.free_energy + t * (d_trad - trad.delta_prime);
  const double f_sand = th.free_energy + t * (d_sand - sand.delta_prime);
  const double f_form =
      renyi_internal_energy(rho_n, th.hamiltonian, th.alpha) - t * renyi_entropy(rho_n, th.alpha);
  return FreeEnergyReport{f_tilde, f_sand, f_form, th.free_energy, f_form - th.free_energy,
                          d_trad,  d_sand, trad,   sand};
}

double free_energy_gap(const DensityMatrix& rho_n, const ThermalState& th) {
  require_positive_beta(th);
  return renyi_internal_energy(rho_n, th.hamiltonian, th.alpha) -
         renyi_entropy(rho_n, th.alpha) / th.beta - th.free_energy;
}

MinimalityCertificate minimality_certificate(const ThermalState& th, int samples,
                                             std::uint64_t seed) {
  const Index d = th.state.dim();
  return minimality_certificate(th, samples, seed,
                                [d](Rng& rng) { return random_density(d, rng); });
}

MinimalityCertificate minimality_certificate(const ThermalState& th, int samples,
                                             std::uint64_t seed, const StateSampler& sampler) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be >= 1");
  Rng rng(seed);
  std::optional<MinimalityCertificate> best;
  for (int k = 0; k < samples; ++k) {
    DensityMatrix rho = sampler(rng);
    const double gap = free_energy_gap(rho, th);
    if (!best || gap < best->min_gap) best.emplace(MinimalityCertificate{gap, std::move(rho)});
  }
  return *best;
}

}  // namespace renyi
