#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "renyi/measures.hpp"
#include "renyi/operator.hpp"

namespace renyi {

inline constexpr double kTracePreservingTolerance = 1e-10;
inline constexpr double kFixedPointTolerance = 1e-10;

// CPTP map X -> sum_i K_i X K_i^dagger, optionally certified to fix a state.
class Channel {
 public:
  // Throws NotTracePreserving when max|sum K^dagger K - 1| > 1e-10.
  explicit Channel(std::vector<Matrix> kraus);

  static Channel identity(Index dim);
  // Convex combination; weights must be non-negative and sum to 1.
  static Channel mixture(const std::vector<double>& weights, const std::vector<Channel>& parts);

  // Copy carrying `state` as certified fixed point. Throws FixedPointMismatch
  // when ||channel(state) - state||_1 > 1e-10.
  Channel certify(const DensityMatrix& state) const;

  Index dim() const noexcept { return dim_; }
  const std::vector<Matrix>& kraus() const noexcept { return kraus_; }
  const std::optional<DensityMatrix>& fixes() const noexcept { return fixes_; }

 private:
  Index dim_;
  std::vector<Matrix> kraus_;
  std::optional<DensityMatrix> fixes_;
};

Matrix apply_channel(const Channel& ch, const Matrix& x);
// Output revalidated; NotPSD signals a broken Kraus set.
DensityMatrix apply_channel(const Channel& ch, const DensityMatrix& rho);

// Eigenvectors of rho_T as columns, ordered by descending eigenvalue, and the
// matching eigenvalues.
Spectrum measurement_basis(const DensityMatrix& rho_t);

// X -> sum_i <i|X|i> sigma_i with |i> the columns of `basis` (the descending
// eigenbasis of rho_T when omitted). Requires sum_i p_i sigma_i = rho_T with
// p_i = <i|rho_T|i>; the returned channel is certified to fix rho_T.
Channel build_measure_prepare_fixing(const DensityMatrix& rho_t,
                                     const std::vector<DensityMatrix>& prepared,
                                     const std::optional<Matrix>& basis = std::nullopt);

// Prepared set {tau, eta, ..., eta} with tau = (rho_T - (1 - p_0) eta) / p_0,
// p_0 the population of the first basis vector. Throws NotPSD when tau is not
// a state.
std::vector<DensityMatrix> complete_prepared_set(const DensityMatrix& rho_t,
                                                 const DensityMatrix& eta,
                                                 const std::optional<Matrix>& basis = std::nullopt);

// Seeded convex mixture of dephasing in the rho_T eigenbasis, a measure-prepare
// map with randomly perturbed prepared states, and the identity.
Channel random_thermal_fixing_channel(const DensityMatrix& rho_t, std::uint64_t seed);

struct DpiResult {
  double before;
  double after;
  bool monotone;  // after <= before + 1e-10
};

DpiResult dpi_check(const Channel& ch, const DensityMatrix& rho, const DensityMatrix& sigma,
                    RenyiOrder alpha, Divergence variant);

}  // namespace renyi
