#include "renyi/delta_terms.hpp"

#include <cmath>
#include <string>

namespace renyi {
namespace {

double power_trace(const DensityMatrix& rho, double alpha) {
  return power_values(rho.spectrum().values, alpha, PowerPolicy::zero_extend()).sum();
}

}  // namespace

DeltaTerms delta_terms(const DensityMatrix& rho_n, const ThermalState& th, Divergence variant) {
  require_same_dim(rho_n.dim(), th.state.dim(), "delta_terms");
  const double beta = th.beta;
  const double u_n = renyi_internal_energy(rho_n, th.hamiltonian, th.alpha);
  const double shift = beta * (th.energy - u_n);

  if (th.alpha.von_neumann()) return DeltaTerms{-shift, 0.0, variant};

  const double a = th.alpha.value();
  double delta = 0.0;
  if (variant == Divergence::Traditional) {
    const double x = (a - 1.0) * beta * (u_n - th.energy);
    if (!(x > -1.0)) {
      throw Error(ErrorCode::CutoffViolation,
                  "1 - beta(1-alpha)(U_N - U_T) = " + std::to_string(1.0 + x));
    }
    delta = std::log1p(x) / (a - 1.0);
  } else {
    const Spectrum base = th.base.spectrum();
    if (base.values.minCoeff() < -kEigenvalueTolerance) {
      throw Error(ErrorCode::CutoffViolation, "A has a negative eigenvalue " +
                                                  std::to_string(base.values.minCoeff()));
    }
    const HermitianOperator factor = spectral_power(th.base, 1.0 / (2.0 * a));
    const double num = sandwiched_trace(factor.matrix(), rho_n, a);
    if (!(num > 0.0)) {
      throw Error(ErrorCode::SupportViolation, "A-sandwich of rho_N has zero trace");
    }
    delta = std::log(num / power_trace(rho_n, a)) / (a - 1.0);
  }
  return DeltaTerms{delta, shift + delta, variant};
}

}  // namespace renyi
