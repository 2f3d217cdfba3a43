#pragma once

#include "renyi/operator.hpp"

namespace renyi {

// Renyi order alpha > 0. alpha == 1 exactly selects the von Neumann branch of
// every functional; there is no limiting formula near 1.
class RenyiOrder {
 public:
  explicit RenyiOrder(double alpha);

  double value() const noexcept { return alpha_; }
  bool von_neumann() const noexcept { return alpha_ == 1.0; }

 private:
  double alpha_;
};

enum class Divergence { Traditional, Sandwiched };

double von_neumann_entropy(const DensityMatrix& rho);

// (1/(1-alpha)) ln Tr rho^alpha.
double renyi_entropy(const DensityMatrix& rho, RenyiOrder alpha);

// Escort energy Tr[rho^alpha H] / Tr rho^alpha.
double renyi_internal_energy(const DensityMatrix& rho, const HermitianOperator& h,
                             RenyiOrder alpha);

// Tr rho (ln rho - ln sigma). SupportViolation when supp(rho) is not inside
// supp(sigma) under strict-support.
double von_neumann_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                    PowerPolicy policy = PowerPolicy::strict_support());

// (1/(alpha-1)) ln Tr[rho^alpha sigma^(1-alpha)].
double trad_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                             RenyiOrder alpha,
                             PowerPolicy policy = PowerPolicy::strict_support());

// (1/(alpha-1)) ln Tr[(sigma^g rho sigma^g)^alpha], g = (1-alpha)/(2 alpha).
double sandwiched_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                   RenyiOrder alpha,
                                   PowerPolicy policy = PowerPolicy::strict_support());

double relative_entropy(Divergence variant, const DensityMatrix& rho,
                        const DensityMatrix& sigma, RenyiOrder alpha,
                        PowerPolicy policy = PowerPolicy::strict_support());

// Tr[(A^(1/2a) rho A^(1/2a))^a] for PSD A. Shared by the sandwiched divergence
// and the sandwiched correction term.
double sandwiched_trace(const Matrix& sandwich_factor, const DensityMatrix& rho, double alpha);

}  // namespace renyi
