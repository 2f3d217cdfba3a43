#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "renyi/operator.hpp"
#include "renyi/random.hpp"

namespace renyi::testing {

inline HermitianOperator diag_h(std::vector<double> values) {
  return HermitianOperator::diagonal(values);
}

inline DensityMatrix diag_rho(std::vector<double> values) {
  return DensityMatrix::diagonal(values);
}

inline Matrix qubit_matrix(Complex a00, Complex a01, Complex a11) {
  Matrix m(2, 2);
  m << a00, a01, std::conj(a01), a11;
  return m;
}

inline double spread(const HermitianOperator& h) {
  const RealVector e = h.spectrum().values;
  return e.maxCoeff() - e.minCoeff();
}

// beta drawn below the no-cutoff bound |1 - alpha| beta spread(H) <= 0.9.
inline double no_cutoff_beta(const HermitianOperator& h, double alpha, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  const double s = spread(h);
  const double cap = alpha == 1.0 ? 3.0 / s : std::min(3.0 / s, 0.9 / (std::abs(1.0 - alpha) * s));
  return cap * unit(rng);
}

// Scalar Renyi quantities of a probability vector, written out directly.
inline double renyi_entropy_of(const std::vector<double>& p, double alpha) {
  if (alpha == 1.0) {
    double s = 0.0;
    for (const double x : p) if (x > 0.0) s -= x * std::log(x);
    return s;
  }
  double t = 0.0;
  for (const double x : p) t += std::pow(x, alpha);
  return std::log(t) / (1.0 - alpha);
}

inline double escort_energy_of(const std::vector<double>& p, const std::vector<double>& e,
                               double alpha) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    num += std::pow(p[i], alpha) * e[i];
    den += std::pow(p[i], alpha);
  }
  return num / den;
}

}  // namespace renyi::testing
