#include "renyi/random.hpp"

#include <Eigen/QR>

namespace renyi {

Matrix ginibre(Index dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

DensityMatrix random_density(Index dim, Rng& rng) {
  const Matrix g = ginibre(dim, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate_density(Matrix(0.5 * (rho + rho.adjoint())));
}

HermitianOperator random_hermitian(Index dim, Rng& rng, double scale) {
  const Matrix g = ginibre(dim, rng);
  return HermitianOperator(Matrix(0.5 * scale * (g + g.adjoint())));
}

Matrix random_unitary(Index dim, Rng& rng) {
  const Eigen::HouseholderQR<Matrix> qr(ginibre(dim, rng));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace renyi
