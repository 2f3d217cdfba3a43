#include "renyi/operator.hpp"

#include <cmath>
#include <string>

namespace renyi {

void require_same_dim(Index a, Index b, const char* where) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch, std::string(where) + ": dimensions " +
                                                  std::to_string(a) + " and " + std::to_string(b));
  }
}

HermitianOperator::HermitianOperator(const Matrix& entries) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "operator must be a non-empty square matrix");
  }
  if (!entries.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "operator has non-finite entries");
  }
  const double deviation = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (deviation > kHermiticityTolerance) {
    throw Error(ErrorCode::NotHermitian, "max |M - M^dagger| = " + std::to_string(deviation));
  }
  entries_ = 0.5 * (entries + entries.adjoint());
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> values) {
  Matrix m = Matrix::Zero(static_cast<Index>(values.size()), static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    m(static_cast<Index>(i), static_cast<Index>(i)) = values[i];
  }
  return HermitianOperator(m);
}

HermitianOperator HermitianOperator::identity(Index dim) {
  return HermitianOperator(Matrix::Identity(dim, dim), Trusted{});
}

HermitianOperator HermitianOperator::from_spectrum(const RealVector& values,
                                                   const Matrix& vectors) {
  Matrix m = vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
  return HermitianOperator(Matrix(0.5 * (m + m.adjoint())), Trusted{});
}

Spectrum HermitianOperator::spectrum() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator+");
  return HermitianOperator(Matrix(a.entries_ + b.entries_), HermitianOperator::Trusted{});
}

HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator-");
  return HermitianOperator(Matrix(a.entries_ - b.entries_), HermitianOperator::Trusted{});
}

HermitianOperator operator*(double s, const HermitianOperator& a) {
  return HermitianOperator(Matrix(s * a.entries_), HermitianOperator::Trusted{});
}

DensityMatrix validate_density(const HermitianOperator& m) {
  Spectrum spec = m.spectrum();
  const double smallest = spec.values.minCoeff();
  if (smallest < -kEigenvalueTolerance) {
    throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(smallest));
  }
  const double trace = m.trace();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    throw Error(ErrorCode::TraceNotOne, "trace " + std::to_string(trace));
  }
  if (smallest >= 0.0) return DensityMatrix(m, std::move(spec));

  spec.values = spec.values.cwiseMax(0.0);
  spec.values /= spec.values.sum();
  HermitianOperator clamped = HermitianOperator::from_spectrum(spec.values, spec.vectors);
  return DensityMatrix(std::move(clamped), std::move(spec));
}

DensityMatrix validate_density(const Matrix& m) { return validate_density(HermitianOperator(m)); }

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  if (dim <= 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  return validate_density(HermitianOperator(Matrix(Matrix::Identity(dim, dim) / double(dim))));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw Error(ErrorCode::InvalidArgument, "zero state vector");
  const ComplexVector v = psi / norm;
  return validate_density(HermitianOperator(Matrix(v * v.adjoint())));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> populations) {
  return validate_density(HermitianOperator::diagonal(populations));
}

PowerPolicy PowerPolicy::floor(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "floor policy needs a positive epsilon");
  }
  return PowerPolicy(Mode::Floor, epsilon);
}

RealVector power_values(const RealVector& eigenvalues, double p, PowerPolicy policy) {
  RealVector out(eigenvalues.size());
  const bool positive_integer = p > 0.0 && p == std::floor(p);
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    double lambda = eigenvalues[i];
    if (positive_integer && policy.mode() != PowerPolicy::Mode::Floor) {
      out[i] = std::pow(lambda, p);
      continue;
    }
    if (lambda < -kEigenvalueTolerance) {
      throw Error(ErrorCode::NegativeBase, "eigenvalue " + std::to_string(lambda));
    }
    if (policy.mode() == PowerPolicy::Mode::Floor) {
      out[i] = std::pow(std::max(lambda, policy.epsilon()), p);
      continue;
    }
    if (lambda <= kEigenvalueTolerance) {
      if (p > 0.0 || policy.mode() == PowerPolicy::Mode::ZeroExtend) {
        out[i] = 0.0;
        continue;
      }
      throw Error(ErrorCode::SupportViolation,
                  "power " + std::to_string(p) + " of a zero eigenvalue");
    }
    out[i] = std::pow(lambda, p);
  }
  return out;
}

HermitianOperator spectral_power(const HermitianOperator& m, double p, PowerPolicy policy) {
  const Spectrum spec = m.spectrum();
  return HermitianOperator::from_spectrum(power_values(spec.values, p, policy), spec.vectors);
}

HermitianOperator spectral_power(const DensityMatrix& rho, double p, PowerPolicy policy) {
  const Spectrum& spec = rho.spectrum();
  return HermitianOperator::from_spectrum(power_values(spec.values, p, policy), spec.vectors);
}

double trace_product(const Matrix& a, const Matrix& b) {
  return a.cwiseProduct(b.transpose()).sum().real();
}

double expectation(const DensityMatrix& rho, const HermitianOperator& o) {
  require_same_dim(rho.dim(), o.dim(), "expectation");
  // Both operands are exactly Hermitian, so the imaginary part is roundoff only.
  return trace_product(rho.matrix(), o.matrix());
}

double trace_norm(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.dim(), sigma.dim(), "trace_distance");
  return 0.5 * trace_norm(rho.matrix() - sigma.matrix());
}

}  // namespace renyi
