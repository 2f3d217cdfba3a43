#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>

#include "renyi/error.hpp"

namespace renyi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kEigenvalueTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;

// Eigenvalues ascending, eigenvectors as columns.
struct Spectrum {
  RealVector values;
  Matrix vectors;
};

class HermitianOperator {
 public:
  // Throws NotHermitian when max|M - M^dagger| exceeds kHermiticityTolerance.
  // The stored matrix is the exact Hermitian part (M + M^dagger)/2.
  explicit HermitianOperator(const Matrix& entries);

  static HermitianOperator diagonal(std::span<const double> values);
  static HermitianOperator identity(Index dim);
  static HermitianOperator from_spectrum(const RealVector& values, const Matrix& vectors);

  Index dim() const noexcept { return entries_.rows(); }
  const Matrix& matrix() const noexcept { return entries_; }
  double trace() const { return entries_.trace().real(); }
  Spectrum spectrum() const;

  friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);
  friend HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b);
  friend HermitianOperator operator*(double s, const HermitianOperator& a);

 private:
  struct Trusted {};
  HermitianOperator(Matrix entries, Trusted) : entries_(std::move(entries)) {}

  Matrix entries_;
};

// Unit-trace positive semidefinite operator. The spectrum is computed once on
// construction and kept, since nearly every functional needs it.
class DensityMatrix {
 public:
  static DensityMatrix maximally_mixed(Index dim);
  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix diagonal(std::span<const double> populations);

  Index dim() const noexcept { return op_.dim(); }
  const HermitianOperator& op() const noexcept { return op_; }
  const Matrix& matrix() const noexcept { return op_.matrix(); }
  const Spectrum& spectrum() const noexcept { return spectrum_; }

  friend DensityMatrix validate_density(const HermitianOperator& m);

 private:
  DensityMatrix(HermitianOperator op, Spectrum spectrum)
      : op_(std::move(op)), spectrum_(std::move(spectrum)) {}

  HermitianOperator op_;
  Spectrum spectrum_;
};

// Checks PSD (eigenvalues >= -1e-12) and unit trace (|Tr - 1| <= 1e-12).
// Eigenvalues in [-1e-12, 0) are clamped to zero and the state renormalized.
DensityMatrix validate_density(const HermitianOperator& m);
DensityMatrix validate_density(const Matrix& m);

class PowerPolicy {
 public:
  enum class Mode { StrictSupport, ZeroExtend, Floor };

  static PowerPolicy strict_support() noexcept { return PowerPolicy(Mode::StrictSupport, 0.0); }
  static PowerPolicy zero_extend() noexcept { return PowerPolicy(Mode::ZeroExtend, 0.0); }
  static PowerPolicy floor(double epsilon);

  Mode mode() const noexcept { return mode_; }
  double epsilon() const noexcept { return epsilon_; }

 private:
  PowerPolicy(Mode mode, double epsilon) : mode_(mode), epsilon_(epsilon) {}

  Mode mode_;
  double epsilon_;
};

// lambda -> lambda^p on each eigenvalue.
//   strict-support: eigenvalues <= 1e-12 are zero; p <= 0 on a zero raises SupportViolation.
//   zero-extend:    zero eigenvalues map to 0 for every p (generalized inverse for p < 0).
//   floor(eps):     eigenvalues below eps are raised to eps first.
// Positive integer p skips the policy and accepts negative eigenvalues; otherwise
// any eigenvalue below -1e-12 raises NegativeBase.
RealVector power_values(const RealVector& eigenvalues, double p,
                        PowerPolicy policy = PowerPolicy::strict_support());

HermitianOperator spectral_power(const HermitianOperator& m, double p,
                                 PowerPolicy policy = PowerPolicy::strict_support());
HermitianOperator spectral_power(const DensityMatrix& rho, double p,
                                 PowerPolicy policy = PowerPolicy::strict_support());

// Tr(rho O). Throws DimensionMismatch.
double expectation(const DensityMatrix& rho, const HermitianOperator& o);

// Real part of Tr(A B) for Hermitian A, B (no intermediate product matrix).
double trace_product(const Matrix& a, const Matrix& b);

// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const Matrix& hermitian);
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

void require_same_dim(Index a, Index b, const char* where);

}  // namespace renyi
