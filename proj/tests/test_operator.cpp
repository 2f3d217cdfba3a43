#include <gtest/gtest.h>

#include "renyi/operator.hpp"
#include "renyi/random.hpp"
#include "test_support.hpp"

namespace renyi {
namespace {

using testing::diag_h;
using testing::diag_rho;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no renyi::Error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(ValidateDensity, MaximallyMixed) {
  const DensityMatrix rho = validate_density(Matrix(Matrix::Identity(2, 2) * 0.5));
  EXPECT_NEAR(rho.spectrum().values[0], 0.5, 1e-15);
  EXPECT_NEAR(rho.spectrum().values[1], 0.5, 1e-15);
}

TEST(ValidateDensity, DiagonalState) {
  const DensityMatrix rho = diag_rho({0.7, 0.3});
  EXPECT_NEAR(rho.spectrum().values[0], 0.3, 1e-15);
  EXPECT_NEAR(rho.spectrum().values[1], 0.7, 1e-15);
}

TEST(ValidateDensity, Rejections) {
  EXPECT_EQ(code_of([] { diag_rho({1.1, -0.1}); }), ErrorCode::NotPSD);
  EXPECT_EQ(code_of([] { diag_rho({0.6, 0.6}); }), ErrorCode::TraceNotOne);
  EXPECT_EQ(code_of([] { validate_density((Matrix(2, 2) << 0.5, 1e-9, 0.0, 0.5).finished()); }),
            ErrorCode::NotHermitian);
}

TEST(ValidateDensity, ClampsTinyNegativeEigenvalues) {
  const DensityMatrix rho = diag_rho({1.0 + 5e-13, -5e-13});
  EXPECT_GE(rho.spectrum().values.minCoeff(), 0.0);
  EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-15);
}

TEST(HermitianOperator, SymmetrizesWithinTolerance) {
  Matrix m(2, 2);
  m << 1.0, Complex(0.2, 0.1), Complex(0.2, -0.1 + 5e-13), 2.0;
  const HermitianOperator h(m);
  EXPECT_EQ(h.matrix(), h.matrix().adjoint());
}

TEST(SpectralPower, IdentityIsFixed) {
  const HermitianOperator id = HermitianOperator::identity(3);
  for (const PowerPolicy policy :
       {PowerPolicy::strict_support(), PowerPolicy::zero_extend(), PowerPolicy::floor(1e-3)}) {
    EXPECT_LE((spectral_power(id, 7.3, policy).matrix() - id.matrix()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(SpectralPower, DiagonalSquare) {
  const HermitianOperator sq = spectral_power(diag_h({0.7, 0.3}), 2.0);
  EXPECT_NEAR(sq.matrix()(0, 0).real(), 0.49, 1e-15);
  EXPECT_NEAR(sq.matrix()(1, 1).real(), 0.09, 1e-15);
  EXPECT_NEAR(std::abs(sq.matrix()(0, 1)), 0.0, 1e-15);
}

TEST(SpectralPower, SupportPolicies) {
  const HermitianOperator singular = diag_h({0.5, 0.0});
  EXPECT_EQ(code_of([&] { spectral_power(singular, -1.0); }), ErrorCode::SupportViolation);
  const HermitianOperator inv = spectral_power(singular, -1.0, PowerPolicy::zero_extend());
  EXPECT_NEAR(inv.matrix()(0, 0).real(), 2.0, 1e-14);
  EXPECT_EQ(inv.matrix()(1, 1).real(), 0.0);
  const HermitianOperator floored = spectral_power(singular, -1.0, PowerPolicy::floor(1e-3));
  EXPECT_NEAR(floored.matrix()(1, 1).real(), 1e3, 1e-9);
  EXPECT_EQ(code_of([] { PowerPolicy::floor(0.0); }), ErrorCode::InvalidArgument);
}

TEST(SpectralPower, NegativeBase) {
  EXPECT_EQ(code_of([] { spectral_power(diag_h({0.5, -0.2}), 0.5); }), ErrorCode::NegativeBase);
  const HermitianOperator sq = spectral_power(diag_h({0.5, -0.2}), 2.0);
  EXPECT_NEAR(sq.matrix()(1, 1).real(), 0.04, 1e-15);
}

TEST(SpectralPower, PowerOneAndComposition) {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const HermitianOperator m = random_hermitian(5, rng);
    EXPECT_LE((spectral_power(m, 1.0).matrix() - m.matrix()).cwiseAbs().maxCoeff(), 1e-12);
    const DensityMatrix rho = random_density(5, rng);
    const double a = 0.3 + 0.05 * k;
    const double b = 1.7 - 0.02 * k;
    const Matrix twice = spectral_power(spectral_power(rho, a), b).matrix();
    EXPECT_LE((twice - spectral_power(rho, a * b).matrix()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Expectation, Examples) {
  const HermitianOperator n = diag_h({0.0, 1.0});
  EXPECT_NEAR(expectation(DensityMatrix::maximally_mixed(2), n), 0.5, 1e-15);
  EXPECT_NEAR(expectation(diag_rho({0.7, 0.3}), n), 0.3, 1e-15);
  ComplexVector ground(2);
  ground << 1.0, 0.0;
  EXPECT_EQ(expectation(DensityMatrix::pure(ground), n), 0.0);
  EXPECT_EQ(code_of([&] { expectation(DensityMatrix::maximally_mixed(3), n); }),
            ErrorCode::DimensionMismatch);
}

TEST(Expectation, LinearAndReal) {
  Rng rng(12);
  for (int k = 0; k < 20; ++k) {
    const DensityMatrix rho = random_density(4, rng);
    const HermitianOperator a = random_hermitian(4, rng);
    const HermitianOperator b = random_hermitian(4, rng);
    EXPECT_NEAR(expectation(rho, 1.5 * a - b), 1.5 * expectation(rho, a) - expectation(rho, b), 1e-12);
    EXPECT_LE(std::abs((rho.matrix() * a.matrix()).trace().imag()), 1e-12);
  }
}

TEST(TraceDistance, OrthogonalPureStates) {
  EXPECT_NEAR(trace_distance(diag_rho({1.0, 0.0}), diag_rho({0.0, 1.0})), 1.0, 1e-15);
  EXPECT_NEAR(trace_distance(diag_rho({0.7, 0.3}), diag_rho({0.5, 0.5})), 0.2, 1e-15);
}

TEST(Random, HilbertSchmidtStatesAreValidAndSeeded) {
  Rng a(5);
  Rng b(5);
  const DensityMatrix x = random_density(4, a);
  const DensityMatrix y = random_density(4, b);
  EXPECT_EQ(x.matrix(), y.matrix());
  EXPECT_NEAR(x.matrix().trace().real(), 1.0, 1e-14);
  const Matrix u = random_unitary(4, a);
  EXPECT_LE((u.adjoint() * u - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12);
}

}  // namespace
}  // namespace renyi
