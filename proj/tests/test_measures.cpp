#include <gtest/gtest.h>

#include <cmath>

#include "renyi/clausius.hpp"
#include "renyi/delta_terms.hpp"
#include "renyi/measures.hpp"
#include "renyi/random.hpp"
#include "test_support.hpp"

namespace renyi {
namespace {

using testing::diag_h;
using testing::diag_rho;

const std::vector<double> kGrid{0.3, 0.5, 0.9, 1.0, 1.5, 2.0, 3.0, 5.0};

TEST(RenyiOrder, RejectsNonPositive) {
  EXPECT_THROW(RenyiOrder(0.0), Error);
  EXPECT_THROW(RenyiOrder(-1.0), Error);
  EXPECT_TRUE(RenyiOrder(1.0).von_neumann());
  EXPECT_FALSE(RenyiOrder(1.0 + 1e-12).von_neumann());
}

TEST(RenyiEntropy, Examples) {
  EXPECT_NEAR(renyi_entropy(DensityMatrix::maximally_mixed(2), RenyiOrder(2)), std::log(2.0), 1e-15);
  EXPECT_NEAR(renyi_entropy(diag_rho({0.7, 0.3}), RenyiOrder(2)), -std::log(0.49 + 0.09), 1e-15);
  EXPECT_NEAR(renyi_entropy(diag_rho({1.0, 0.0}), RenyiOrder(0.5)), 0.0, 1e-15);
  EXPECT_NEAR(renyi_entropy(diag_rho({0.7, 0.3}), RenyiOrder(1)),
              -(0.7 * std::log(0.7) + 0.3 * std::log(0.3)), 1e-15);
}

TEST(RenyiEntropy, MatchesScalarFormulaInRotatedBasis) {
  Rng rng(21);
  const Matrix u = random_unitary(3, rng);
  const std::vector<double> p{0.5, 0.3, 0.2};
  const DensityMatrix rho = validate_density(Matrix(u * diag_rho(p).matrix() * u.adjoint()));
  for (const double a : kGrid) {
    EXPECT_NEAR(renyi_entropy(rho, RenyiOrder(a)), testing::renyi_entropy_of(p, a), 1e-13);
  }
}

TEST(RenyiInternalEnergy, Examples) {
  const HermitianOperator n = diag_h({0.0, 1.0});
  EXPECT_NEAR(renyi_internal_energy(DensityMatrix::maximally_mixed(2), n, RenyiOrder(3)), 0.5, 1e-15);
  EXPECT_NEAR(renyi_internal_energy(diag_rho({0.7, 0.3}), n, RenyiOrder(2)), 0.09 / 0.58, 1e-15);
  EXPECT_NEAR(renyi_internal_energy(diag_rho({0.7, 0.3}), n, RenyiOrder(1)), 0.3, 1e-15);
  EXPECT_THROW(renyi_internal_energy(diag_rho({0.7, 0.3}), diag_h({0, 1, 2}), RenyiOrder(2)), Error);
}

TEST(RelativeEntropy, Examples) {
  Rng rng(22);
  const DensityMatrix rho = random_density(3, rng);
  EXPECT_NEAR(trad_relative_entropy(rho, rho, RenyiOrder(0.7)), 0.0, 1e-12);
  EXPECT_NEAR(sandwiched_relative_entropy(rho, rho, RenyiOrder(3)), 0.0, 1e-12);

  const double expected = std::log(0.25 / 0.7 + 0.25 / 0.3);
  const DensityMatrix half = diag_rho({0.5, 0.5});
  const DensityMatrix therm = diag_rho({0.7, 0.3});
  EXPECT_NEAR(trad_relative_entropy(half, therm, RenyiOrder(2)), expected, 1e-14);
  EXPECT_NEAR(sandwiched_relative_entropy(half, therm, RenyiOrder(2)), expected, 1e-14);
}

TEST(RelativeEntropy, SupportConventions) {
  const DensityMatrix up = diag_rho({1.0, 0.0});
  const DensityMatrix down = diag_rho({0.0, 1.0});
  for (const Divergence v : {Divergence::Traditional, Divergence::Sandwiched}) {
    EXPECT_THROW(relative_entropy(v, up, down, RenyiOrder(2)), Error);
    EXPECT_THROW(relative_entropy(v, up, down, RenyiOrder(0.5)), Error);
    EXPECT_THROW(relative_entropy(v, up, down, RenyiOrder(1)), Error);
  }
  // Overlapping supports stay finite for alpha < 1.
  const DensityMatrix partial = diag_rho({0.5, 0.5});
  EXPECT_NEAR(trad_relative_entropy(up, partial, RenyiOrder(0.5)), std::log(2.0), 1e-14);
  // zero-extend drops the unsupported directions of sigma.
  EXPECT_NO_THROW(trad_relative_entropy(partial, up, RenyiOrder(0.5), PowerPolicy::zero_extend()));
}

TEST(RelativeEntropy, SandwichedBelowTraditionalForNoncommutingPair) {
  const DensityMatrix rho = validate_density(testing::qubit_matrix(0.6, Complex(0.3, 0.1), 0.4));
  const DensityMatrix sigma = diag_rho({0.8, 0.2});
  const double trad = trad_relative_entropy(rho, sigma, RenyiOrder(2));
  const double sand = sandwiched_relative_entropy(rho, sigma, RenyiOrder(2));
  EXPECT_LT(sand, trad);
  // Direct 2x2 evaluation: Tr[rho^2 sigma^-1] for the traditional form.
  const Matrix r2 = rho.matrix() * rho.matrix();
  const double direct = std::log(r2(0, 0).real() / 0.8 + r2(1, 1).real() / 0.2);
  EXPECT_NEAR(trad, direct, 1e-13);
}

TEST(RelativeEntropy, NonNegativeOnRandomPairs) {
  Rng rng(23);
  for (const double a : kGrid) {
    for (int k = 0; k < 30; ++k) {
      const Index d = 2 + k % 4;
      const DensityMatrix rho = random_density(d, rng);
      const DensityMatrix sigma = random_density(d, rng);
      EXPECT_GE(trad_relative_entropy(rho, sigma, RenyiOrder(a)), -1e-10);
      EXPECT_GE(sandwiched_relative_entropy(rho, sigma, RenyiOrder(a)), -1e-10);
    }
  }
}

TEST(RelativeEntropy, CommutingReduction) {
  Rng rng(24);
  for (const double a : kGrid) {
    const Matrix u = random_unitary(3, rng);
    auto rotated = [&](std::vector<double> p) {
      return validate_density(Matrix(u * diag_rho(p).matrix() * u.adjoint()));
    };
    const DensityMatrix rho = rotated({0.6, 0.3, 0.1});
    const DensityMatrix sigma = rotated({0.2, 0.5, 0.3});
    EXPECT_NEAR(trad_relative_entropy(rho, sigma, RenyiOrder(a)),
                sandwiched_relative_entropy(rho, sigma, RenyiOrder(a)), 1e-10);
  }
}

TEST(RelativeEntropy, AlphaToOneContinuity) {
  Rng rng(25);
  for (int k = 0; k < 20; ++k) {
    const Index d = 2 + k % 7;
    const DensityMatrix rho = random_density(d, rng);
    const DensityMatrix sigma = random_density(d, rng);
    const double s = von_neumann_entropy(rho);
    const double rel = von_neumann_relative_entropy(rho, sigma);
    for (const double a : {1.0 - 1e-4, 1.0 + 1e-4}) {
      EXPECT_NEAR(renyi_entropy(rho, RenyiOrder(a)), s, 1e-3);
      EXPECT_NEAR(trad_relative_entropy(rho, sigma, RenyiOrder(a)), rel, 1e-3);
      EXPECT_NEAR(sandwiched_relative_entropy(rho, sigma, RenyiOrder(a)), rel, 1e-3);
    }
  }
}

TEST(DeltaTerms, VanishAtTheThermalState) {
  const ThermalState th = solve_thermal_state(diag_h({0.0, 1.0}), 1.1, RenyiOrder(2));
  for (const Divergence v : {Divergence::Traditional, Divergence::Sandwiched}) {
    const DeltaTerms t = delta_terms(th.state, th, v);
    EXPECT_NEAR(t.delta, 0.0, 1e-12);
    EXPECT_NEAR(t.delta_prime, 0.0, 1e-12);
    EXPECT_EQ(t.variant, v);
  }
}

TEST(DeltaTerms, DefiningRelationIsExact) {
  Rng rng(26);
  for (const double a : {0.5, 2.0}) {
    const HermitianOperator h = random_hermitian(3, rng);
    const ThermalState th = solve_thermal_state(h, testing::no_cutoff_beta(h, a, rng), RenyiOrder(a));
    const DensityMatrix rho = random_density(3, rng);
    const double u_n = renyi_internal_energy(rho, h, th.alpha);
    for (const Divergence v : {Divergence::Traditional, Divergence::Sandwiched}) {
      const DeltaTerms t = delta_terms(rho, th, v);
      EXPECT_EQ(t.delta_prime - th.beta * (th.energy - u_n) - t.delta, 0.0);
    }
  }
}

TEST(DeltaTerms, ReferenceQubitDeltaPrimeNonPositive) {
  const double beta = qubit_beta_closed_form(0.7, 1.0, RenyiOrder(2));
  const ThermalState th = solve_thermal_state(diag_h({0.0, 1.0}), beta, RenyiOrder(2));
  const QubitExperiment ex = qubit_experiment(0.7, 1.0, 0.01, reference_eta());
  EXPECT_LE(delta_terms(ex.rho_n, th, Divergence::Traditional).delta_prime, 0.0);
  EXPECT_LE(delta_terms(ex.rho_n, th, Divergence::Sandwiched).delta_prime, 0.0);
}

TEST(DeltaTerms, TraditionalMatchesScalarFormula) {
  const ThermalState th = solve_thermal_state(diag_h({0.0, 1.0}), 0.8, RenyiOrder(3));
  const DensityMatrix rho = diag_rho({0.6, 0.4});
  const double u_n = testing::escort_energy_of({0.6, 0.4}, {0.0, 1.0}, 3.0);
  const double expected = std::log(1.0 - 0.8 * (1.0 - 3.0) * (u_n - th.energy)) / 2.0;
  EXPECT_NEAR(delta_terms(rho, th, Divergence::Traditional).delta, expected, 1e-14);
}

TEST(DeltaTerms, VanishAsAlphaApproachesOne) {
  Rng rng(27);
  const HermitianOperator h = random_hermitian(3, rng);
  const DensityMatrix rho = random_density(3, rng);
  for (const Divergence v : {Divergence::Traditional, Divergence::Sandwiched}) {
    double previous = INFINITY;
    for (const double eps : {1e-1, 1e-2, 1e-3}) {
      const ThermalState th = solve_thermal_state(h, 0.7, RenyiOrder(1.0 + eps));
      const double dp = std::abs(delta_terms(rho, th, v).delta_prime);
      EXPECT_LT(dp, previous);
      previous = dp;
    }
    EXPECT_LT(previous, 1e-3);
    const ThermalState gibbs = solve_thermal_state(h, 0.7, RenyiOrder(1.0));
    EXPECT_EQ(delta_terms(rho, gibbs, v).delta_prime, 0.0);
  }
}

TEST(DeltaTerms, CutoffViolation) {
  // alpha < 1 with a cut level: A has a negative eigenvalue.
  const ThermalState th = solve_thermal_state(diag_h({0.0, 4.0}), 1.0, RenyiOrder(0.5));
  ASSERT_TRUE(th.cutoff_applied);
  try {
    delta_terms(diag_rho({0.5, 0.5}), th, Divergence::Sandwiched);
    FAIL() << "expected CutoffViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CutoffViolation);
  }
}

}  // namespace
}  // namespace renyi
