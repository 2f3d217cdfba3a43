#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "renyi/process.hpp"
#include "test_support.hpp"

namespace renyi {
namespace {

using testing::diag_h;
using testing::diag_rho;

StateFamily qubit_thermal(double alpha) {
  return StateFamily::thermal(qubit_gap_family(0.25, 2.5), RenyiOrder(alpha));
}

StateFamily qubit_deformed(double alpha) {
  return StateFamily::deformed(qubit_gap_family(0.25, 2.5), RenyiOrder(alpha),
                               measure_prepare_factory(DensityMatrix::maximally_mixed(2), 0.3),
                               level_rotation(2, 0.15));
}

TEST(HamiltonianFamily, QubitGap) {
  const HamiltonianFamily f = qubit_gap_family(0.5, 3.0);
  EXPECT_EQ(f(2.0).matrix(), diag_h({0.0, 2.0}).matrix());
  EXPECT_NO_THROW(probe_continuity(f));
}

TEST(HamiltonianFamily, DiscontinuousFamilyRejected) {
  const HamiltonianFamily jump{[](double g) { return diag_h({0.0, g > 0.5 ? 1.0 : 0.0}); }, 0.5, 1.5};
  EXPECT_THROW(probe_continuity(jump), Error);
}

TEST(StateFamily, ThermalPointMatchesSolver) {
  const FamilyPoint p = qubit_thermal(2.0).evaluate(1.5, 0.8);
  const ThermalState th = solve_thermal_state(diag_h({0.0, 1.5}), 1.0 / 0.8, RenyiOrder(2));
  EXPECT_LE(trace_distance(p.state, th.state), 1e-14);
}

TEST(StateFamily, OutOfRangeGammaRejected) {
  EXPECT_THROW(qubit_thermal(2.0).evaluate(3.0, 1.0), Error);
}

TEST(StateFamily, DeformedIsStationaryAndNotThermal) {
  const FamilyPoint p = qubit_deformed(2.0).evaluate(1.0, 1.0);
  EXPECT_GT(trace_distance(p.state, p.thermal.state), 1e-3);
  EXPECT_GT(std::abs(p.state.matrix()(0, 1)), 1e-4);
}

TEST(StepFirstLaw, NullStep) {
  const DensityMatrix rho = diag_rho({0.6, 0.4});
  const HermitianOperator h = diag_h({0.0, 1.0});
  const FirstLawStep s = step_first_law(rho, h, rho, h, RenyiOrder(2));
  EXPECT_EQ(s.du, 0.0);
  EXPECT_EQ(s.dq, 0.0);
  EXPECT_EQ(s.dw, 0.0);
}

TEST(StepFirstLaw, PureWorkStep) {
  const DensityMatrix rho = diag_rho({0.6, 0.4});
  const FirstLawStep s = step_first_law(rho, diag_h({0.0, 1.0}), rho, diag_h({0.0, 1.2}), RenyiOrder(2));
  EXPECT_EQ(s.dq, 0.0);
  EXPECT_NEAR(s.dw, s.du, 1e-15);
  // escort weights 0.36, 0.16 -> dU = 0.2 * 0.16 / 0.52
  EXPECT_NEAR(s.du, 0.2 * 0.16 / 0.52, 1e-15);
}

TEST(Isotherm, ResidualHalvesWhenStepsDouble) {
  const StateFamily f = qubit_thermal(2.0);
  double previous = isotherm_decomposition(f, 1.0, 1.1, 1.0, 2).residual;
  for (const int steps : {4, 8, 16}) {
    const double r = isotherm_decomposition(f, 1.0, 1.1, 1.0, steps).residual;
    const double ratio = previous / r;
    EXPECT_GE(ratio, 1.7);
    EXPECT_LE(ratio, 2.3);
    previous = r;
  }
}

TEST(Isotherm, ZeroLengthPath) {
  const StrokeReport r = isotherm_decomposition(qubit_thermal(2.0), 1.3, 1.3, 1.0, 10);
  EXPECT_EQ(r.du, 0.0);
  EXPECT_EQ(r.heat_total, 0.0);
  EXPECT_EQ(r.work_excess, 0.0);
  EXPECT_EQ(r.residual, 0.0);
}

TEST(Isotherm, ThermalFamilyHasNoHousekeeping) {
  const StrokeReport r = isotherm_decomposition(qubit_thermal(2.0), 1.0, 2.0, 1.0, 200);
  EXPECT_LE(std::abs(r.heat_housekeeping), 1e-2);
  const StrokeReport fine = isotherm_decomposition(qubit_thermal(2.0), 1.0, 2.0, 1.0, 400);
  EXPECT_LT(std::abs(fine.heat_housekeeping), std::abs(r.heat_housekeeping));
}

TEST(Isotherm, RichardsonClosesFirstLaw) {
  IsothermOptions opt;
  opt.richardson = true;
  const StrokeReport r = isotherm_decomposition(qubit_thermal(2.0), 1.0, 2.0, 1.0, 10000, opt);
  EXPECT_LE(std::abs(r.residual), 1e-6);
  EXPECT_LE(std::abs(r.du - r.heat_excess - r.work_excess), 1e-6);
}

TEST(Isotherm, RejectsBadStepCounts) {
  EXPECT_THROW(isotherm_decomposition(qubit_thermal(2.0), 1.0, 2.0, 1.0, 1), Error);
  IsothermOptions opt;
  opt.richardson = true;
  EXPECT_THROW(isotherm_decomposition(qubit_thermal(2.0), 1.0, 2.0, 1.0, 11, opt), Error);
}

TEST(Adiabat, GibbsFamilyScalesGammaWithTemperature) {
  const double g = solve_adiabat(qubit_thermal(1.0), 2.0, 2.0, 1.0);
  EXPECT_NEAR(g, 1.0, 1e-9);
}

TEST(Adiabat, RenyiEntropyIsPreserved) {
  const StateFamily f = qubit_thermal(2.0);
  const double g = solve_adiabat(f, 2.0, 2.0, 1.0);
  const double s0 = renyi_entropy(f.evaluate(2.0, 2.0).state, RenyiOrder(2));
  const double s1 = renyi_entropy(f.evaluate(g, 1.0).state, RenyiOrder(2));
  EXPECT_NEAR(s0, s1, 1e-10);
}

TEST(Adiabat, NoBracketOutsideRange) {
  try {
    solve_adiabat(StateFamily::thermal(qubit_gap_family(1.5, 2.5), RenyiOrder(1)), 2.0, 1.0, 0.1);
    FAIL() << "expected NoBracket";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoBracket);
  }
}

class CarnotFamilies : public ::testing::TestWithParam<std::tuple<double, bool>> {};

TEST_P(CarnotFamilies, EfficiencyMatchesCarnotBound) {
  const auto [alpha, deformed] = GetParam();
  const StateFamily f = deformed ? qubit_deformed(alpha) : qubit_thermal(alpha);
  CarnotOptions opt;
  opt.steps = 1000;
  const CycleReport r = run_carnot_cycle(f, 2.0, 1.0, 2.0, 1.0, opt);
  EXPECT_NEAR(r.efficiency, 0.5, 1e-6);
  EXPECT_LE(r.closure_distance, 1e-8);
  EXPECT_LE(std::abs(r.net_entropy), 1e-9);
  EXPECT_GT(r.qex1, 0.0);
  EXPECT_GT(r.total_work, 0.0);
}

INSTANTIATE_TEST_SUITE_P(Alphas, CarnotFamilies,
                         ::testing::Combine(::testing::Values(0.5, 0.9, 1.0, 2.0, 3.0),
                                            ::testing::Bool()));

TEST(Carnot, QubitGammaSchedule) {
  const CycleReport r = run_carnot_cycle(qubit_thermal(2.0), 2.0, 1.0, 2.0, 1.0, {200, {}});
  EXPECT_NEAR(r.gammas[2], 0.5, 1e-9);
  EXPECT_NEAR(r.gammas[3], 1.0, 1e-9);
}

TEST(Carnot, SandwichedRouteGivesSameEfficiency) {
  CarnotOptions opt;
  opt.steps = 400;
  opt.isotherm.route = Divergence::Sandwiched;
  const CycleReport r = run_carnot_cycle(qubit_deformed(2.0), 2.0, 1.0, 2.0, 1.0, opt);
  EXPECT_NEAR(r.efficiency, 0.5, 1e-6);
}

TEST(Carnot, EqualTemperaturesExtractNoWork) {
  const CycleReport r = run_carnot_cycle(qubit_thermal(2.0), 2.0, 1.0, 1.0, 1.0, {200, {}});
  EXPECT_NEAR(r.total_work, 0.0, 1e-12);
  EXPECT_NEAR(r.efficiency, 0.0, 1e-12);
  EXPECT_EQ(r.analytic, 0.0);
}

TEST(Carnot, EqualGammasRejected) {
  EXPECT_THROW(run_carnot_cycle(qubit_thermal(2.0), 1.0, 1.0, 2.0, 1.0, {200, {}}), Error);
}

TEST(Carnot, CsvLayout) {
  const CycleReport r = run_carnot_cycle(qubit_thermal(2.0), 2.0, 1.0, 2.0, 1.0, {200, {}});
  std::istringstream csv(cycle_csv(r));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "stroke,dU,heatTotal,heatExcess,heatHousekeeping,workExcess,entropyChange");
  for (int k = 1; k <= 4; ++k) {
    ASSERT_TRUE(std::getline(csv, line));
    EXPECT_EQ(line.substr(0, 2), std::to_string(k) + ",");
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 6);
  }
  ASSERT_TRUE(std::getline(csv, line));
  EXPECT_EQ(line.rfind("cycle,", 0), 0u);
  EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
  EXPECT_FALSE(std::getline(csv, line));
  EXPECT_EQ(cycle_csv(r), cycle_csv(run_carnot_cycle(qubit_thermal(2.0), 2.0, 1.0, 2.0, 1.0, {200, {}})));
}

}  // namespace
}  // namespace renyi
