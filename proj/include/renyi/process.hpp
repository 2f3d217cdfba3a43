#pragma once

#include <array>
#include <functional>
#include <string>

#include "renyi/channel.hpp"
#include "renyi/free_energy.hpp"
#include "renyi/thermal.hpp"

namespace renyi {

// gamma -> H(gamma) on [gamma_min, gamma_max].
struct HamiltonianFamily {
  std::function<HermitianOperator(double)> evaluate;
  double gamma_min;
  double gamma_max;

  HermitianOperator operator()(double gamma) const { return evaluate(gamma); }
};

// H(gamma) = gamma |1><1| on a qubit.
HamiltonianFamily qubit_gap_family(double gamma_min, double gamma_max);

// Evaluates the family on a 100-point grid and checks that max|H(g + h) - H(g)|
// shrinks with h. Throws InvalidArgument otherwise.
void probe_continuity(const HamiltonianFamily& family);

struct FamilyPoint {
  ThermalState thermal;
  DensityMatrix state;
};

// Channel fixing the thermal state at (gamma, T).
using ChannelFactory =
    std::function<Channel(double gamma, double temperature, const ThermalState& thermal)>;

// Stationary states indexed by (gamma, T). The thermal kind returns the Renyi
// thermal state of H(gamma) at beta = 1/T. The deformed kind returns
// channel(gamma, T)[W rho_T W^dagger] for a fixed unitary W; the channel fixes
// rho_T, so W = 1 would give back the thermal family.
class StateFamily {
 public:
  enum class Kind { Thermal, Deformed };

  static StateFamily thermal(HamiltonianFamily hamiltonian, RenyiOrder alpha);
  static StateFamily deformed(HamiltonianFamily hamiltonian, RenyiOrder alpha,
                              ChannelFactory factory, Matrix kick);

  FamilyPoint evaluate(double gamma, double temperature) const;

  Kind kind() const noexcept { return kind_; }
  RenyiOrder alpha() const noexcept { return alpha_; }
  const HamiltonianFamily& hamiltonian() const noexcept { return hamiltonian_; }

 private:
  StateFamily(Kind kind, HamiltonianFamily hamiltonian, RenyiOrder alpha, ChannelFactory factory,
              Matrix kick);

  Kind kind_;
  HamiltonianFamily hamiltonian_;
  RenyiOrder alpha_;
  ChannelFactory factory_;
  Matrix kick_;
};

// w * identity + (1 - w) * measure-prepare{tau, eta, ..., eta} in the energy
// eigenbasis of the thermal state.
ChannelFactory measure_prepare_factory(DensityMatrix eta, double identity_weight);

// exp(-i theta Y) acting on levels 0 and 1, identity elsewhere.
Matrix level_rotation(Index dim, double theta);

struct FirstLawStep {
  double du;
  double dq;
  double dw;
  double residual;  // du - dq - dw
};

// One forward-difference step of the Renyi first law, state-side quantities at
// the step start:
//   dQ = Tr[(rho1^a - rho0^a)(H0 - U0)] / Tr rho0^a,  dW = Tr[rho0^a (H1 - H0)] / Tr rho0^a.
FirstLawStep step_first_law(const DensityMatrix& rho0, const HermitianOperator& h0,
                            const DensityMatrix& rho1, const HermitianOperator& h1,
                            RenyiOrder alpha);

// Totals over a stroke. Ledger sign: every entry is absorbed by the system,
// so du = heat_excess + work_excess up to discretization error.
struct StrokeReport {
  double du = 0.0;
  double heat_total = 0.0;
  double heat_excess = 0.0;
  double heat_housekeeping = 0.0;
  double work_raw = 0.0;
  double work_excess = 0.0;
  double free_energy_change = 0.0;
  double entropy_change = 0.0;
  double residual = 0.0;  // sum of first-law step residuals
};

struct IsothermOptions {
  Divergence route = Divergence::Traditional;  // which modified free energy supplies dW_ex
  bool richardson = false;                     // combine N and N/2 steps as 2 L(N) - L(N/2)
};

// Uniform gamma grid with `steps` intervals at fixed T. dW_ex is the increment
// of the modified free energy, dQ_hk = dW_ex - dW and dQ_ex = dQ - dQ_hk.
StrokeReport isotherm_decomposition(const StateFamily& family, double gamma0, double gamma1,
                                    double temperature, int steps, IsothermOptions options = {});

// gamma at T_end whose entropy equals S(gamma_start, T_start). A 64-point scan
// of gamma range brackets the root (NoBracket, NonMonotone), then bisection.
double solve_adiabat(const StateFamily& family, double gamma_start, double t_start,
                     double t_end);

struct CarnotOptions {
  int steps = 10000;
  IsothermOptions isotherm;
};

struct CycleReport {
  std::array<StrokeReport, 4> strokes;
  std::array<double, 4> gammas;
  std::array<double, 4> work_by_system;  // W_ex,k from free-energy and entropy endpoints
  std::array<double, 4> heat_absorbed;   // Q_ex,k, zero on the adiabats
  double t_hot;
  double t_cold;
  double total_work;
  double qex1;
  double efficiency;  // total_work / qex1
  double analytic;    // 1 - Tc/Th
  double closure_distance;
  double net_entropy;
  // Largest mismatch between the endpoint expressions and the path-integrated
  // stroke ledgers.
  double ledger_discrepancy;
};

inline constexpr double kCycleClosureTolerance = 1e-8;

// Isotherm (g1 -> g2, Th), adiabat (g2 -> g3, Th -> Tc), isotherm (g3 -> g4, Tc),
// adiabat (g4 -> g1, Tc -> Th), with g4 the adiabat partner of g1.
// CycleNotClosed when the state re-derived from g4 misses the start by more
// than 1e-8 in trace distance.
CycleReport run_carnot_cycle(const StateFamily& family, double gamma1, double gamma2, double t_hot,
                             double t_cold, CarnotOptions options = {});

// stroke,dU,heatTotal,heatExcess,heatHousekeeping,workExcess,entropyChange rows,
// then cycle,totalWork,Qex1,efficiency,analytic.
std::string cycle_csv(const CycleReport& report);

}  // namespace renyi
