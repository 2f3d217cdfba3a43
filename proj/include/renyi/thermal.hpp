#pragma once

#include "renyi/measures.hpp"
#include "renyi/operator.hpp"

namespace renyi {

// Self-consistent Renyi thermal state
//
//   rho = A^(1/(1-alpha)) / Z,   A = 1 - (1-alpha) beta (H - U),
//   U = Tr[rho^alpha H] / Tr rho^alpha.
//
// For alpha < 1 the negative part of A is cut to zero (cutoff_applied); for
// alpha > 1 every eigenvalue of A must stay positive.
struct ThermalState {
  DensityMatrix state;
  HermitianOperator hamiltonian;
  RenyiOrder alpha;
  double beta;
  double partition_function;  // Z
  double log_partition;       // ln Z, evaluated without cancellation near beta = 0
  double energy;              // U
  double entropy;             // S_alpha(state), from the state's spectrum
  double free_energy;         // U - S/beta
  HermitianOperator base;     // A
  bool cutoff_applied;
  Spectrum energy_levels;     // eigenpairs of H, ascending energy
};

// Works in the eigenbasis of H. The scalar equation U = Phi(U) is scanned on
// 64 points of [e_min, e_max]; every sign change is refined by bisection to
// |U - Phi(U)| <= 1e-12 (e_max - e_min). Distinct roots raise MultipleRoots.
// If the scan finds nothing, a damped fixed-point iteration (0.5, 1e4 steps)
// is tried before NoConvergence. beta = 0 and a degenerate spectrum give the
// maximally mixed state; alpha = 1 gives the Gibbs state.
ThermalState solve_thermal_state(const HermitianOperator& h, double beta, RenyiOrder alpha);

// e^{-beta H} / Tr e^{-beta H}.
DensityMatrix gibbs_state(const HermitianOperator& h, double beta);

// Inverse temperature of the qubit H = E1 |1><1| whose Renyi thermal state is
// diag(p0, 1 - p0):
//   beta = (p0^a + p1^a)(p0^(1-a) - p1^(1-a)) / (E1 (1-a)),   ln(p0/p1)/E1 at a = 1.
double qubit_beta_closed_form(double p0, double e1, RenyiOrder alpha);

// Central difference [S(beta+) - S(beta-)] / [U(beta+) - U(beta-)] with
// beta+- = beta (1 +- relative_step). Entropies are taken as ln Z, which equals
// S_alpha at every converged solution and stays accurate near beta = 0.
double beta_consistency_check(const ThermalState& th, double relative_step = 1e-5);

}  // namespace renyi
