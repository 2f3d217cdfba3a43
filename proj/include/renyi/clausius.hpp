#pragma once

#include <functional>
#include <string>
#include <vector>

#include "renyi/channel.hpp"
#include "renyi/measures.hpp"

namespace renyi {

// Changes produced by moving rho_N to rho_N' = rho_N + delta rho, all scaled by
// beta where they carry energy units:
//   ds      S_a(rho_N') - S_a(rho_N)
//   q1, q2  beta Tr[(rho_N'^a - rho_N^a)(H - U)] / Tr rho_N^a with U = U_N, U_T
//   q3      beta (U_a(rho_N') - U_a(rho_N))
//   d_trad, d_sand  change of D_a(. || rho_T) and D~_a(. || rho_T)
//   d_delta_tilde_prime  d_sand + ds - q3
// Entries that hit a support or cutoff violation are NaN.
struct ClausiusRecord {
  double alpha;
  double ds;
  double q1;
  double q2;
  double q3;
  double d_trad;
  double d_sand;
  double d_delta_tilde_prime;
};

ClausiusRecord clausius_record(const DensityMatrix& rho_n, const DensityMatrix& rho_moved,
                               const DensityMatrix& rho_t, const HermitianOperator& h,
                               double beta, RenyiOrder alpha);

// eta = 0.4|0><0| + 0.6|1><1| + 0.2(|0><1| + |1><0|).
DensityMatrix reference_eta();

// 0.1, 0.2, ..., 5.0.
std::vector<double> default_alpha_grid();

// Qubit experiment: H = diag(0, E1), rho_T = diag(p0, 1 - p0),
// rho_N = rho_T + dq (|0><0| - |1><1| + |0><1| + |1><0|), moved by the
// measure-prepare map with prepared states {tau, eta}.
struct QubitExperiment {
  HermitianOperator h;
  DensityMatrix rho_t;
  DensityMatrix rho_n;
  Channel map;
  DensityMatrix rho_moved;
};

QubitExperiment qubit_experiment(double p0, double e1, double dq, const DensityMatrix& eta);

// One record per alpha; beta from the closed form for each alpha.
std::vector<ClausiusRecord> clausius_sweep(double p0, double e1, double dq,
                                           const DensityMatrix& eta,
                                           const std::vector<double>& alphas);

// alpha,dS,beta_dQ1,beta_dQ2,beta_dU,dD_trad,dD_sand,dDeltaTildePrime
std::string clausius_csv(const std::vector<ClausiusRecord>& records);

// First-order closed forms for the noncommuting qubit pair below:
//   ds      = -[a dq / (1-a)] (p0^(a-1) - p1^(a-1)) / (p0^a + p1^a)
//   beta_dq = beta * a dq E1 (p0 p1)^(a-1) / (p0^a + p1^a)^2
// which agree identically. alpha = 1 is rejected.
struct PairOracle {
  double ds;
  double beta_dq;
};

PairOracle pair_oracle(double p0, double e1, double dq, RenyiOrder alpha);

// rho_N = (p0 + 2dq)|e0><e0| + (p1 - 2dq)|e1><e1| and rho_N' with dq in place
// of 2dq, where e0 ~ (1+dq, dq), e1 ~ (-dq, 1+dq) normalized exactly.
struct StatePair {
  DensityMatrix before;
  DensityMatrix after;
};

StatePair rotated_pair_states(double p0, double dq);

ClausiusRecord rotated_pair_variation(double p0, double e1, double dq, RenyiOrder alpha);
ClausiusRecord qubit_variation(double p0, double e1, double dq, const DensityMatrix& eta,
                              RenyiOrder alpha);

// Odd part [V(dq) - V(-dq)] / 2 of a variation, i.e. its first-order term up
// to O(dq^3).
ClausiusRecord first_order_part(const std::function<ClausiusRecord(double)>& variation,
                                double dq);

}  // namespace renyi
