#include "renyi/clausius.hpp"

#include <cmath>
#include <limits>

#include "renyi/io.hpp"
#include "renyi/thermal.hpp"

namespace renyi {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <typename F>
double or_nan(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SupportViolation || e.code() == ErrorCode::CutoffViolation ||
        e.code() == ErrorCode::NegativeBase) {
      return kNaN;
    }
    throw;
  }
}

Matrix qubit(double a00, double a01, double a11) {
  Matrix m(2, 2);
  m << a00, a01, a01, a11;
  return m;
}

}  // namespace

ClausiusRecord clausius_record(const DensityMatrix& rho_n, const DensityMatrix& rho_moved,
                               const DensityMatrix& rho_t, const HermitianOperator& h,
                               double beta, RenyiOrder alpha) {
  require_same_dim(rho_n.dim(), rho_moved.dim(), "clausius_record");
  require_same_dim(rho_n.dim(), rho_t.dim(), "clausius_record");
  require_same_dim(rho_n.dim(), h.dim(), "clausius_record");
  const double a = alpha.value();
  const Index d = h.dim();

  const Matrix p_n = spectral_power(rho_n, a).matrix();
  const Matrix p_m = spectral_power(rho_moved, a).matrix();
  const Matrix dp = p_m - p_n;
  const double norm = p_n.trace().real();
  const double u_n = renyi_internal_energy(rho_n, h, alpha);
  const double u_m = renyi_internal_energy(rho_moved, h, alpha);
  const double u_t = renyi_internal_energy(rho_t, h, alpha);
  const Matrix id = Matrix::Identity(d, d);

  ClausiusRecord r{};
  r.alpha = a;
  r.ds = renyi_entropy(rho_moved, alpha) - renyi_entropy(rho_n, alpha);
  r.q1 = beta * trace_product(dp, Matrix(h.matrix() - u_n * id)) / norm;
  r.q2 = beta * trace_product(dp, Matrix(h.matrix() - u_t * id)) / norm;
  r.q3 = beta * (u_m - u_n);
  r.d_trad = or_nan([&] {
    return trad_relative_entropy(rho_moved, rho_t, alpha) - trad_relative_entropy(rho_n, rho_t, alpha);
  });
  r.d_sand = or_nan([&] {
    return sandwiched_relative_entropy(rho_moved, rho_t, alpha) -
           sandwiched_relative_entropy(rho_n, rho_t, alpha);
  });
  r.d_delta_tilde_prime = r.d_sand + r.ds - r.q3;
  return r;
}

DensityMatrix reference_eta() { return validate_density(qubit(0.4, 0.2, 0.6)); }

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 50; ++k) grid.push_back(k / 10.0);
  return grid;
}

QubitExperiment qubit_experiment(double p0, double e1, double dq, const DensityMatrix& eta) {
  if (!(p0 > 0.0 && p0 < 1.0)) throw Error(ErrorCode::InvalidArgument, "p0 must lie in (0, 1)");
  const double p1 = 1.0 - p0;
  HermitianOperator h = HermitianOperator::diagonal(std::vector<double>{0.0, e1});
  DensityMatrix rho_t = DensityMatrix::diagonal(std::vector<double>{p0, p1});
  DensityMatrix rho_n = validate_density(qubit(p0 + dq, dq, p1 - dq));
  const Matrix basis = Matrix::Identity(2, 2);
  Channel map =
      build_measure_prepare_fixing(rho_t, complete_prepared_set(rho_t, eta, basis), basis);
  DensityMatrix moved = apply_channel(map, rho_n);
  return QubitExperiment{std::move(h), std::move(rho_t), std::move(rho_n), std::move(map),
                         std::move(moved)};
}

ClausiusRecord qubit_variation(double p0, double e1, double dq, const DensityMatrix& eta,
                              RenyiOrder alpha) {
  const QubitExperiment ex = qubit_experiment(p0, e1, dq, eta);
  const double beta = qubit_beta_closed_form(p0, e1, alpha);
  return clausius_record(ex.rho_n, ex.rho_moved, ex.rho_t, ex.h, beta, alpha);
}

std::vector<ClausiusRecord> clausius_sweep(double p0, double e1, double dq,
                                           const DensityMatrix& eta,
                                           const std::vector<double>& alphas) {
  const QubitExperiment ex = qubit_experiment(p0, e1, dq, eta);
  std::vector<ClausiusRecord> out;
  out.reserve(alphas.size());
  for (const double a : alphas) {
    const RenyiOrder alpha(a);
    const double beta = qubit_beta_closed_form(p0, e1, alpha);
    out.push_back(clausius_record(ex.rho_n, ex.rho_moved, ex.rho_t, ex.h, beta, alpha));
  }
  return out;
}

std::string clausius_csv(const std::vector<ClausiusRecord>& records) {
  std::string out = "alpha,dS,beta_dQ1,beta_dQ2,beta_dU,dD_trad,dD_sand,dDeltaTildePrime\n";
  for (const ClausiusRecord& r : records) {
    out += format_double(r.alpha);
    for (const double v : {r.ds, r.q1, r.q2, r.q3, r.d_trad, r.d_sand, r.d_delta_tilde_prime}) {
      out += ',' + format_double(v);
    }
    out += '\n';
  }
  return out;
}

PairOracle pair_oracle(double p0, double e1, double dq, RenyiOrder alpha) {
  if (alpha.von_neumann()) throw Error(ErrorCode::InvalidArgument, "closed forms need alpha != 1");
  const double a = alpha.value();
  const double p1 = 1.0 - p0;
  const double norm = std::pow(p0, a) + std::pow(p1, a);
  const double ds =
      -(a * dq / (1.0 - a)) * (std::pow(p0, a - 1.0) - std::pow(p1, a - 1.0)) / norm;
  const double dq_heat = a * dq * e1 * std::pow(p0 * p1, a - 1.0) / (norm * norm);
  return PairOracle{ds, qubit_beta_closed_form(p0, e1, alpha) * dq_heat};
}

StatePair rotated_pair_states(double p0, double dq) {
  const double p1 = 1.0 - p0;
  const double n = std::hypot(1.0 + dq, dq);
  ComplexVector e0(2);
  ComplexVector e1(2);
  e0 << (1.0 + dq) / n, dq / n;
  e1 << -dq / n, (1.0 + dq) / n;
  const Matrix proj0 = e0 * e0.adjoint();
  const Matrix proj1 = e1 * e1.adjoint();
  auto mix = [&](double q0, double q1) { return validate_density(Matrix(q0 * proj0 + q1 * proj1)); };
  return StatePair{mix(p0 + 2.0 * dq, p1 - 2.0 * dq), mix(p0 + dq, p1 - dq)};
}

ClausiusRecord rotated_pair_variation(double p0, double e1, double dq, RenyiOrder alpha) {
  const StatePair pair = rotated_pair_states(p0, dq);
  const HermitianOperator h = HermitianOperator::diagonal(std::vector<double>{0.0, e1});
  const DensityMatrix rho_t = DensityMatrix::diagonal(std::vector<double>{p0, 1.0 - p0});
  return clausius_record(pair.before, pair.after, rho_t, h, qubit_beta_closed_form(p0, e1, alpha),
                         alpha);
}

ClausiusRecord first_order_part(const std::function<ClausiusRecord(double)>& variation,
                                double dq) {
  const ClausiusRecord plus = variation(dq);
  const ClausiusRecord minus = variation(-dq);
  auto odd = [](double a, double b) { return 0.5 * (a - b); };
  return ClausiusRecord{plus.alpha,
                        odd(plus.ds, minus.ds),
                        odd(plus.q1, minus.q1),
                        odd(plus.q2, minus.q2),
                        odd(plus.q3, minus.q3),
                        odd(plus.d_trad, minus.d_trad),
                        odd(plus.d_sand, minus.d_sand),
                        odd(plus.d_delta_tilde_prime, minus.d_delta_tilde_prime)};
}

}  // namespace renyi
