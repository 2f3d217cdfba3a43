#include "renyi/measures.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace renyi {
namespace {

// log of sum_i exp(x_i) over finite entries.
double log_sum_exp(const RealVector& x) {
  double top = -std::numeric_limits<double>::infinity();
  for (Index i = 0; i < x.size(); ++i) top = std::max(top, x[i]);
  if (!std::isfinite(top)) return top;
  double acc = 0.0;
  for (Index i = 0; i < x.size(); ++i) acc += std::exp(x[i] - top);
  return top + std::log(acc);
}

// ln Tr rho^alpha from the spectrum; zero eigenvalues contribute nothing.
double log_trace_power(const RealVector& eigenvalues, double alpha) {
  RealVector logs(eigenvalues.size());
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    const double p = eigenvalues[i];
    logs[i] = p > 0.0 ? alpha * std::log(p) : -std::numeric_limits<double>::infinity();
  }
  return log_sum_exp(logs);
}

// |<r_i|s_j>|^2
Eigen::MatrixXd overlaps(const Spectrum& r, const Spectrum& s) {
  return (r.vectors.adjoint() * s.vectors).cwiseAbs2();
}

double finish_divergence(double trace, double alpha, const char* name) {
  if (!(trace > 0.0) || !std::isfinite(trace)) {
    throw Error(ErrorCode::SupportViolation,
                std::string(name) + ": trace functional is " + std::to_string(trace));
  }
  return std::log(trace) / (alpha - 1.0);
}

}  // namespace

RenyiOrder::RenyiOrder(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidArgument, "Renyi order must be a finite positive number");
  }
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (const double p : rho.spectrum().values) {
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

double renyi_entropy(const DensityMatrix& rho, RenyiOrder alpha) {
  if (alpha.von_neumann()) return von_neumann_entropy(rho);
  return log_trace_power(rho.spectrum().values, alpha.value()) / (1.0 - alpha.value());
}

double renyi_internal_energy(const DensityMatrix& rho, const HermitianOperator& h,
                             RenyiOrder alpha) {
  require_same_dim(rho.dim(), h.dim(), "renyi_internal_energy");
  if (alpha.von_neumann()) return expectation(rho, h);
  const Spectrum& spec = rho.spectrum();
  const RealVector weights = power_values(spec.values, alpha.value());
  // Tr[rho^a H] = sum_i w_i <v_i|H|v_i>
  const RealVector diag = (spec.vectors.adjoint() * h.matrix() * spec.vectors).diagonal().real();
  return weights.dot(diag) / weights.sum();
}

double von_neumann_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                    PowerPolicy policy) {
  require_same_dim(rho.dim(), sigma.dim(), "von_neumann_relative_entropy");
  const Spectrum& r = rho.spectrum();
  const Spectrum& s = sigma.spectrum();
  const Eigen::MatrixXd ov = overlaps(r, s);
  // <s_j|rho|s_j>
  const RealVector weight_on_sigma = ov.transpose() * r.values.cwiseMax(0.0);

  double value = -von_neumann_entropy(rho);
  for (Index j = 0; j < s.values.size(); ++j) {
    double sj = s.values[j];
    if (sj <= kEigenvalueTolerance) {
      if (policy.mode() == PowerPolicy::Mode::Floor) {
        sj = std::max(sj, policy.epsilon());
      } else if (weight_on_sigma[j] <= kEigenvalueTolerance ||
                 policy.mode() == PowerPolicy::Mode::ZeroExtend) {
        continue;
      } else {
        throw Error(ErrorCode::SupportViolation,
                    "von Neumann relative entropy: supp(rho) not contained in supp(sigma)");
      }
    } else if (policy.mode() == PowerPolicy::Mode::Floor) {
      sj = std::max(sj, policy.epsilon());
    }
    value -= weight_on_sigma[j] * std::log(sj);
  }
  return value;
}

double trad_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                             RenyiOrder alpha, PowerPolicy policy) {
  require_same_dim(rho.dim(), sigma.dim(), "trad_relative_entropy");
  if (alpha.von_neumann()) return von_neumann_relative_entropy(rho, sigma, policy);
  const double a = alpha.value();
  const Spectrum& r = rho.spectrum();
  const Spectrum& s = sigma.spectrum();
  const RealVector rp = power_values(r.values, a);
  const RealVector sp = power_values(s.values, 1.0 - a, policy);
  const double trace = rp.dot(overlaps(r, s) * sp);
  return finish_divergence(trace, a, "trad_relative_entropy");
}

double sandwiched_trace(const Matrix& factor, const DensityMatrix& rho, double alpha) {
  Matrix inner = factor * rho.matrix() * factor;
  inner = 0.5 * (inner + inner.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(inner, Eigen::EigenvaluesOnly);
  // The product is PSD up to roundoff; negative noise is dropped.
  double trace = 0.0;
  for (const double m : solver.eigenvalues()) {
    if (m > 0.0) trace += std::pow(m, alpha);
  }
  return trace;
}

double sandwiched_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                   RenyiOrder alpha, PowerPolicy policy) {
  require_same_dim(rho.dim(), sigma.dim(), "sandwiched_relative_entropy");
  if (alpha.von_neumann()) return von_neumann_relative_entropy(rho, sigma, policy);
  const double a = alpha.value();
  const HermitianOperator factor = spectral_power(sigma, (1.0 - a) / (2.0 * a), policy);
  return finish_divergence(sandwiched_trace(factor.matrix(), rho, a), a,
                           "sandwiched_relative_entropy");
}

double relative_entropy(Divergence variant, const DensityMatrix& rho,
                        const DensityMatrix& sigma, RenyiOrder alpha, PowerPolicy policy) {
  return variant == Divergence::Traditional
             ? trad_relative_entropy(rho, sigma, alpha, policy)
             : sandwiched_relative_entropy(rho, sigma, alpha, policy);
}

}  // namespace renyi
