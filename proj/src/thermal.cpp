#include "renyi/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace renyi {
namespace {

constexpr int kScanPoints = 64;
constexpr int kBisectionIterations = 300;
constexpr double kResidualTolerance = 1e-12;
constexpr double kDistinctRootTolerance = 1e-9;
constexpr double kDamping = 0.5;
constexpr int kFixedPointIterations = 10000;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln(sum exp(x)) - ln d. Near beta = 0 all x are small and the offset is
// written as log1p(mean expm1(x)), which keeps differences of ln Z accurate.
double log_sum_exp_offset(const RealVector& x) {
  const double top = x.maxCoeff();
  const double n = static_cast<double>(x.size());
  if (!std::isfinite(top)) return top;
  if (x.minCoeff() > -0.5 && top < 0.5) {
    double acc = 0.0;
    for (const double v : x) acc += std::expm1(v);
    return std::log1p(acc / n);
  }
  double acc = 0.0;
  for (const double v : x) acc += std::exp(v - top);
  return top + std::log(acc) - std::log(n);
}

double log_sum_exp(const RealVector& x) {
  return std::log(static_cast<double>(x.size())) + log_sum_exp_offset(x);
}

// The scalar self-consistency problem in the energy eigenbasis.
class EscortMap {
 public:
  EscortMap(const RealVector& levels, double beta, double alpha)
      : e_(levels), beta_(beta), alpha_(alpha) {}

  // ln g_i(U) with g_i = max(f_i, 0)^(1/(1-alpha)); empty when some f_i <= 0
  // for alpha > 1.
  std::optional<RealVector> log_weights(double u) const {
    RealVector out(e_.size());
    const double k = (1.0 - alpha_) * beta_;
    for (Index i = 0; i < e_.size(); ++i) {
      const double x = -k * (e_[i] - u);  // f_i - 1
      if (x <= -1.0) {
        if (alpha_ > 1.0) return std::nullopt;
        out[i] = kNegInf;
      } else {
        out[i] = std::log1p(x) / (1.0 - alpha_);
      }
    }
    return out;
  }

  std::optional<double> mapped(double u) const {
    const auto logg = log_weights(u);
    if (!logg) return std::nullopt;
    const RealVector la = alpha_ * *logg;
    const double top = la.maxCoeff();
    double num = 0.0;
    double den = 0.0;
    for (Index i = 0; i < e_.size(); ++i) {
      const double w = std::exp(la[i] - top);
      num += w * e_[i];
      den += w;
    }
    return num / den;
  }

  // Phi(U) - U; infeasible points (alpha > 1 beyond the cutoff) lie past the
  // last root, where the residual is negative, so they report -spread.
  double residual(double u) const {
    const auto phi = mapped(u);
    if (!phi) return -(e_.maxCoeff() - e_.minCoeff());
    return *phi - u;
  }

 private:
  const RealVector& e_;
  double beta_;
  double alpha_;
};

double bisect(const EscortMap& map, double lo, double hi) {
  double r_lo = map.residual(lo);
  double r_hi = map.residual(hi);
  for (int it = 0; it < kBisectionIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double r_mid = map.residual(mid);
    if (r_mid == 0.0) return mid;
    if ((r_mid > 0.0) == (r_lo > 0.0)) {
      lo = mid;
      r_lo = r_mid;
    } else {
      hi = mid;
      r_hi = r_mid;
    }
  }
  return std::abs(r_lo) <= std::abs(r_hi) ? lo : hi;
}

std::vector<double> scan_roots(const EscortMap& map, double e_min, double e_max) {
  const double spread = e_max - e_min;
  const double tol = kResidualTolerance * spread;
  std::vector<double> grid(kScanPoints);
  std::vector<double> res(kScanPoints);
  for (int k = 0; k < kScanPoints; ++k) {
    grid[k] = k + 1 == kScanPoints ? e_max : e_min + spread * k / (kScanPoints - 1);
    res[k] = map.residual(grid[k]);
  }

  std::vector<double> roots;
  for (int k = 0; k < kScanPoints; ++k) {
    if (std::abs(res[k]) <= tol) roots.push_back(grid[k]);
  }
  for (int k = 0; k + 1 < kScanPoints; ++k) {
    if (std::abs(res[k]) <= tol || std::abs(res[k + 1]) <= tol) continue;
    if ((res[k] > 0.0) != (res[k + 1] > 0.0)) {
      const double u = bisect(map, grid[k], grid[k + 1]);
      if (std::abs(map.residual(u)) <= tol) roots.push_back(u);
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> distinct;
  for (const double u : roots) {
    if (distinct.empty() || u - distinct.back() > kDistinctRootTolerance * spread) {
      distinct.push_back(u);
    }
  }
  return distinct;
}

double damped_fixed_point(const EscortMap& map, double e_min, double e_max) {
  const double tol = kResidualTolerance * (e_max - e_min);
  double u = e_min;
  for (int it = 0; it < kFixedPointIterations; ++it) {
    const auto phi = map.mapped(u);
    if (!phi) {
      throw Error(ErrorCode::InfeasibleConstraint,
                  "no admissible energy keeps 1 - (1-alpha) beta (H - U) positive");
    }
    if (std::abs(*phi - u) <= tol) return u;
    u = (1.0 - kDamping) * u + kDamping * *phi;
  }
  throw Error(ErrorCode::NoConvergence, "damped fixed-point iteration exhausted its budget");
}

ThermalState uniform_state(const HermitianOperator& h, const Spectrum& levels, double beta,
                           RenyiOrder alpha) {
  const Index d = h.dim();
  const double u = levels.values.mean();
  const double s = std::log(static_cast<double>(d));
  return ThermalState{
      DensityMatrix::maximally_mixed(d),
      h,
      alpha,
      beta,
      static_cast<double>(d),
      s,
      u,
      s,
      beta > 0.0 ? u - s / beta : -std::numeric_limits<double>::infinity(),
      HermitianOperator::identity(d),
      false,
      levels,
  };
}

// ln g_i at a converged solution, recomputed from the stored energy.
RealVector solution_log_weights(const ThermalState& th) {
  const RealVector& e = th.energy_levels.values;
  if (th.alpha.von_neumann()) return (-th.beta * (e.array() - th.energy)).matrix();
  if (th.beta == 0.0) return RealVector::Zero(e.size());
  const auto logg = EscortMap(e, th.beta, th.alpha.value()).log_weights(th.energy);
  return logg ? *logg : RealVector::Zero(e.size());
}

}  // namespace

ThermalState solve_thermal_state(const HermitianOperator& h, double beta, RenyiOrder alpha) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorCode::InvalidArgument, "beta must be finite and non-negative");
  }
  Spectrum levels = h.spectrum();
  const RealVector& e = levels.values;
  const double e_min = e.minCoeff();
  const double e_max = e.maxCoeff();
  const double spread = e_max - e_min;
  const double scale = std::max(1.0, e.cwiseAbs().maxCoeff());

  if (beta == 0.0 || spread <= kResidualTolerance * scale) {
    return uniform_state(h, levels, beta, alpha);
  }

  const double a = alpha.value();
  RealVector logg(e.size());
  double u = 0.0;
  if (alpha.von_neumann()) {
    for (Index i = 0; i < e.size(); ++i) logg[i] = -beta * (e[i] - e_min);
    const double log_z = log_sum_exp(logg);
    RealVector p = (logg.array() - log_z).exp();
    u = p.dot(e);
    logg = (-beta * (e.array() - u)).matrix();
  } else {
    const EscortMap map(e, beta, a);
    const std::vector<double> roots = scan_roots(map, e_min, e_max);
    if (roots.size() > 1) {
      std::string list;
      for (const double r : roots) list += " " + std::to_string(r);
      throw Error(ErrorCode::MultipleRoots, "self-consistent energies:" + list);
    }
    u = roots.empty() ? damped_fixed_point(map, e_min, e_max) : roots.front();
    logg = *map.log_weights(u);
  }

  const double log_z = log_sum_exp(logg);
  RealVector p(e.size());
  for (Index i = 0; i < e.size(); ++i) p[i] = std::exp(logg[i] - log_z);
  p /= p.sum();

  RealVector f = RealVector::Ones(e.size());
  bool cutoff = false;
  if (!alpha.von_neumann()) {
    f = (1.0 - (1.0 - a) * beta * (e.array() - u)).matrix();
    cutoff = (f.array() <= 0.0).any();
  }

  DensityMatrix state = validate_density(HermitianOperator::from_spectrum(p, levels.vectors));
  const double s = renyi_entropy(state, alpha);
  HermitianOperator base = HermitianOperator::from_spectrum(f, levels.vectors);
  return ThermalState{
      std::move(state), h,      alpha,          beta, std::exp(log_z), log_z,
      u,                s,      u - s / beta,   std::move(base),  cutoff,
      std::move(levels),
  };
}

DensityMatrix gibbs_state(const HermitianOperator& h, double beta) {
  const Spectrum levels = h.spectrum();
  const RealVector& e = levels.values;
  RealVector p = (-beta * (e.array() - e.minCoeff())).exp().matrix();
  p /= p.sum();
  return validate_density(HermitianOperator::from_spectrum(p, levels.vectors));
}

double qubit_beta_closed_form(double p0, double e1, RenyiOrder alpha) {
  if (!(p0 > 0.0 && p0 < 1.0) || !(e1 > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "need 0 < p0 < 1 and E1 > 0");
  }
  const double p1 = 1.0 - p0;
  if (alpha.von_neumann()) return std::log(p0 / p1) / e1;
  const double a = alpha.value();
  return (std::pow(p0, a) + std::pow(p1, a)) * (std::pow(p0, 1.0 - a) - std::pow(p1, 1.0 - a)) /
         (e1 * (1.0 - a));
}

double beta_consistency_check(const ThermalState& th, double relative_step) {
  if (!(relative_step > 0.0 && relative_step < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "relative step must lie in (0, 1)");
  }
  const ThermalState up = solve_thermal_state(th.hamiltonian, th.beta * (1.0 + relative_step), th.alpha);
  const ThermalState down = solve_thermal_state(th.hamiltonian, th.beta * (1.0 - relative_step), th.alpha);
  const double d_log_z = log_sum_exp_offset(solution_log_weights(up)) -
                         log_sum_exp_offset(solution_log_weights(down));
  return d_log_z / (up.energy - down.energy);
}

}  // namespace renyi
