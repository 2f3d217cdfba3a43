#include "renyi/process.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "renyi/io.hpp"

namespace renyi {
namespace {

constexpr int kContinuityGrid = 100;
constexpr int kAdiabatScanPoints = 64;
constexpr double kAdiabatTolerance = 1e-12;

struct PathPoint {
  DensityMatrix state;
  HermitianOperator h;
  double u;
  double s;
  double f;
};

PathPoint path_point(const StateFamily& family, double gamma, double temperature,
                     Divergence route) {
  FamilyPoint p = family.evaluate(gamma, temperature);
  const FreeEnergyReport fe = free_energy_report(p.state, p.thermal);
  const double u = renyi_internal_energy(p.state, p.thermal.hamiltonian, family.alpha());
  const double s = renyi_entropy(p.state, family.alpha());
  return PathPoint{std::move(p.state), p.thermal.hamiltonian, u, s,
                   route == Divergence::Traditional ? fe.f_tilde : fe.f_sand};
}

StrokeReport accumulate(const std::vector<PathPoint>& pts, std::size_t stride, RenyiOrder alpha) {
  StrokeReport r;
  for (std::size_t k = 0; k + stride < pts.size(); k += stride) {
    const PathPoint& a = pts[k];
    const PathPoint& b = pts[k + stride];
    const FirstLawStep st = step_first_law(a.state, a.h, b.state, b.h, alpha);
    const double w_ex = b.f - a.f;
    const double q_hk = w_ex - st.dw;
    r.heat_total += st.dq;
    r.work_raw += st.dw;
    r.work_excess += w_ex;
    r.heat_housekeeping += q_hk;
    r.residual += st.residual;
  }
  r.heat_excess = r.heat_total - r.heat_housekeeping;
  r.du = pts.back().u - pts.front().u;
  r.free_energy_change = pts.back().f - pts.front().f;
  r.entropy_change = pts.back().s - pts.front().s;
  return r;
}

double entropy_at(const StateFamily& family, double gamma, double temperature) {
  const FamilyPoint p = family.evaluate(gamma, temperature);
  return renyi_entropy(p.state, family.alpha());
}

double modified_free_energy(const FamilyPoint& p, Divergence route) {
  const FreeEnergyReport fe = free_energy_report(p.state, p.thermal);
  return route == Divergence::Traditional ? fe.f_tilde : fe.f_sand;
}

StrokeReport adiabat_stroke(const FamilyPoint& a, const FamilyPoint& b, RenyiOrder alpha,
                            double f_a, double f_b) {
  StrokeReport r;
  r.du = renyi_internal_energy(b.state, b.thermal.hamiltonian, alpha) -
         renyi_internal_energy(a.state, a.thermal.hamiltonian, alpha);
  r.work_raw = r.du;
  r.work_excess = r.du;
  r.free_energy_change = f_b - f_a;
  r.entropy_change = renyi_entropy(b.state, alpha) - renyi_entropy(a.state, alpha);
  return r;
}

}  // namespace

HamiltonianFamily qubit_gap_family(double gamma_min, double gamma_max) {
  return HamiltonianFamily{
      [](double gamma) { return HermitianOperator::diagonal(std::vector<double>{0.0, gamma}); },
      gamma_min, gamma_max};
}

void probe_continuity(const HamiltonianFamily& family) {
  if (!(family.gamma_min < family.gamma_max)) {
    throw Error(ErrorCode::InvalidArgument, "empty gamma range");
  }
  const double width = family.gamma_max - family.gamma_min;
  const double h = 1e-3 * width;
  for (int k = 0; k < kContinuityGrid; ++k) {
    const double g = family.gamma_min + (width - h) * k / (kContinuityGrid - 1);
    const Matrix base = family(g).matrix();
    const double coarse = (family(g + h).matrix() - base).cwiseAbs().maxCoeff();
    const double fine = (family(g + 0.01 * h).matrix() - base).cwiseAbs().maxCoeff();
    if (fine > 0.1 * coarse + 1e-12) {
      throw Error(ErrorCode::InvalidArgument,
                  "Hamiltonian family is not continuous near gamma = " + format_double(g));
    }
  }
}

StateFamily::StateFamily(Kind kind, HamiltonianFamily hamiltonian, RenyiOrder alpha,
                         ChannelFactory factory, Matrix kick)
    : kind_(kind),
      hamiltonian_(std::move(hamiltonian)),
      alpha_(alpha),
      factory_(std::move(factory)),
      kick_(std::move(kick)) {
  probe_continuity(hamiltonian_);
}

StateFamily StateFamily::thermal(HamiltonianFamily hamiltonian, RenyiOrder alpha) {
  return StateFamily(Kind::Thermal, std::move(hamiltonian), alpha, nullptr, Matrix());
}

StateFamily StateFamily::deformed(HamiltonianFamily hamiltonian, RenyiOrder alpha,
                                  ChannelFactory factory, Matrix kick) {
  if (!factory) throw Error(ErrorCode::InvalidArgument, "deformed family needs a channel factory");
  const Index d = kick.rows();
  if (kick.cols() != d ||
      (kick.adjoint() * kick - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "kick must be unitary");
  }
  return StateFamily(Kind::Deformed, std::move(hamiltonian), alpha, std::move(factory),
                     std::move(kick));
}

FamilyPoint StateFamily::evaluate(double gamma, double temperature) const {
  if (!(temperature > 0.0)) throw Error(ErrorCode::InvalidArgument, "temperature must be > 0");
  if (gamma < hamiltonian_.gamma_min || gamma > hamiltonian_.gamma_max) {
    throw Error(ErrorCode::InvalidArgument,
                "gamma " + format_double(gamma) + " outside the family range");
  }
  ThermalState th = solve_thermal_state(hamiltonian_(gamma), 1.0 / temperature, alpha_);
  if (kind_ == Kind::Thermal) {
    DensityMatrix state = th.state;
    return FamilyPoint{std::move(th), std::move(state)};
  }
  require_same_dim(kick_.rows(), th.state.dim(), "StateFamily::evaluate");
  Channel ch = factory_(gamma, temperature, th);
  if (!ch.fixes()) ch = ch.certify(th.state);
  const Matrix kicked = kick_ * th.state.matrix() * kick_.adjoint();
  DensityMatrix state = apply_channel(ch, validate_density(Matrix(0.5 * (kicked + kicked.adjoint()))));
  return FamilyPoint{std::move(th), std::move(state)};
}

ChannelFactory measure_prepare_factory(DensityMatrix eta, double identity_weight) {
  if (!(identity_weight >= 0.0 && identity_weight <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "identity weight must lie in [0, 1]");
  }
  return [eta = std::move(eta), identity_weight](double, double, const ThermalState& th) {
    const Matrix& basis = th.energy_levels.vectors;
    const Channel mp =
        build_measure_prepare_fixing(th.state, complete_prepared_set(th.state, eta, basis), basis);
    return Channel::mixture({identity_weight, 1.0 - identity_weight},
                            {Channel::identity(th.state.dim()), mp})
        .certify(th.state);
  };
}

Matrix level_rotation(Index dim, double theta) {
  if (dim < 2) throw Error(ErrorCode::InvalidArgument, "rotation needs two levels");
  Matrix w = Matrix::Identity(dim, dim);
  w(0, 0) = std::cos(theta);
  w(0, 1) = -std::sin(theta);
  w(1, 0) = std::sin(theta);
  w(1, 1) = std::cos(theta);
  return w;
}

FirstLawStep step_first_law(const DensityMatrix& rho0, const HermitianOperator& h0,
                            const DensityMatrix& rho1, const HermitianOperator& h1,
                            RenyiOrder alpha) {
  require_same_dim(rho0.dim(), h0.dim(), "step_first_law");
  require_same_dim(rho0.dim(), rho1.dim(), "step_first_law");
  require_same_dim(rho0.dim(), h1.dim(), "step_first_law");
  const double a = alpha.value();
  const Matrix p0 = spectral_power(rho0, a).matrix();
  const Matrix p1 = spectral_power(rho1, a).matrix();
  const double norm0 = p0.trace().real();
  const double u0 = renyi_internal_energy(rho0, h0, alpha);
  const double u1 = renyi_internal_energy(rho1, h1, alpha);
  const Matrix shifted = h0.matrix() - u0 * Matrix::Identity(h0.dim(), h0.dim());
  const double dq = trace_product(Matrix(p1 - p0), shifted) / norm0;
  const double dw = trace_product(p0, Matrix(h1.matrix() - h0.matrix())) / norm0;
  const double du = u1 - u0;
  return FirstLawStep{du, dq, dw, du - dq - dw};
}

StrokeReport isotherm_decomposition(const StateFamily& family, double gamma0, double gamma1,
                                    double temperature, int steps, IsothermOptions options) {
  if (steps < 2) throw Error(ErrorCode::InvalidArgument, "isotherm needs at least 2 steps");
  if (options.richardson && steps % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "Richardson extrapolation needs an even step count");
  }
  std::vector<PathPoint> pts;
  pts.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    const double g = k == steps ? gamma1 : gamma0 + (gamma1 - gamma0) * k / steps;
    pts.push_back(path_point(family, g, temperature, options.route));
  }
  StrokeReport fine = accumulate(pts, 1, family.alpha());
  if (!options.richardson) return fine;

  const StrokeReport coarse = accumulate(pts, 2, family.alpha());
  auto extrapolate = [](double f, double c) { return 2.0 * f - c; };
  fine.heat_total = extrapolate(fine.heat_total, coarse.heat_total);
  fine.work_raw = extrapolate(fine.work_raw, coarse.work_raw);
  fine.heat_housekeeping = extrapolate(fine.heat_housekeeping, coarse.heat_housekeeping);
  fine.residual = extrapolate(fine.residual, coarse.residual);
  fine.heat_excess = fine.heat_total - fine.heat_housekeeping;
  return fine;
}

double solve_adiabat(const StateFamily& family, double gamma_start, double t_start,
                     double t_end) {
  if (!(t_start > 0.0) || !(t_end > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "temperatures must be positive");
  }
  if (t_end == t_start) return gamma_start;
  const double target = entropy_at(family, gamma_start, t_start);
  const double lo_bound = family.hamiltonian().gamma_min;
  const double hi_bound = family.hamiltonian().gamma_max;
  auto residual = [&](double g) { return entropy_at(family, g, t_end) - target; };

  std::vector<double> grid(kAdiabatScanPoints);
  std::vector<double> res(kAdiabatScanPoints);
  for (int k = 0; k < kAdiabatScanPoints; ++k) {
    grid[k] = k + 1 == kAdiabatScanPoints
                  ? hi_bound
                  : lo_bound + (hi_bound - lo_bound) * k / (kAdiabatScanPoints - 1);
    res[k] = residual(grid[k]);
  }

  int brackets = 0;
  int where = -1;
  for (int k = 0; k + 1 < kAdiabatScanPoints; ++k) {
    if (res[k] == 0.0) {
      ++brackets;
      where = k;
    } else if ((res[k] > 0.0) != (res[k + 1] > 0.0) && res[k + 1] != 0.0) {
      ++brackets;
      where = k;
    }
  }
  if (res.back() == 0.0) {
    ++brackets;
    where = kAdiabatScanPoints - 1;
  }
  if (brackets == 0) {
    throw Error(ErrorCode::NoBracket, "target entropy " + format_double(target) +
                                          " outside the scanned range at T = " +
                                          format_double(t_end));
  }
  if (brackets > 1) {
    throw Error(ErrorCode::NonMonotone, "entropy is not monotone in gamma at T = " +
                                            format_double(t_end));
  }
  if (res[where] == 0.0) return grid[where];

  double lo = grid[where];
  double hi = grid[where + 1];
  double r_lo = res[where];
  double best = std::abs(res[where]) <= std::abs(res[where + 1]) ? lo : hi;
  double best_r = std::min(std::abs(res[where]), std::abs(res[where + 1]));
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double r = residual(mid);
    if (std::abs(r) < best_r) {
      best = mid;
      best_r = std::abs(r);
    }
    if (r == 0.0) break;
    if ((r > 0.0) == (r_lo > 0.0)) {
      lo = mid;
      r_lo = r;
    } else {
      hi = mid;
    }
  }
  if (best_r > kAdiabatTolerance) {
    throw Error(ErrorCode::NoConvergence,
                "adiabat residual " + format_double(best_r) + " above tolerance");
  }
  return best;
}

CycleReport run_carnot_cycle(const StateFamily& family, double gamma1, double gamma2, double t_hot,
                             double t_cold, CarnotOptions options) {
  if (gamma1 == gamma2) throw Error(ErrorCode::InvalidArgument, "gamma1 and gamma2 must differ");
  const Divergence route = options.isotherm.route;
  const RenyiOrder alpha = family.alpha();

  const double gamma3 = solve_adiabat(family, gamma2, t_hot, t_cold);
  const double gamma4 = solve_adiabat(family, gamma1, t_hot, t_cold);

  const FamilyPoint p1 = family.evaluate(gamma1, t_hot);
  const FamilyPoint p2 = family.evaluate(gamma2, t_hot);
  const FamilyPoint p3 = family.evaluate(gamma3, t_cold);
  const FamilyPoint p4 = family.evaluate(gamma4, t_cold);

  const double back = solve_adiabat(family, gamma4, t_cold, t_hot);
  const double closure = trace_distance(family.evaluate(back, t_hot).state, p1.state);
  if (closure > kCycleClosureTolerance) {
    throw Error(ErrorCode::CycleNotClosed,
                "closing adiabat misses the start by " + format_double(closure));
  }

  const double f1 = modified_free_energy(p1, route);
  const double f2 = modified_free_energy(p2, route);
  const double f3 = modified_free_energy(p3, route);
  const double f4 = modified_free_energy(p4, route);
  const double s1 = renyi_entropy(p1.state, alpha);
  const double s2 = renyi_entropy(p2.state, alpha);
  const double s3 = renyi_entropy(p3.state, alpha);
  const double s4 = renyi_entropy(p4.state, alpha);

  CycleReport r{};
  r.t_hot = t_hot;
  r.t_cold = t_cold;
  r.gammas = {gamma1, gamma2, gamma3, gamma4};
  r.strokes[0] = isotherm_decomposition(family, gamma1, gamma2, t_hot, options.steps, options.isotherm);
  r.strokes[1] = adiabat_stroke(p2, p3, alpha, f2, f3);
  r.strokes[2] = isotherm_decomposition(family, gamma3, gamma4, t_cold, options.steps, options.isotherm);
  r.strokes[3] = adiabat_stroke(p4, p1, alpha, f4, f1);

  r.work_by_system = {
      f1 - f2,
      f2 - f3 + (t_hot - t_cold) * s2,
      f3 - f4,
      f4 - f1 - (t_hot - t_cold) * s1,
  };
  r.heat_absorbed = {t_hot * (s2 - s1), 0.0, t_cold * (s4 - s3), 0.0};
  r.total_work = r.work_by_system[0] + r.work_by_system[1] + r.work_by_system[2] +
                 r.work_by_system[3];
  r.qex1 = r.heat_absorbed[0];
  r.efficiency = r.total_work / r.qex1;
  r.analytic = 1.0 - t_cold / t_hot;
  r.closure_distance = closure;

  double net = 0.0;
  double mismatch = 0.0;
  for (int k = 0; k < 4; ++k) {
    net += r.strokes[k].entropy_change;
    mismatch = std::max(mismatch, std::abs(r.work_by_system[k] + r.strokes[k].work_excess));
    mismatch = std::max(mismatch, std::abs(r.heat_absorbed[k] - r.strokes[k].heat_excess));
  }
  r.net_entropy = net;
  r.ledger_discrepancy = mismatch;
  return r;
}

std::string cycle_csv(const CycleReport& report) {
  std::string out = "stroke,dU,heatTotal,heatExcess,heatHousekeeping,workExcess,entropyChange\n";
  for (int k = 0; k < 4; ++k) {
    const StrokeReport& s = report.strokes[k];
    out += std::to_string(k + 1);
    for (const double v : {s.du, s.heat_total, s.heat_excess, s.heat_housekeeping, s.work_excess,
                           s.entropy_change}) {
      out += ',' + format_double(v);
    }
    out += '\n';
  }
  out += "cycle," + format_double(report.total_work) + ',' + format_double(report.qex1) + ',' +
         format_double(report.efficiency) + ',' + format_double(report.analytic) + '\n';
  return out;
}

}  // namespace renyi
