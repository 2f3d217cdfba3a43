#include "renyi/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "renyi/random.hpp"

namespace renyi {
namespace {

constexpr double kDpiSlack = 1e-10;
constexpr int kMaxHalvings = 80;

Matrix resolve_basis(const DensityMatrix& rho_t, const std::optional<Matrix>& basis) {
  if (!basis) return measurement_basis(rho_t).vectors;
  if (basis->rows() != rho_t.dim() || basis->cols() != rho_t.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "measurement basis does not match the state");
  }
  const Matrix gram = basis->adjoint() * *basis;
  if ((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "measurement basis is not orthonormal");
  }
  return *basis;
}

RealVector populations(const DensityMatrix& rho, const Matrix& basis) {
  RealVector p(basis.cols());
  for (Index i = 0; i < basis.cols(); ++i) {
    p[i] = (basis.col(i).adjoint() * rho.matrix() * basis.col(i))(0, 0).real();
  }
  return p;
}

Matrix projector(const Matrix& basis, Index i) { return basis.col(i) * basis.col(i).adjoint(); }

Channel dephasing(const DensityMatrix& rho_t, const Matrix& basis) {
  std::vector<DensityMatrix> prepared;
  for (Index i = 0; i < basis.cols(); ++i) {
    prepared.push_back(validate_density(HermitianOperator(projector(basis, i))));
  }
  return build_measure_prepare_fixing(rho_t, prepared, basis);
}

bool is_psd(const Matrix& m) {
  const Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -kEigenvalueTolerance;
}

// sigma_i = s |i><i| + (1-s) [rho_T + t (omega_i - sum_j p_j omega_j)], with t
// halved until every sigma_i is positive. sum_i p_i sigma_i = rho_T for any s, t.
Channel perturbed_measure_prepare(const DensityMatrix& rho_t, const Matrix& basis, Rng& rng) {
  const Index d = rho_t.dim();
  const RealVector p = populations(rho_t, basis);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double s = unit(rng);

  std::vector<Matrix> omega;
  Matrix mean = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    omega.push_back(random_density(d, rng).matrix());
    mean += p[i] * omega.back();
  }

  double t = 1.0;
  std::vector<Matrix> sigma(d);
  for (int k = 0; k <= kMaxHalvings; ++k, t *= 0.5) {
    bool ok = true;
    for (Index i = 0; i < d && ok; ++i) {
      sigma[i] = s * projector(basis, i) + (1.0 - s) * (rho_t.matrix() + t * (omega[i] - mean));
      sigma[i] = 0.5 * (sigma[i] + sigma[i].adjoint());
      ok = is_psd(sigma[i]);
    }
    if (ok) break;
    if (k == kMaxHalvings) {
      for (Index i = 0; i < d; ++i) sigma[i] = s * projector(basis, i) + (1.0 - s) * rho_t.matrix();
    }
  }

  std::vector<DensityMatrix> prepared;
  for (const Matrix& m : sigma) {
    prepared.push_back(validate_density(HermitianOperator(Matrix(m / m.trace().real()))));
  }
  return build_measure_prepare_fixing(rho_t, prepared, basis);
}

}  // namespace

Channel::Channel(std::vector<Matrix> kraus) : dim_(0), kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw Error(ErrorCode::InvalidArgument, "empty Kraus set");
  dim_ = kraus_.front().cols();
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (const Matrix& k : kraus_) {
    if (k.rows() != dim_ || k.cols() != dim_) {
      throw Error(ErrorCode::DimensionMismatch, "Kraus operators must be square and equal size");
    }
    sum += k.adjoint() * k;
  }
  const double err = (sum - Matrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
  if (err > kTracePreservingTolerance) {
    throw Error(ErrorCode::NotTracePreserving,
                "max|sum K^dagger K - 1| = " + std::to_string(err));
  }
}

Channel Channel::identity(Index dim) {
  return Channel(std::vector<Matrix>{Matrix::Identity(dim, dim)});
}

Channel Channel::mixture(const std::vector<double>& weights, const std::vector<Channel>& parts) {
  if (weights.size() != parts.size() || parts.empty()) {
    throw Error(ErrorCode::InvalidArgument, "one weight per channel required");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > kTracePreservingTolerance ||
      std::any_of(weights.begin(), weights.end(), [](double w) { return w < 0.0; })) {
    throw Error(ErrorCode::InvalidArgument, "mixture weights must be a probability vector");
  }
  std::vector<Matrix> kraus;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    require_same_dim(parts[j].dim(), parts.front().dim(), "Channel::mixture");
    if (weights[j] == 0.0) continue;
    for (const Matrix& k : parts[j].kraus()) kraus.push_back(std::sqrt(weights[j]) * k);
  }
  return Channel(std::move(kraus));
}

Channel Channel::certify(const DensityMatrix& state) const {
  require_same_dim(dim_, state.dim(), "Channel::certify");
  Matrix diff = apply_channel(*this, state.matrix()) - state.matrix();
  diff = 0.5 * (diff + diff.adjoint());
  const double err = trace_norm(diff);
  if (err > kFixedPointTolerance) {
    throw Error(ErrorCode::FixedPointMismatch,
                "||channel(state) - state||_1 = " + std::to_string(err));
  }
  Channel out = *this;
  out.fixes_ = state;
  return out;
}

Matrix apply_channel(const Channel& ch, const Matrix& x) {
  require_same_dim(ch.dim(), x.rows(), "apply_channel");
  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (const Matrix& k : ch.kraus()) out += k * x * k.adjoint();
  return out;
}

DensityMatrix apply_channel(const Channel& ch, const DensityMatrix& rho) {
  const Matrix out = apply_channel(ch, rho.matrix());
  return validate_density(Matrix(0.5 * (out + out.adjoint())));
}

Spectrum measurement_basis(const DensityMatrix& rho_t) {
  const Spectrum& s = rho_t.spectrum();
  const Index d = s.values.size();
  Spectrum out{RealVector(d), Matrix(d, d)};
  for (Index i = 0; i < d; ++i) {
    out.values[i] = s.values[d - 1 - i];
    out.vectors.col(i) = s.vectors.col(d - 1 - i);
  }
  return out;
}

Channel build_measure_prepare_fixing(const DensityMatrix& rho_t,
                                     const std::vector<DensityMatrix>& prepared,
                                     const std::optional<Matrix>& basis) {
  const Index d = rho_t.dim();
  if (static_cast<Index>(prepared.size()) != d) {
    throw Error(ErrorCode::DimensionMismatch, "need one prepared state per basis vector");
  }
  const Matrix b = resolve_basis(rho_t, basis);
  const RealVector p = populations(rho_t, b);

  Matrix mixed = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    require_same_dim(prepared[i].dim(), d, "build_measure_prepare_fixing");
    mixed += p[i] * prepared[i].matrix();
  }
  const double mismatch = (mixed - rho_t.matrix()).cwiseAbs().maxCoeff();
  if (mismatch > kFixedPointTolerance) {
    throw Error(ErrorCode::FixedPointMismatch,
                "sum_i p_i sigma_i differs from rho_T by " + std::to_string(mismatch));
  }

  std::vector<Matrix> kraus;
  for (Index i = 0; i < d; ++i) {
    const Spectrum& s = prepared[i].spectrum();
    for (Index k = 0; k < d; ++k) {
      if (s.values[k] <= 0.0) continue;
      kraus.push_back(std::sqrt(s.values[k]) * s.vectors.col(k) * b.col(i).adjoint());
    }
  }
  return Channel(std::move(kraus)).certify(rho_t);
}

std::vector<DensityMatrix> complete_prepared_set(const DensityMatrix& rho_t,
                                                 const DensityMatrix& eta,
                                                 const std::optional<Matrix>& basis) {
  require_same_dim(rho_t.dim(), eta.dim(), "complete_prepared_set");
  const Matrix b = resolve_basis(rho_t, basis);
  const double p0 = populations(rho_t, b)[0];
  if (!(p0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "first population must be positive");
  const Matrix tau = (rho_t.matrix() - (1.0 - p0) * eta.matrix()) / p0;
  std::vector<DensityMatrix> out{validate_density(Matrix(0.5 * (tau + tau.adjoint())))};
  for (Index i = 1; i < rho_t.dim(); ++i) out.push_back(eta);
  return out;
}

Channel random_thermal_fixing_channel(const DensityMatrix& rho_t, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix basis = measurement_basis(rho_t).vectors;
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::vector<double> w{gamma(rng), gamma(rng), gamma(rng)};
  const double total = w[0] + w[1] + w[2];
  for (double& x : w) x /= total;
  w[2] = std::max(0.0, 1.0 - w[0] - w[1]);

  const Channel mp = perturbed_measure_prepare(rho_t, basis, rng);
  return Channel::mixture(w, {dephasing(rho_t, basis), mp, Channel::identity(rho_t.dim())})
      .certify(rho_t);
}

DpiResult dpi_check(const Channel& ch, const DensityMatrix& rho, const DensityMatrix& sigma,
                    RenyiOrder alpha, Divergence variant) {
  const double before = relative_entropy(variant, rho, sigma, alpha);
  const double after =
      relative_entropy(variant, apply_channel(ch, rho), apply_channel(ch, sigma), alpha);
  return DpiResult{before, after, after <= before + kDpiSlack};
}

}  // namespace renyi
