#include <cmath>
#include <functional>
#include <ostream>

#include "renyi/cli.hpp"
#include "renyi/clausius.hpp"
#include "renyi/io.hpp"
#include "renyi/process.hpp"
#include "renyi/random.hpp"

namespace renyi::cli {
namespace {

// A check returns an empty string on success and a short reason otherwise.
using Check = std::function<std::string()>;

class Suite {
 public:
  explicit Suite(std::ostream& log) : log_(log) {}

  void run(const std::string& name, const Check& check) {
    std::string reason;
    try {
      reason = check();
    } catch (const std::exception& e) {
      reason = std::string("threw ") + e.what();
    }
    if (reason.empty()) {
      ++summary_.passed;
      log_ << "PASS " << name << '\n';
    } else {
      ++summary_.failed;
      summary_.failures.push_back(name);
      log_ << "FAIL " << name << ": " << reason << '\n';
    }
  }

  SelftestSummary summary() const { return summary_; }

 private:
  std::ostream& log_;
  SelftestSummary summary_;
};

std::string exceeds(const char* what, double value, double bound) {
  if (value <= bound) return {};
  return std::string(what) + " = " + format_double(value) + " > " + format_double(bound);
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// beta with |1 - alpha| beta spread(H) <= 0.9: no cutoff and a unique root.
double safe_beta(const HermitianOperator& h, double alpha, Rng& rng) {
  const RealVector e = h.spectrum().values;
  const double spread = e.maxCoeff() - e.minCoeff();
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  const double cap = alpha == 1.0 ? 3.0 / spread : 0.9 / (std::abs(1.0 - alpha) * spread);
  return std::min(cap, 3.0 / spread) * unit(rng);
}

const std::vector<double> kAlphaGrid{0.3, 0.5, 0.9, 1.1, 2.0, 3.0};

}  // namespace

SelftestSummary run_selftest(std::uint64_t seed, std::ostream& log) {
  Suite suite(log);

  suite.run("operator.power_one_and_composition", [&] {
    Rng rng(seed);
    double worst_one = 0.0;
    double worst_comp = 0.0;
    for (int k = 0; k < 20; ++k) {
      const HermitianOperator m = random_hermitian(4, rng);
      worst_one = std::max(worst_one, max_abs(spectral_power(m, 1.0).matrix() - m.matrix()));
      const DensityMatrix rho = random_density(4, rng);
      const Matrix twice = spectral_power(spectral_power(rho, 0.7), 1.9).matrix();
      worst_comp = std::max(worst_comp, max_abs(twice - spectral_power(rho, 0.7 * 1.9).matrix()));
    }
    std::string r = exceeds("power 1 deviation", worst_one, 1e-12);
    return r.empty() ? exceeds("composition deviation", worst_comp, 1e-10) : r;
  });

  suite.run("operator.expectation_linear", [&] {
    Rng rng(seed + 1);
    const DensityMatrix rho = random_density(3, rng);
    const HermitianOperator a = random_hermitian(3, rng);
    const HermitianOperator b = random_hermitian(3, rng);
    const double lhs = expectation(rho, 2.0 * a + b);
    const double rhs = 2.0 * expectation(rho, a) + expectation(rho, b);
    const double imag = std::abs((rho.matrix() * a.matrix()).trace().imag());
    std::string r = exceeds("linearity", std::abs(lhs - rhs), 1e-12);
    return r.empty() ? exceeds("imaginary part", imag, 1e-12) : r;
  });

  suite.run("measures.nonnegative_divergences", [&] {
    Rng rng(seed + 2);
    double worst = 0.0;
    for (const double a : {0.3, 0.5, 0.9, 1.0, 1.5, 2.0, 3.0, 5.0}) {
      for (int k = 0; k < 10; ++k) {
        const DensityMatrix rho = random_density(3, rng);
        const DensityMatrix sigma = random_density(3, rng);
        worst = std::min({worst, trad_relative_entropy(rho, sigma, RenyiOrder(a)),
                          sandwiched_relative_entropy(rho, sigma, RenyiOrder(a))});
      }
    }
    return exceeds("most negative divergence (negated)", -worst, 1e-10);
  });

  suite.run("measures.commuting_reduction", [&] {
    Rng rng(seed + 3);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    double worst = 0.0;
    for (const double a : {0.3, 0.7, 2.0, 4.0}) {
      std::vector<double> p{unit(rng), unit(rng), unit(rng)};
      std::vector<double> q{unit(rng), unit(rng), unit(rng)};
      const double sp = p[0] + p[1] + p[2];
      const double sq = q[0] + q[1] + q[2];
      for (int i = 0; i < 3; ++i) {
        p[i] /= sp;
        q[i] /= sq;
      }
      const DensityMatrix rho = DensityMatrix::diagonal(p);
      const DensityMatrix sigma = DensityMatrix::diagonal(q);
      worst = std::max(worst, std::abs(trad_relative_entropy(rho, sigma, RenyiOrder(a)) -
                                       sandwiched_relative_entropy(rho, sigma, RenyiOrder(a))));
    }
    return exceeds("|D - D~|", worst, 1e-10);
  });

  suite.run("measures.alpha_to_one", [&] {
    Rng rng(seed + 4);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const DensityMatrix rho = random_density(4, rng);
      const DensityMatrix sigma = random_density(4, rng);
      const double s1 = von_neumann_entropy(rho);
      const double d1 = von_neumann_relative_entropy(rho, sigma);
      for (const double a : {1.0 - 1e-4, 1.0 + 1e-4}) {
        worst = std::max({worst, std::abs(renyi_entropy(rho, RenyiOrder(a)) - s1),
                          std::abs(trad_relative_entropy(rho, sigma, RenyiOrder(a)) - d1),
                          std::abs(sandwiched_relative_entropy(rho, sigma, RenyiOrder(a)) - d1)});
      }
    }
    return exceeds("deviation from von Neumann", worst, 1e-3);
  });

  suite.run("thermal.identities_and_lnZ", [&] {
    Rng rng(seed + 5);
    double worst_id = 0.0;
    double worst_z = 0.0;
    double worst_sc = 0.0;
    for (const Index d : {2, 3, 4}) {
      for (const double a : kAlphaGrid) {
        for (int k = 0; k < 5; ++k) {
          const HermitianOperator h = random_hermitian(d, rng);
          const ThermalState th = solve_thermal_state(h, safe_beta(h, a, rng), RenyiOrder(a));
          const DensityMatrix rho = random_density(d, rng);
          const double s_n = renyi_entropy(rho, th.alpha);
          for (const Divergence v : {Divergence::Traditional, Divergence::Sandwiched}) {
            const double dv = relative_entropy(v, rho, th.state, th.alpha);
            const double delta = delta_terms(rho, th, v).delta;
            worst_id = std::max(worst_id, std::abs(s_n - (th.entropy - dv + delta)));
          }
          worst_z = std::max(worst_z, std::abs(th.entropy - th.log_partition));
          const Matrix pa = spectral_power(th.state, a).matrix();
          const Matrix shifted = h.matrix() - th.energy * Matrix::Identity(d, d);
          worst_sc = std::max(worst_sc, std::abs(trace_product(pa, shifted)));
        }
      }
    }
    std::string r = exceeds("entropy identity defect", worst_id, 1e-10);
    if (r.empty()) r = exceeds("|S - ln Z|", worst_z, 1e-9);
    return r.empty() ? exceeds("Tr[rho^a (H - U)]", worst_sc, 1e-10) : r;
  });

  suite.run("thermal.beta_consistency", [&] {
    const HermitianOperator h = HermitianOperator::diagonal(std::vector<double>{0.0, 1.0});
    double worst = 0.0;
    for (const double a : {0.5, 1.0, 2.0}) {
      for (const double b : {1e-6, 0.5, 1.104762}) {
        const ThermalState th = solve_thermal_state(h, b, RenyiOrder(a));
        worst = std::max(worst, std::abs(beta_consistency_check(th) / b - 1.0));
      }
    }
    return exceeds("relative deviation", worst, 1e-4);
  });

  suite.run("thermal.gibbs_limit", [&] {
    Rng rng(seed + 6);
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      const HermitianOperator h = random_hermitian(4, rng);
      const DensityMatrix gibbs = gibbs_state(h, 0.8);
      for (const double a : {1.0 - 1e-4, 1.0 + 1e-4}) {
        worst = std::max(worst, trace_distance(solve_thermal_state(h, 0.8, RenyiOrder(a)).state, gibbs));
      }
    }
    return exceeds("trace distance to Gibbs", worst, 1e-3);
  });

  suite.run("free_energy.form_invariance_and_minimality", [&] {
    Rng rng(seed + 7);
    double worst_form = 0.0;
    double min_gap = 0.0;
    for (const double a : kAlphaGrid) {
      const HermitianOperator h = random_hermitian(3, rng);
      const ThermalState th = solve_thermal_state(h, safe_beta(h, a, rng), RenyiOrder(a));
      for (int k = 0; k < 5; ++k) {
        const FreeEnergyReport fe = free_energy_report(random_density(3, rng), th);
        worst_form = std::max({worst_form, std::abs(fe.f_tilde - fe.f_sand),
                               std::abs(fe.f_tilde - fe.f_form)});
      }
      min_gap = std::min(min_gap, minimality_certificate(th, 200, seed + 8).min_gap);
    }
    std::string r = exceeds("form invariance defect", worst_form, 1e-9);
    return r.empty() ? exceeds("negated minimum gap", -min_gap, 1e-9) : r;
  });

  suite.run("process.first_law_halving", [&] {
    const StateFamily family = StateFamily::thermal(qubit_gap_family(0.25, 2.5), RenyiOrder(2.0));
    double prev = std::abs(isotherm_decomposition(family, 1.0, 2.0, 1.0, 50).residual);
    for (const int n : {100, 200, 400}) {
      const double cur = std::abs(isotherm_decomposition(family, 1.0, 2.0, 1.0, n).residual);
      const double ratio = prev / cur;
      if (ratio < 1.7 || ratio > 2.3) return "halving ratio " + format_double(ratio);
      prev = cur;
    }
    return std::string();
  });

  suite.run("process.carnot_efficiency", [&] {
    double worst = 0.0;
    for (const double a : {0.5, 0.9, 1.0, 2.0, 3.0}) {
      const HamiltonianFamily h = qubit_gap_family(0.25, 2.5);
      const StateFamily thermal = StateFamily::thermal(h, RenyiOrder(a));
      const StateFamily deformed = StateFamily::deformed(
          h, RenyiOrder(a), measure_prepare_factory(reference_eta(), 0.3), level_rotation(2, 0.15));
      for (const StateFamily* f : {&thermal, &deformed}) {
        const CycleReport r = run_carnot_cycle(*f, 2.0, 1.0, 2.0, 1.0, CarnotOptions{200, {}});
        worst = std::max({worst, std::abs(r.efficiency - 0.5), std::abs(r.net_entropy)});
      }
    }
    return exceeds("efficiency or entropy defect", worst, 1e-6);
  });

  suite.run("maps.dpi_batches", [&] {
    const DensityMatrix rho_t = DensityMatrix::diagonal(std::vector<double>{0.7, 0.3});
    int violations = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Channel ch = random_thermal_fixing_channel(rho_t, seed + s);
      Rng rng(seed + 1000 + s);
      const DensityMatrix rho = random_density(2, rng);
      for (const double a : {0.1, 0.5, 1.0, 1.5, 2.0}) {
        violations += !dpi_check(ch, rho, rho_t, RenyiOrder(a), Divergence::Traditional).monotone;
      }
      for (const double a : {0.5, 1.0, 2.0, 3.0, 5.0, 10.0}) {
        violations += !dpi_check(ch, rho, rho_t, RenyiOrder(a), Divergence::Sandwiched).monotone;
      }
    }
    return violations == 0 ? std::string() : std::to_string(violations) + " violations";
  });

  suite.run("maps.clausius_sweep", [&] {
    const std::vector<double> grid = default_alpha_grid();
    double worst_margin = 0.0;
    double spread[2] = {0.0, 0.0};
    for (int i = 0; i < 2; ++i) {
      const double dq = i == 0 ? 0.001 : 0.0005;
      for (const ClausiusRecord& r : clausius_sweep(0.7, 1.0, dq, reference_eta(), grid)) {
        for (const double q : {r.q1, r.q2, r.q3}) {
          worst_margin = std::min(worst_margin, (r.ds - q) / (dq * dq));
        }
        spread[i] = std::max(spread[i], std::abs(r.ds - r.q1));
      }
    }
    const double ratio = spread[0] / spread[1];
    if (ratio < 3.0 || ratio > 5.0) return "halving ratio " + format_double(ratio);
    return exceeds("negated margin / dq^2", -worst_margin, 10.0);
  });

  suite.run("maps.pair_oracle", [&] {
    double worst = 0.0;
    for (const double a : {0.5, 2.0, 3.0}) {
      const RenyiOrder alpha(a);
      const PairOracle o = pair_oracle(0.7, 1.0, 1e-4, alpha);
      const ClausiusRecord f = first_order_part(
          [&](double dq) { return rotated_pair_variation(0.7, 1.0, dq, alpha); }, 1e-4);
      worst = std::max({worst, std::abs(f.ds / o.ds - 1.0), std::abs(f.q3 / o.beta_dq - 1.0)});
    }
    return exceeds("relative deviation", worst, 1e-6);
  });

  suite.run("cli.deterministic_csv", [&] {
    const std::string a = clausius_csv(clausius_sweep(0.7, 1.0, 0.01, reference_eta(), default_alpha_grid()));
    const std::string b = clausius_csv(clausius_sweep(0.7, 1.0, 0.01, reference_eta(), default_alpha_grid()));
    const DensityMatrix rho_t = DensityMatrix::diagonal(std::vector<double>{0.7, 0.3});
    const Channel c1 = random_thermal_fixing_channel(rho_t, seed);
    const Channel c2 = random_thermal_fixing_channel(rho_t, seed);
    bool same = c1.kraus().size() == c2.kraus().size();
    for (std::size_t k = 0; same && k < c1.kraus().size(); ++k) same = c1.kraus()[k] == c2.kraus()[k];
    if (a != b) return std::string("clausius CSV differs between runs");
    return same ? std::string() : std::string("channel differs for equal seeds");
  });

  return suite.summary();
}

}  // namespace renyi::cli
