#include "renyi/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "renyi/clausius.hpp"
#include "renyi/io.hpp"
#include "renyi/process.hpp"
#include "renyi/random.hpp"

namespace renyi::cli {
namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& raw) : raw_(raw) {}

  bool has(const std::string& key) const { return raw_.count(key) != 0; }

  const std::string& text(const std::string& key) const {
    const auto it = raw_.find(key);
    if (it == raw_.end()) throw Error(ErrorCode::ConfigError, "missing --" + key);
    return it->second;
  }

  std::string text_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? text(key) : fallback;
  }

  double number(const std::string& key) const {
    const std::string& s = text(key);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw Error(ErrorCode::ConfigError, "--" + key + " expects a number, got '" + s + "'");
    }
    return v;
  }

  double number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  long integer_or(const std::string& key, long fallback) const {
    if (!has(key)) return fallback;
    const std::string& s = text(key);
    long v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw Error(ErrorCode::ConfigError, "--" + key + " expects an integer, got '" + s + "'");
    }
    return v;
  }

  std::vector<double> list_or(const std::string& key, std::vector<double> fallback) const {
    if (!has(key)) return fallback;
    try {
      return parse_double_list(text(key));
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, "--" + key + ": " + e.what());
    }
  }

  Matrix matrix(const std::string& key) const {
    try {
      return parse_matrix_spec(text(key));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ConfigError) throw;
      throw Error(ErrorCode::ConfigError, "--" + key + ": " + e.what());
    }
  }

 private:
  const std::map<std::string, std::string>& raw_;
};

Divergence parse_variant(const std::string& s) {
  if (s == "traditional") return Divergence::Traditional;
  if (s == "sandwiched") return Divergence::Sandwiched;
  throw Error(ErrorCode::ConfigError, "--variant must be traditional or sandwiched");
}

void emit(const RunConfig& config, const std::string& csv, std::ostream& out) {
  if (config.output_path.empty()) {
    out << csv;
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ConfigError, "cannot write '" + config.output_path + "'");
  file << csv;
}

void print_matrix(std::ostream& out, const char* label, const Matrix& m) {
  out << label << ":\n";
  write_matrix(out, m);
}

int run_thermal(const Params& p, std::ostream& out) {
  const HermitianOperator h(p.matrix("H"));
  const ThermalState th = solve_thermal_state(h, p.number("beta"), RenyiOrder(p.number("alpha")));
  out << "alpha " << format_double(th.alpha.value()) << '\n'
      << "beta " << format_double(th.beta) << '\n'
      << "Z " << format_double(th.partition_function) << '\n'
      << "U " << format_double(th.energy) << '\n'
      << "S " << format_double(th.entropy) << '\n'
      << "F " << format_double(th.free_energy) << '\n'
      << "cutoffApplied " << (th.cutoff_applied ? "true" : "false") << '\n';
  print_matrix(out, "state", th.state.matrix());
  print_matrix(out, "A", th.base.matrix());
  return 0;
}

int run_entropy(const Params& p, std::ostream& out) {
  const DensityMatrix rho = validate_density(p.matrix("rho"));
  const RenyiOrder alpha(p.number("alpha"));
  out << "S_alpha " << format_double(renyi_entropy(rho, alpha)) << '\n'
      << "S_vn " << format_double(von_neumann_entropy(rho)) << '\n';
  if (p.has("H")) {
    const HermitianOperator h(p.matrix("H"));
    out << "U_alpha " << format_double(renyi_internal_energy(rho, h, alpha)) << '\n';
  }
  if (p.has("sigma")) {
    const DensityMatrix sigma = validate_density(p.matrix("sigma"));
    out << "D_alpha " << format_double(trad_relative_entropy(rho, sigma, alpha)) << '\n'
        << "D_sandwiched " << format_double(sandwiched_relative_entropy(rho, sigma, alpha))
        << '\n';
  }
  return 0;
}

int run_carnot(const RunConfig& config, const Params& p, std::ostream& out) {
  const RenyiOrder alpha(p.number("alpha"));
  const double t_hot = p.number("Th");
  const double t_cold = p.number("Tc");
  const double gamma1 = p.number_or("gamma1", 2.0);
  const double gamma2 = p.number_or("gamma2", 1.0);
  const double g_lo = std::min(gamma1, gamma2) * std::min(1.0, t_cold / t_hot) * 0.5;
  const double g_hi = std::max(gamma1, gamma2) * std::max(1.0, t_cold / t_hot) * 1.25;
  const HamiltonianFamily h = qubit_gap_family(g_lo, g_hi);

  const std::string kind = p.text_or("family", "thermal");
  CarnotOptions options;
  options.steps = static_cast<int>(p.integer_or("steps", 10000));
  options.isotherm.route = parse_variant(p.text_or("variant", "traditional"));
  CycleReport report{};
  if (kind == "thermal") {
    report = run_carnot_cycle(StateFamily::thermal(h, alpha), gamma1, gamma2, t_hot, t_cold, options);
  } else if (kind == "deformed") {
    const StateFamily family = StateFamily::deformed(
        h, alpha, measure_prepare_factory(reference_eta(), 0.3), level_rotation(2, 0.15));
    report = run_carnot_cycle(family, gamma1, gamma2, t_hot, t_cold, options);
  } else {
    throw Error(ErrorCode::ConfigError, "--family must be thermal or deformed");
  }
  emit(config, cycle_csv(report), out);
  if (!config.output_path.empty()) {
    out << "efficiency " << format_double(report.efficiency) << '\n'
        << "analytic " << format_double(report.analytic) << '\n'
        << "closure " << format_double(report.closure_distance) << '\n'
        << "ledgerDiscrepancy " << format_double(report.ledger_discrepancy) << '\n';
  }
  return 0;
}

int run_clausius(const RunConfig& config, const Params& p, std::ostream& out) {
  const double dq = p.number("dq");
  const std::vector<ClausiusRecord> records =
      clausius_sweep(p.number_or("p0", 0.7), p.number_or("E1", 1.0), dq, reference_eta(),
                     p.list_or("alphas", default_alpha_grid()));
  emit(config, clausius_csv(records), out);
  int below = 0;
  for (const ClausiusRecord& r : records) {
    for (const double q : {r.q1, r.q2, r.q3}) {
      if (r.ds - q < -10.0 * dq * dq) ++below;
    }
  }
  if (!config.output_path.empty()) {
    out << "rows " << records.size() << '\n' << "clausiusBelowBound " << below << '\n';
  }
  return below == 0 ? 0 : kExitFailure;
}

int run_dpi(const RunConfig& config, const Params& p, std::ostream& out) {
  const long dim = p.integer_or("dim", 2);
  const long samples = p.integer_or("samples", 200);
  if (dim < 2 || samples < 1) throw Error(ErrorCode::ConfigError, "need --dim >= 2, --samples >= 1");
  const double beta = p.number_or("beta", dim == 2 ? 1.0 : 0.25);
  std::vector<double> levels(static_cast<std::size_t>(dim));
  for (long i = 0; i < dim; ++i) levels[static_cast<std::size_t>(i)] = p.number_or("E1", 1.0) * i;
  const HermitianOperator h = HermitianOperator::diagonal(levels);

  struct Batch {
    Divergence variant;
    std::vector<double> alphas;
  };
  const std::vector<Batch> batches{
      {Divergence::Traditional, p.list_or("alphas", {0.1, 0.5, 1.0, 1.5, 2.0})},
      {Divergence::Sandwiched, p.list_or("alphas", {0.5, 1.0, 2.0, 3.0, 5.0, 10.0})},
  };
  std::string csv = "variant,alpha,checks,violations,maxExcess\n";
  int total = 0;
  for (const Batch& b : batches) {
    for (const double a : b.alphas) {
      const RenyiOrder alpha(a);
      const ThermalState th = solve_thermal_state(h, beta, alpha);
      int violations = 0;
      double worst = -std::numeric_limits<double>::infinity();
      for (long k = 0; k < samples; ++k) {
        const std::uint64_t s = config.seed + static_cast<std::uint64_t>(k);
        const Channel ch = random_thermal_fixing_channel(th.state, s);
        Rng rng(s ^ 0x9e3779b97f4a7c15ULL);
        const DpiResult r = dpi_check(ch, random_density(dim, rng), th.state, alpha, b.variant);
        worst = std::max(worst, r.after - r.before);
        if (!r.monotone) ++violations;
      }
      total += violations;
      csv += std::string(b.variant == Divergence::Traditional ? "traditional" : "sandwiched") +
             ',' + format_double(a) + ',' + std::to_string(samples) + ',' +
             std::to_string(violations) + ',' + format_double(worst) + '\n';
    }
  }
  emit(config, csv, out);
  if (!config.output_path.empty()) out << "violations " << total << '\n';
  return total == 0 ? 0 : kExitFailure;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "thermal") return Command::Thermal;
  if (name == "entropy") return Command::Entropy;
  if (name == "carnot") return Command::Carnot;
  if (name == "clausius") return Command::Clausius;
  if (name == "dpi") return Command::Dpi;
  if (name == "selftest") return Command::Selftest;
  return std::nullopt;
}

std::string_view command_name(Command command) {
  switch (command) {
    case Command::Thermal: return "thermal";
    case Command::Entropy: return "entropy";
    case Command::Carnot: return "carnot";
    case Command::Clausius: return "clausius";
    case Command::Dpi: return "dpi";
    case Command::Selftest: return "selftest";
  }
  return "unknown";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Params p(config.parameters);
  try {
    switch (config.command) {
      case Command::Thermal: return run_thermal(p, out);
      case Command::Entropy: return run_entropy(p, out);
      case Command::Carnot: return run_carnot(config, p, out);
      case Command::Clausius: return run_clausius(config, p, out);
      case Command::Dpi: return run_dpi(config, p, out);
      case Command::Selftest: {
        const SelftestSummary s = run_selftest(config.seed, out);
        out << "passed " << s.passed << " failed " << s.failed << '\n';
        return s.failed == 0 ? 0 : kExitFailure;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ConfigError ? kExitConfig : kExitFailure;
  }
  return kExitFailure;
}

}  // namespace renyi::cli
