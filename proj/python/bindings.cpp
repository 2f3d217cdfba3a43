#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>

#include <sstream>

#include "renyi/cli.hpp"
#include "renyi/clausius.hpp"
#include "renyi/free_energy.hpp"
#include "renyi/measures.hpp"
#include "renyi/process.hpp"
#include "renyi/thermal.hpp"

namespace py = pybind11;
using namespace renyi;

namespace {

Divergence variant_from(const std::string& name) {
  if (name == "traditional") return Divergence::Traditional;
  if (name == "sandwiched") return Divergence::Sandwiched;
  throw Error(ErrorCode::InvalidArgument, "variant must be 'traditional' or 'sandwiched'");
}

py::dict record_dict(const ClausiusRecord& r) {
  py::dict d;
  d["alpha"] = r.alpha;
  d["dS"] = r.ds;
  d["beta_dQ1"] = r.q1;
  d["beta_dQ2"] = r.q2;
  d["beta_dU"] = r.q3;
  d["dD_trad"] = r.d_trad;
  d["dD_sand"] = r.d_sand;
  d["dDeltaTildePrime"] = r.d_delta_tilde_prime;
  return d;
}

StateFamily qubit_family(double alpha, const std::string& kind, double gamma_min, double gamma_max) {
  const HamiltonianFamily h = qubit_gap_family(gamma_min, gamma_max);
  if (kind == "thermal") return StateFamily::thermal(h, RenyiOrder(alpha));
  if (kind == "deformed") {
    return StateFamily::deformed(h, RenyiOrder(alpha), measure_prepare_factory(reference_eta(), 0.3),
                                 level_rotation(2, 0.15));
  }
  throw Error(ErrorCode::InvalidArgument, "family must be 'thermal' or 'deformed'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Renyi-entropy quantum thermodynamics core";

  static py::exception<Error> renyi_error(m, "RenyiError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = renyi_error;
      py::object instance = err(e.what());
      instance.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(renyi_error.ptr(), instance.ptr());
    }
  });

  py::class_<ThermalState>(m, "ThermalState")
      .def_property_readonly("state", [](const ThermalState& t) { return t.state.matrix(); })
      .def_property_readonly("base", [](const ThermalState& t) { return t.base.matrix(); })
      .def_property_readonly("alpha", [](const ThermalState& t) { return t.alpha.value(); })
      .def_readonly("beta", &ThermalState::beta)
      .def_readonly("partition_function", &ThermalState::partition_function)
      .def_readonly("log_partition", &ThermalState::log_partition)
      .def_readonly("energy", &ThermalState::energy)
      .def_readonly("entropy", &ThermalState::entropy)
      .def_readonly("free_energy", &ThermalState::free_energy)
      .def_readonly("cutoff_applied", &ThermalState::cutoff_applied);

  m.def(
      "solve_thermal_state",
      [](const Matrix& h, double beta, double alpha) {
        return solve_thermal_state(HermitianOperator(h), beta, RenyiOrder(alpha));
      },
      py::arg("H"), py::arg("beta"), py::arg("alpha"));
  m.def(
      "gibbs_state", [](const Matrix& h, double beta) { return gibbs_state(HermitianOperator(h), beta).matrix(); },
      py::arg("H"), py::arg("beta"));
  m.def(
      "qubit_beta_closed_form",
      [](double p0, double e1, double alpha) { return qubit_beta_closed_form(p0, e1, RenyiOrder(alpha)); },
      py::arg("p0"), py::arg("E1"), py::arg("alpha"));

  m.def(
      "renyi_entropy", [](const Matrix& rho, double alpha) { return renyi_entropy(validate_density(rho), RenyiOrder(alpha)); },
      py::arg("rho"), py::arg("alpha"));
  m.def(
      "renyi_internal_energy",
      [](const Matrix& rho, const Matrix& h, double alpha) {
        return renyi_internal_energy(validate_density(rho), HermitianOperator(h), RenyiOrder(alpha));
      },
      py::arg("rho"), py::arg("H"), py::arg("alpha"));
  m.def(
      "relative_entropy",
      [](const Matrix& rho, const Matrix& sigma, double alpha, const std::string& variant) {
        return relative_entropy(variant_from(variant), validate_density(rho), validate_density(sigma),
                                RenyiOrder(alpha));
      },
      py::arg("rho"), py::arg("sigma"), py::arg("alpha"), py::arg("variant") = "traditional");

  m.def(
      "free_energy_report",
      [](const Matrix& rho, const ThermalState& th) {
        const FreeEnergyReport r = free_energy_report(validate_density(rho), th);
        py::dict d;
        d["f_tilde"] = r.f_tilde;
        d["f_sand"] = r.f_sand;
        d["f_form"] = r.f_form;
        d["f_equilibrium"] = r.f_equilibrium;
        d["gap"] = r.gap;
        d["divergence_trad"] = r.divergence_trad;
        d["divergence_sand"] = r.divergence_sand;
        return d;
      },
      py::arg("rho"), py::arg("thermal"));
  m.def(
      "minimality_certificate",
      [](const ThermalState& th, int samples, std::uint64_t seed) {
        return minimality_certificate(th, samples, seed).min_gap;
      },
      py::arg("thermal"), py::arg("samples"), py::arg("seed"));

  m.def(
      "carnot_cycle",
      [](double t_hot, double t_cold, double alpha, int steps, const std::string& family,
         double gamma1, double gamma2) {
        const CycleReport r =
            run_carnot_cycle(qubit_family(alpha, family, 0.25, 2.5), gamma1, gamma2, t_hot, t_cold, {steps, {}});
        py::dict d;
        d["efficiency"] = r.efficiency;
        d["analytic"] = r.analytic;
        d["total_work"] = r.total_work;
        d["qex1"] = r.qex1;
        d["closure_distance"] = r.closure_distance;
        d["net_entropy"] = r.net_entropy;
        d["gammas"] = r.gammas;
        d["csv"] = cycle_csv(r);
        return d;
      },
      py::arg("Th"), py::arg("Tc"), py::arg("alpha"), py::arg("steps") = 10000,
      py::arg("family") = "thermal", py::arg("gamma1") = 2.0, py::arg("gamma2") = 1.0);

  m.def(
      "clausius_sweep",
      [](double dq, double p0, double e1, std::vector<double> alphas) {
        if (alphas.empty()) alphas = default_alpha_grid();
        py::list out;
        for (const ClausiusRecord& r : clausius_sweep(p0, e1, dq, reference_eta(), alphas)) out.append(record_dict(r));
        return out;
      },
      py::arg("dq"), py::arg("p0") = 0.7, py::arg("E1") = 1.0, py::arg("alphas") = std::vector<double>{});
  m.def(
      "pair_oracle",
      [](double p0, double e1, double dq, double alpha) {
        const PairOracle o = pair_oracle(p0, e1, dq, RenyiOrder(alpha));
        return py::make_tuple(o.ds, o.beta_dq);
      },
      py::arg("p0"), py::arg("E1"), py::arg("dq"), py::arg("alpha"));

  m.def(
      "run_cli",
      [](const std::string& command, std::map<std::string, std::string> parameters, std::uint64_t seed) {
        const auto parsed = cli::parse_command(command);
        if (!parsed) throw Error(ErrorCode::ConfigError, "unknown command '" + command + "'");
        std::ostringstream out;
        std::ostringstream err;
        const int status = cli::run({*parsed, std::move(parameters), {}, seed}, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("command"), py::arg("parameters") = std::map<std::string, std::string>{}, py::arg("seed") = 0);
}
