"""Renyi-entropy quantum thermodynamics: thermal states, free energies, cycles."""

from ._core import (
    RenyiError,
    ThermalState,
    pair_oracle,
    carnot_cycle,
    clausius_sweep,
    free_energy_report,
    gibbs_state,
    minimality_certificate,
    qubit_beta_closed_form,
    relative_entropy,
    renyi_entropy,
    renyi_internal_energy,
    run_cli,
    solve_thermal_state,
)

__all__ = [
    "RenyiError",
    "ThermalState",
    "pair_oracle",
    "carnot_cycle",
    "clausius_sweep",
    "free_energy_report",
    "gibbs_state",
    "minimality_certificate",
    "qubit_beta_closed_form",
    "relative_entropy",
    "renyi_entropy",
    "renyi_internal_energy",
    "run_cli",
    "solve_thermal_state",
]
