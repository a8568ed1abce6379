"""Exact diagonalization of interacting bosons on a stirred 1D ring.

Working units throughout: energies in E0 = 2*pi^2*hbar^2/(M*L^2) (L = ring
circumference), lengths in L, times in hbar/E0. The stirring rate Omega, the
barrier strength beta = b/(L*E0), the barrier width sigma = w/L and the
contact coupling gamma = g/(L*E0) are all dimensionless. ``ringed.units``
converts to and from SI for concrete experimental scenarios.
"""

from .params import ModelParams, ConfigError, default_window, load_config, parse_config_text
from .basis import FockBasis, BasisSizeError
from .hamiltonian import RingHamiltonian, assemble, calibrate_coupling
from .spectra import EigenResult, SolverError, lowest_eigenpairs, gap_at_crossing
from .observables import momentum_distribution, qfi_pure, qfi_mixed, thermal_weights

__all__ = [
    "ModelParams",
    "ConfigError",
    "default_window",
    "load_config",
    "parse_config_text",
    "FockBasis",
    "BasisSizeError",
    "RingHamiltonian",
    "assemble",
    "calibrate_coupling",
    "EigenResult",
    "SolverError",
    "lowest_eigenpairs",
    "gap_at_crossing",
    "momentum_distribution",
    "qfi_pure",
    "qfi_mixed",
    "thermal_weights",
]

__version__ = "0.1.0"
