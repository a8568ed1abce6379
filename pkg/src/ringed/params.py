"""Dimensionless model parameters and the line-based config format.

All quantities are expressed in ring units (energy E0, length L, time
hbar/E0); see the package docstring. A parameter set is immutable; sweeps
derive new sets with :func:`dataclasses.replace`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from pathlib import Path


class ConfigError(ValueError):
    """Raised for malformed config files or invalid parameter values."""


def default_window(n_atoms: int, modes_per_side: int) -> tuple[int, int]:
    """Return the plane-wave window [1 - m, m] for m = ``modes_per_side``.

    The window is symmetric about k = 1/2, the degeneracy point of the
    kinetic spectrum at Omega = pi, so both partners of the avoided
    crossing are truncated identically. ``n_atoms`` is accepted for
    signature stability; the default choice does not depend on it.
    """
    del n_atoms
    if modes_per_side < 1:
        raise ConfigError(f"modes_per_side must be >= 1, got {modes_per_side}")
    return (1 - modes_per_side, modes_per_side)


@dataclass(frozen=True)
class ModelParams:
    """Parameters of the stirred-ring Hamiltonian in dimensionless units.

    Attributes
    ----------
    n_atoms:
        Number of bosons N.
    window:
        Inclusive plane-wave index range (k_lo, k_hi).
    omega:
        Stirring rate Omega (the avoided crossing sits at Omega = pi).
    barrier:
        Barrier strength beta = b/(L*E0), >= 0.
    barrier_width:
        Gaussian barrier width sigma/L; 0 means a delta barrier.
    coupling:
        Contact coupling gamma = g/(L*E0), >= 0.
    coupling_rescale:
        Finite-window compensation factor applied multiplicatively to
        ``coupling`` (see :func:`ringed.hamiltonian.calibrate_coupling`).
    """

    n_atoms: int
    window: tuple[int, int]
    omega: float
    barrier: float
    coupling: float
    barrier_width: float = 0.0
    coupling_rescale: float = 1.0

    def __post_init__(self) -> None:
        if not isinstance(self.n_atoms, int) or self.n_atoms < 1:
            raise ConfigError(f"n_atoms must be a positive integer, got {self.n_atoms!r}")
        k_lo, k_hi = self.window
        if int(k_lo) != k_lo or int(k_hi) != k_hi or k_lo > k_hi:
            raise ConfigError(f"window must be an integer range (k_lo <= k_hi), got {self.window!r}")
        object.__setattr__(self, "window", (int(k_lo), int(k_hi)))
        if not math.isfinite(self.omega):
            raise ConfigError(f"omega must be finite, got {self.omega!r}")
        if self.barrier < 0:
            raise ConfigError(f"barrier must be >= 0, got {self.barrier!r}")
        if self.barrier_width < 0:
            raise ConfigError(f"barrier_width must be >= 0, got {self.barrier_width!r}")
        if self.coupling < 0:
            raise ConfigError(f"coupling must be >= 0, got {self.coupling!r}")
        if not self.coupling_rescale > 0:
            raise ConfigError(f"coupling_rescale must be > 0, got {self.coupling_rescale!r}")

    @property
    def n_modes(self) -> int:
        return self.window[1] - self.window[0] + 1

    @property
    def gamma_effective(self) -> float:
        """Coupling actually entering the Hamiltonian: gamma * rescale."""
        return self.coupling * self.coupling_rescale

    def with_omega(self, omega: float) -> "ModelParams":
        return replace(self, omega=omega)

    def with_coupling(self, coupling: float) -> "ModelParams":
        return replace(self, coupling=coupling)

    @classmethod
    def from_mapping(cls, mapping: dict) -> "ModelParams":
        """Build params from config keys (n_atoms, modes_per_side, omega, ...)."""
        data = dict(mapping)
        missing = [k for k in ("n_atoms", "modes_per_side", "omega", "barrier", "coupling") if k not in data]
        if missing:
            raise ConfigError(f"missing required config keys: {', '.join(missing)}")
        window = default_window(int(data["n_atoms"]), int(data.pop("modes_per_side")))
        return cls(
            n_atoms=int(data.pop("n_atoms")),
            window=window,
            omega=float(data.pop("omega")),
            barrier=float(data.pop("barrier")),
            coupling=float(data.pop("coupling")),
            barrier_width=float(data.pop("barrier_width", 0.0)),
            coupling_rescale=float(data.pop("coupling_rescale", 1.0)),
        )


#: keys understood by ModelParams.from_mapping
MODEL_KEYS = frozenset(
    {"n_atoms", "modes_per_side", "omega", "barrier", "barrier_width", "coupling", "coupling_rescale"}
)

def _parse_value(value: str):
    for cast in (int, float):
        try:
            return cast(value)
        except ValueError:
            continue
    return value


def parse_config_text(text: str, extra_keys: frozenset[str] = frozenset()) -> dict:
    """Parse ``key = value`` lines into a dict.

    Blank lines and ``#`` comments are ignored. Keys outside
    MODEL_KEYS | extra_keys and duplicate keys are errors: a config must
    be fully resolved, never silently patched. Values become int or float
    when they parse as such, otherwise stay strings (sweep-mode names).
    """
    allowed = MODEL_KEYS | extra_keys
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in allowed:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in out:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        out[key] = _parse_value(value)
    return out


def load_config(path: str | Path, extra_keys: frozenset[str] = frozenset()) -> dict:
    return parse_config_text(Path(path).read_text(encoding="utf-8"), extra_keys=extra_keys)
