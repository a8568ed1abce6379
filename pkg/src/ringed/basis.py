"""Bosonic Fock basis over a truncated plane-wave window.

States are occupation vectors (n_{k_lo}, ..., n_{k_hi}) with sum N, stored
in descending lexicographic order, so state 0 puts all atoms in the lowest
mode. The basis size is C(N + M - 1, N) for M window modes. Total momentum
K = sum_k k * n_k is an exact label of every state and partitions the basis
into blocks that the barrier-free Hamiltonian never mixes.
"""

from __future__ import annotations

from math import comb
from pathlib import Path

import numpy as np


class BasisSizeError(ValueError):
    """Basis would exceed the configured maximum number of states."""


def _compositions(n: int, m: int):
    # descending lexicographic: first mode occupancy from n down to 0
    if m == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, m - 1):
            yield (first,) + rest


class FockBasis:
    """Enumerated N-boson Fock states on the window [k_lo, k_hi]."""

    def __init__(self, n_atoms: int, window: tuple[int, int], max_states: int = 2_000_000):
        k_lo, k_hi = window
        if k_lo > k_hi:
            raise ValueError(f"empty mode window {window!r}")
        if n_atoms < 1:
            raise ValueError(f"n_atoms must be >= 1, got {n_atoms}")
        n_modes = k_hi - k_lo + 1
        size = comb(n_atoms + n_modes - 1, n_atoms)
        if size > max_states:
            raise BasisSizeError(
                f"basis for N={n_atoms}, window={window} has {size} states, "
                f"above the configured maximum {max_states}"
            )
        self.n_atoms = n_atoms
        self.window = (k_lo, k_hi)
        self.modes = np.arange(k_lo, k_hi + 1, dtype=np.int64)
        occ = np.empty((size, n_modes), dtype=np.int64)
        for i, state in enumerate(_compositions(n_atoms, n_modes)):
            occ[i] = state
        self.occupations = occ
        self.size = size
        # base-(N+1) integer key per state; descending along the enumeration,
        # which makes an ascending view usable with searchsorted
        self._powers = (n_atoms + 1) ** np.arange(n_modes - 1, -1, -1, dtype=np.int64)
        keys = occ @ self._powers
        self._keys_ascending = keys[::-1].copy()
        self.total_momentum = occ @ self.modes

    @property
    def n_modes(self) -> int:
        return len(self.modes)

    def index_of(self, occupation) -> int:
        """Index of one occupation vector; KeyError if not a basis state."""
        occ = np.asarray(occupation, dtype=np.int64)
        if occ.shape != (self.n_modes,) or occ.min() < 0 or occ.sum() != self.n_atoms:
            raise KeyError(f"not a valid occupation vector: {occupation!r}")
        return int(self.lookup(occ[None, :])[0])

    def lookup(self, occupations: np.ndarray) -> np.ndarray:
        """Vectorized occupation-matrix -> state-index lookup."""
        keys = occupations @ self._powers
        pos = np.searchsorted(self._keys_ascending, keys)
        if np.any(pos >= self.size) or np.any(self._keys_ascending[np.minimum(pos, self.size - 1)] != keys):
            raise KeyError("occupation vector outside this basis")
        return self.size - 1 - pos

    def momentum_blocks(self) -> dict[int, np.ndarray]:
        """Map total momentum K -> indices of the states in that block."""
        order = np.argsort(self.total_momentum, kind="stable")
        ks, starts = np.unique(self.total_momentum[order], return_index=True)
        bounds = np.append(starts, self.size)
        return {int(k): np.sort(order[bounds[i] : bounds[i + 1]]) for i, k in enumerate(ks)}

    def block_projection(self, psi: np.ndarray) -> dict[int, float]:
        """Probability weight of ``psi`` in each momentum block."""
        w = np.abs(psi) ** 2
        return {k: float(w[idx].sum()) for k, idx in self.momentum_blocks().items()}

    def to_csv(self, path: str | Path) -> None:
        """Dump the enumeration as CSV: index, K, occupations."""
        lines = ["# Fock basis dump: one row per state, occupations over the mode window", "index,K,occupations"]
        for i in range(self.size):
            occ = " ".join(str(int(v)) for v in self.occupations[i])
            lines.append(f"{i},{int(self.total_momentum[i])},{occ}")
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FockBasis(n_atoms={self.n_atoms}, window={self.window}, size={self.size})"
