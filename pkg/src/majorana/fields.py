"""Periodic-grid discretization contracts and spinor field containers.

A field lives on a periodic box of ``n`` points per axis (n even) with
sample points x_k = -L/2 + k L/n and grid momenta p_j = 2 pi j / L for
integer j in [-n/2, n/2), stored in FFT index order.  Discrete inner
products carry the cell volume (position side) or (2 pi / L)^axes
(momentum side) so that the transforms in :mod:`majorana.fourier` are
exactly norm preserving.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np


@dataclass(frozen=True)
class GridSpec:
    """Uniform periodic grid: ``n`` points per axis over a box of length ``length``."""

    n: int
    length: float
    axes: int = 3

    def __post_init__(self):
        if self.n <= 0 or self.n % 2 != 0:
            raise ValueError("n must be a positive even integer")
        if self.length <= 0:
            raise ValueError("length must be positive")
        if self.axes not in (1, 3):
            raise ValueError("axes must be 1 or 3")

    @property
    def spacing(self) -> float:
        return self.length / self.n

    @property
    def cell_volume(self) -> float:
        return self.spacing**self.axes

    @property
    def momentum_cell(self) -> float:
        return (2 * np.pi / self.length) ** self.axes

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.n,) * self.axes

    def positions(self) -> np.ndarray:
        return -self.length / 2 + self.spacing * np.arange(self.n)

    def position_grid(self) -> np.ndarray:
        xs = self.positions()
        return np.stack(np.meshgrid(*([xs] * self.axes), indexing="ij"), axis=-1)

    def frequencies(self) -> np.ndarray:
        """Integer mode numbers j in [-n/2, n/2) in FFT storage order."""
        return np.fft.fftfreq(self.n, d=1.0 / self.n)

    def momenta(self) -> np.ndarray:
        return 2 * np.pi * self.frequencies() / self.length

    def momentum_grid(self) -> np.ndarray:
        ps = self.momenta()
        return np.stack(np.meshgrid(*([ps] * self.axes), indexing="ij"), axis=-1)

    def mode_signs(self) -> np.ndarray:
        """(-1)^(sum of mode numbers); the phase of the -L/2 grid offset."""
        fr = self.frequencies()
        total = fr
        for _ in range(self.axes - 1):
            total = total[..., None] + fr
        return (-1.0) ** total

    def nyquist_mask(self) -> np.ndarray:
        """Modes with at least one axis at the Nyquist frequency -n/2.

        The negated momentum of such a mode aliases onto the mode itself
        axis-wise, so no grid partner can carry the (+p, -p) pair structure.
        """
        ny = self.frequencies() == -self.n // 2
        mask = ny
        for _ in range(self.axes - 1):
            mask = mask[..., None] | ny
        return mask

    def zero_mode_mask(self) -> np.ndarray:
        fr = self.frequencies() == 0
        mask = fr
        for _ in range(self.axes - 1):
            mask = mask[..., None] & fr
        return mask

    def negate_modes(self, values: np.ndarray) -> np.ndarray:
        """Resample mode data at the negated momentum index t -> (n - t) mod n."""
        out = values
        for ax in range(self.axes):
            out = np.roll(np.flip(out, axis=ax), 1, axis=ax)
        return out


@dataclass
class MajoranaField:
    """4-component real spinor samples over a grid, in position or momentum space."""

    grid: GridSpec
    values: np.ndarray
    domain: str = "position"

    def __post_init__(self):
        expected = self.grid.shape + (4,)
        if self.values.shape != expected:
            raise ValueError(f"values shape {self.values.shape} != {expected}")
        if self.domain not in ("position", "momentum"):
            raise ValueError("domain must be 'position' or 'momentum'")

    def norm(self) -> float:
        w = self.grid.cell_volume if self.domain == "position" else self.grid.momentum_cell
        return float(np.sqrt(w * np.sum(self.values**2)))

    def with_values(self, values: np.ndarray, domain: str | None = None) -> "MajoranaField":
        return replace(self, values=values, domain=domain or self.domain)


@dataclass
class PauliField:
    """2-component complex spinor samples over a grid."""

    grid: GridSpec
    values: np.ndarray
    domain: str = "position"

    def __post_init__(self):
        expected = self.grid.shape + (2,)
        if self.values.shape != expected:
            raise ValueError(f"values shape {self.values.shape} != {expected}")
        if self.domain not in ("position", "momentum"):
            raise ValueError("domain must be 'position' or 'momentum'")

    def norm(self) -> float:
        w = self.grid.cell_volume if self.domain == "position" else self.grid.momentum_cell
        return float(np.sqrt(w * np.sum(np.abs(self.values) ** 2)))

    def with_values(self, values: np.ndarray, domain: str | None = None) -> "PauliField":
        return replace(self, values=values, domain=domain or self.domain)


def random_majorana_field(grid: GridSpec, seed: int, domain: str = "position") -> MajoranaField:
    """Standard-normal components from numpy's PCG64 stream for ``seed``.

    The generator algorithm is part of the reproducibility contract of the
    experiment reports: values = default_rng(seed).standard_normal(shape).
    """
    rng = np.random.default_rng(seed)
    return MajoranaField(grid, rng.standard_normal(grid.shape + (4,)), domain)


def random_pauli_field(grid: GridSpec, seed: int, domain: str = "position") -> PauliField:
    rng = np.random.default_rng(seed)
    re = rng.standard_normal(grid.shape + (2,))
    im = rng.standard_normal(grid.shape + (2,))
    return PauliField(grid, re + 1j * im, domain)
