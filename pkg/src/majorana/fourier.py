"""Unitary momentum-space transforms of spinor fields on periodic grids.

The complex-side transform is the plain unitary DFT with the continuum
kernel exp(-i p.x) / (2 pi)^(d/2); the Riemann weights (cell volume
forward, momentum cell backward) make it exactly norm preserving between
the discrete inner products of :mod:`majorana.fields`.

The real-spinor transform composes three exactly unitary steps:

    real field --theta^-1--> complex field --DFT--> modes --S block--> modes

where the S block mixes each (+p, -p) momentum pair through the orthogonal
2x2 block with entries sqrt((E+-m)/2E) and the real matrix
(p.gamma) gamma^0 / |p|.  The result is the same operator as the direct
real-matrix kernel

    exp(-i gamma^0 p.x) (pslash gamma^0 + m) / (sqrt(E_p+m) sqrt(2 E_p)),

evaluated by :func:`majorana_fourier_direct` as an independent oracle.

Grid degeneracies.  On an even grid the modes with any axis at the Nyquist
frequency alias onto their own momentum negation, so they cannot carry the
two-sided pair structure; the S block acts as the identity there.  These
modes are an O(axes/n) fraction and shrink away under refinement.  For
m = 0 the p = 0 kernel has no limit and that single mode is zeroed instead
(see :func:`zeroed_modes`).  :func:`project_to_paired_modes` restricts a
field to the cleanly paired subspace; operator-diagonalization statements
hold exactly there.
"""

from __future__ import annotations

import numpy as np

from .clifford import GJG0, IG0, inverse_theta_map, theta_map
from .fields import GridSpec, MajoranaField, PauliField


def energy(p: np.ndarray, mass: float) -> np.ndarray:
    """Relativistic mode energy sqrt(|p|^2 + m^2) (c = hbar = 1)."""
    if mass < 0:
        raise ValueError("mass must be non-negative")
    p = np.asarray(p, dtype=float)
    return np.sqrt(np.sum(p * p, axis=-1) + mass * mass)


def pauli_fourier(field: PauliField) -> PauliField:
    """Unitary DFT of a complex spinor field, component-wise."""
    if field.domain != "position":
        raise ValueError("expected a position-space field")
    g = field.grid
    axes = tuple(range(g.axes))
    out = np.fft.fftn(field.values, axes=axes)
    out = out * g.mode_signs()[..., None] * (g.cell_volume / (2 * np.pi) ** (g.axes / 2))
    return field.with_values(out, "momentum")


def pauli_fourier_inverse(field: PauliField) -> PauliField:
    if field.domain != "momentum":
        raise ValueError("expected a momentum-space field")
    g = field.grid
    axes = tuple(range(g.axes))
    tmp = field.values * g.mode_signs()[..., None]
    out = np.fft.ifftn(tmp, axes=axes) * ((2 * np.pi) ** (g.axes / 2) / g.cell_volume)
    return field.with_values(out, "position")


def momentum_kernel(p: np.ndarray, mass: float) -> np.ndarray:
    """Spinor weight A(p) = (E + m - (p.gamma) gamma^0) / sqrt((E+m) 2E).

    A(p) is real symmetric, not orthogonal: with B = (p.gamma) gamma^0 it
    satisfies A^2 = 1 - B/E and A (i gamma^0) A = (m/E) i gamma^0, the two
    identities that make the transition kernel collapse to a lattice delta
    at x0 = 0.  Unitarity of the full transform comes from the paired S
    block, not from A alone.
    """
    p = np.asarray(p, dtype=float)
    if mass == 0 and not np.any(p):
        raise ValueError("A(p) is undefined at p = 0 when m = 0")
    e = energy(p, mass)
    b = np.einsum("...j,jab->...ab", p, GJG0)
    return ((e + mass)[..., None, None] * np.eye(4) - b) / np.sqrt((e + mass) * 2 * e)[..., None, None]


def _pair_weights(grid: GridSpec, mass: float):
    """Per-mode S-block data: weights a, b, direction matrix K, degeneracy masks."""
    pg = grid.momentum_grid()
    e = energy(pg, mass)
    absp = np.linalg.norm(pg, axis=-1)
    zero = grid.zero_mode_mask()
    safe_e = np.where(e > 0, e, 1.0)
    a = np.where(e > 0, np.sqrt((e + mass) / (2 * safe_e)), 1.0)
    b = np.where(e > 0, np.sqrt(np.maximum(e - mass, 0.0) / (2 * safe_e)), 0.0)
    bmat = np.einsum("...j,jab->...ab", pg, GJG0)
    k = np.where((absp > 0)[..., None, None], bmat / np.where(absp == 0, 1.0, absp)[..., None, None], 0.0)
    return a, b, k, grid.nyquist_mask(), zero


def s_block_map(field: MajoranaField, mass: float, inverse: bool = False) -> MajoranaField:
    """Mix each (+p, -p) mode pair by the orthogonal boost-weight block.

    Acting row-wise at every mode t with partner neg(t):

        out(t) = a(t) in(t) -/+ b(t) K(t) in(neg t)

    (upper sign forward, lower inverse) realises both rows of the 2x2 block
    at once because a, b are even and K is odd under p -> -p.  Nyquist-
    degenerate modes pass through unchanged; the m = 0 zero mode is zeroed.
    """
    if field.domain != "momentum":
        raise ValueError("expected a momentum-space field")
    g = field.grid
    a, b, k, nyq, zero = _pair_weights(g, mass)
    sgn = 1.0 if inverse else -1.0
    out = a[..., None] * field.values + sgn * b[..., None] * np.einsum(
        "...ab,...b->...a", k, g.negate_modes(field.values)
    )
    passthrough = nyq | zero
    out[passthrough] = field.values[passthrough]
    if mass == 0:
        out[zero] = 0.0
    return field.with_values(out)


def majorana_fourier(field: MajoranaField, mass: float) -> MajoranaField:
    """Momentum transform of a real spinor field (unitary, see module docs)."""
    if field.domain != "position":
        raise ValueError("expected a position-space field")
    pauli = PauliField(field.grid, inverse_theta_map(field.values))
    modes = theta_map(pauli_fourier(pauli).values)
    return s_block_map(MajoranaField(field.grid, modes, "momentum"), mass)


def majorana_fourier_inverse(field: MajoranaField, mass: float) -> MajoranaField:
    if field.domain != "momentum":
        raise ValueError("expected a momentum-space field")
    unblocked = s_block_map(field, mass, inverse=True)
    pauli = PauliField(field.grid, inverse_theta_map(unblocked.values), "momentum")
    return MajoranaField(field.grid, theta_map(pauli_fourier_inverse(pauli).values), "position")


def majorana_fourier_direct(field: MajoranaField, mass: float) -> MajoranaField:
    """Literal kernel-sum evaluation of the momentum transform (test oracle).

    For every grid momentum the sum cellvol * sum_x exp(-i gamma^0 p.x) A(p)
    Psi(x) / (2 pi)^(3/2) is evaluated with real 4x4 matrices and no FFT;
    the degenerate modes carry the same convention as the fast path (phase
    sum without A at Nyquist-degenerate modes, zero at p = 0 for m = 0).
    Cost is O(n^6); refuses grids beyond n = 8.
    """
    if field.domain != "position":
        raise ValueError("expected a position-space field")
    g = field.grid
    if g.axes != 3:
        raise ValueError("direct oracle is implemented for 3 axes")
    if g.n > 8:
        raise ValueError("direct oracle is restricted to n <= 8")
    x = g.position_grid().reshape(-1, 3)
    v = field.values.reshape(-1, 4)
    pg = g.momentum_grid().reshape(-1, 3)
    nyq = g.nyquist_mask().reshape(-1)
    zero = g.zero_mode_mask().reshape(-1)
    scale = g.cell_volume / (2 * np.pi) ** 1.5
    out = np.zeros((len(pg), 4))
    for t in range(len(pg)):
        th = x @ pg[t]
        if zero[t] and mass == 0:
            continue
        if nyq[t] or zero[t]:
            w = v
        else:
            w = v @ momentum_kernel(pg[t], mass).T
        out[t] = scale * (np.cos(th)[:, None] * w - np.sin(th)[:, None] * (w @ IG0.T)).sum(axis=0)
    return MajoranaField(g, out.reshape(g.shape + (4,)), "momentum")


def zeroed_modes(grid: GridSpec, mass: float) -> list[tuple[int, ...]]:
    """Indices of modes annihilated by the transform (empty unless m = 0)."""
    if mass > 0:
        return []
    return [tuple(idx) for idx in np.argwhere(grid.zero_mode_mask())]


def project_to_paired_modes(field: MajoranaField, drop_zero_mode: bool = False) -> MajoranaField:
    """Zero all Nyquist-degenerate momentum content (and optionally p = 0).

    The result lies in the subspace where every mode has a distinct -p
    partner, which is where the pair-block factorization and the operator
    diagonalization statements are exact on a finite grid.
    """
    g = field.grid
    pauli = inverse_theta_map(field.values)
    if field.domain == "position":
        ph = pauli_fourier(PauliField(g, pauli)).values
    else:
        ph = pauli
    ph = ph.copy()
    ph[g.nyquist_mask()] = 0
    if drop_zero_mode:
        ph[g.zero_mode_mask()] = 0
    if field.domain == "position":
        back = pauli_fourier_inverse(PauliField(g, ph, "momentum")).values
    else:
        back = ph
    return field.with_values(theta_map(back))


def apply_dirac_operator(field: MajoranaField, mass: float) -> MajoranaField:
    """i H Psi = (gamma^0 gamma.del + i gamma^0 m) Psi with spectral derivatives.

    Derivatives are exact multiplications by i p_j on the complex side of
    the theta bridge.  Conjugated by the momentum transform this operator
    is multiplication by i gamma^0 E_p on the paired-mode subspace.
    """
    if field.domain != "position":
        raise ValueError("expected a position-space field")
    g = field.grid
    if g.axes != 3:
        raise ValueError("the Dirac operator acts on 3-axis fields")
    spec = pauli_fourier(PauliField(g, inverse_theta_map(field.values))).values
    pg = g.momentum_grid()
    out = mass * (field.values @ IG0.T)
    for j in range(3):
        dpsi = pauli_fourier_inverse(
            PauliField(g, 1j * pg[..., j : j + 1] * spec, "momentum")
        ).values
        # gamma^0 gamma^j = -(gamma^j gamma^0)
        out += theta_map(dpsi) @ (-GJG0[j]).T
    return field.with_values(out)


def energy_transform(field: MajoranaField) -> MajoranaField:
    """Time-axis transform with kernel exp(+i gamma^0 p0 x0) / sqrt(2 pi).

    The sign is opposite the spatial transform, matching the Minkowski
    product p.x = p0 x0 - p.x; realised as the theta conjugate of the 1d
    inverse-sign unitary DFT.  No mass enters and no mode is degenerate.
    """
    if field.grid.axes != 1:
        raise ValueError("energy transform acts on time-series fields (axes=1)")
    if field.domain != "position":
        raise ValueError("expected a position-space field")
    g = field.grid
    psi = inverse_theta_map(field.values)
    # kernel exp(+i p0 x0) = conjugate-sign DFT: conjugate, transform, conjugate
    out = np.conj(pauli_fourier(PauliField(g, np.conj(psi))).values)
    return field.with_values(theta_map(out), "momentum")


def energy_transform_inverse(field: MajoranaField) -> MajoranaField:
    if field.grid.axes != 1:
        raise ValueError("energy transform acts on time-series fields (axes=1)")
    if field.domain != "momentum":
        raise ValueError("expected a momentum-space field")
    g = field.grid
    psi = inverse_theta_map(field.values)
    out = np.conj(pauli_fourier_inverse(PauliField(g, np.conj(psi), "momentum")).values)
    return field.with_values(theta_map(out), "position")
