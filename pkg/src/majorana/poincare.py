"""Actions of the inhomogeneous Lorentz group on spinor fields.

All continuous actions here are defined on the momentum representation of
:mod:`majorana.fourier` (time evolution, translations, rotations of
partial-wave modes, boosts of analytic fields), where they are pointwise
rotations generated by i gamma^0 and hence exactly norm preserving.
Discrete spatial symmetries (parity, axis quarter-turns) and
grid-commensurate shifts act on position-space fields by index relabeling
plus a constant spinor matrix; the overall sign of any composite action is
tracked explicitly because the representation is projective on a real
Hilbert space: a full 2 pi rotation multiplies every field by -1.

The transition kernel T(x0, offset) propagates initial data by x0 in one
convolution; it reduces to a lattice delta at x0 = 0 and its spacelike
per-cell amplitude decays under grid refinement, the desk-scale rendering
of light-cone causality.  The raw kernel carries the 1/cellvolume
normalization of a delta family and does not converge pointwise, so the
scan reports both normalizations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .clifford import (
    GJG0,
    IG0,
    PinElement,
    pin_from_matrix,
    rotation_exp_ig0,
    spin_plus_element,
)
from .fields import GridSpec, MajoranaField, random_majorana_field
from .fourier import energy, majorana_fourier, majorana_fourier_inverse, momentum_kernel
from .hankel import SphericalModeField


def evolve(field: MajoranaField, x0: float, mass: float) -> MajoranaField:
    """Free time evolution by x0: each mode rotates by exp(-i gamma^0 E_p x0)."""
    if field.domain != "momentum":
        raise ValueError("evolve acts on momentum-space fields")
    e = energy(field.grid.momentum_grid(), mass)
    rot = rotation_exp_ig0(e * x0)
    return field.with_values(np.einsum("...ab,...b->...a", rot, field.values))


def translate(field: MajoranaField, b: np.ndarray, mass: float) -> MajoranaField:
    """Space-time translation by the 4-vector b = (b0, b1, b2, b3).

    Multiplies each mode by exp(-i gamma^0 (E_p b0 - p.b)); the pure time
    part coincides with evolve(b0) and a grid-commensurate spatial shift is
    a cyclic permutation in position space.
    """
    if field.domain != "momentum":
        raise ValueError("translate acts on momentum-space fields")
    b = np.asarray(b, dtype=float)
    if b.shape != (4,):
        raise ValueError("b must be a 4-vector")
    pg = field.grid.momentum_grid()
    phase = energy(pg, mass) * b[0] - np.einsum("...j,j->...", pg, b[1:])
    rot = rotation_exp_ig0(phase)
    return field.with_values(np.einsum("...ab,...b->...a", rot, field.values))


def rotate_z(modes: SphericalModeField, theta: float) -> SphericalModeField:
    """Rotation about the z axis on partial-wave modes.

    Each (p, l, mu) mode rotates by exp(+i gamma^0 (mu + 1/2) theta).  For
    theta an exact multiple of pi the half-integer phases are evaluated by
    integer parity, so rotate_z(2 pi) is exactly -identity: the spin-1/2
    signature of the projective representation.
    """
    if modes.kind != "majorana":
        raise ValueError("expected majorana-kind modes")
    mus = np.array([mu for (_, mu) in modes.quad.modes()])
    k = theta / math.pi
    if k == round(k):
        # angle = (2 mu + 1) k pi / 2 with k integer: phases are from {+-1, +-i}
        k = int(round(k))
        half_turns = (2 * mus + 1) * k  # phase angle in units of pi/2
        quadrant = half_turns % 4
        c = np.choose(quadrant, [1.0, 0.0, -1.0, 0.0])
        s = np.choose(quadrant, [0.0, 1.0, 0.0, -1.0])
    else:
        ang = (mus + 0.5) * theta
        c, s = np.cos(ang), np.sin(ang)
    out = c[:, None, None] * modes.values + s[:, None, None] * (modes.values @ IG0.T)
    return SphericalModeField(modes.quad, out, modes.kind)


def standard_boost(p: np.ndarray, mass: float) -> PinElement:
    """The boost taking the rest-frame momentum (m, 0) to (E_p, p), m > 0.

    B_p = (E_p + m - (p.gamma) gamma^0) / sqrt(2 m (E_p + m)); it intertwines
    i gamma^0 m with i pslash and its Lorentz image moves the rest-frame
    4-momentum onto the mass shell at p.
    """
    if mass <= 0:
        raise ValueError("the standard boost requires m > 0")
    s = _boost_matrix(np.asarray(p, dtype=float), mass)
    return pin_from_matrix(s)


def _boost_matrix(p: np.ndarray, mass: float, inverse: bool = False) -> np.ndarray:
    e = energy(p, mass)
    b = np.einsum("...j,jab->...ab", p, GJG0)
    sgn = 1.0 if inverse else -1.0
    return (((e + mass)[..., None, None]) * np.eye(4) + sgn * b) / np.sqrt(
        2 * mass * (e + mass)
    )[..., None, None]


def wigner_rotation(pin: PinElement, p: np.ndarray, mass: float) -> np.ndarray:
    """R(p) = B_p^{-1} S B_{q} with q the spatial part of Lambda^{-1} (E_p, p).

    Commutes with i gamma^0, i.e. lies in the unitary rotation subgroup;
    broadcasts over a leading stack of momenta.
    """
    p = np.asarray(p, dtype=float)
    lam_inv = np.linalg.inv(pin.lorentz)
    e = energy(p, mass)
    four = np.concatenate([e[..., None], p], axis=-1)
    q4 = four @ lam_inv.T
    q = q4[..., 1:]
    return _boost_matrix(p, mass, inverse=True) @ pin.s @ _boost_matrix(q, mass)


def _require_restricted(pin: PinElement):
    lam = pin.lorentz
    if abs(np.linalg.det(lam) - 1.0) > 1e-8 or lam[0, 0] < 0:
        raise ValueError("boost action is defined for restricted (proper orthochronous) elements")


def boost_action(profile, pin: PinElement, mass: float):
    """Momentum-space action of a restricted Lorentz transformation.

    ``profile`` maps an array of momenta (..., 3) to field values (..., 4).
    The returned evaluator implements

        Psi'(p) = R(p) sqrt(E_{q(p)} / E_p) Psi(q(p)),  q = spatial(Lambda^{-1} p)

    whose Jacobian square root makes the action unitary for the continuum
    momentum measure; resampling happens analytically, never on a grid.
    """
    if mass <= 0:
        raise ValueError("boost action requires m > 0")
    _require_restricted(pin)
    lam_inv = np.linalg.inv(pin.lorentz)

    def transformed(p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        e = energy(p, mass)
        four = np.concatenate([e[..., None], p], axis=-1)
        q4 = four @ lam_inv.T
        q = q4[..., 1:]
        eq = q4[..., 0]
        r = _boost_matrix(p, mass, inverse=True) @ pin.s @ _boost_matrix(q, mass)
        return np.sqrt(eq / e)[..., None] * np.einsum("...ab,...b->...a", r, profile(q))

    return transformed


@dataclass(frozen=True)
class PoincareElement:
    """A Pin element together with a translation 4-vector."""

    pin: PinElement
    b: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "b", np.asarray(self.b, dtype=float))
        if self.b.shape != (4,):
            raise ValueError("b must be a 4-vector")


def poincare_compose(g1: PoincareElement, g2: PoincareElement) -> PoincareElement:
    """(S1, b1) . (S2, b2) = (S1 S2, b2 + Lambda_2^{-1} b1)."""
    s = g1.pin.s @ g2.pin.s
    lam2_inv = np.linalg.inv(g2.pin.lorentz)
    return PoincareElement(
        PinElement(s, g1.pin.lorentz @ g2.pin.lorentz, g1.pin.sign * g2.pin.sign),
        g2.b + lam2_inv @ g1.b,
    )


def canonical_rotation_lift(axis: int, angle: float) -> PinElement:
    """Half-angle lift of a spatial rotation; the sign reference for composites."""
    theta = np.zeros(3)
    theta[axis] = angle / 2.0
    return spin_plus_element(theta, np.zeros(3))


def _grid_permutation_indices(grid: GridSpec, lam_spatial: np.ndarray, shift_cells: np.ndarray):
    """index arrays realising x -> Lambda^{-1} x + b on the periodic grid."""
    n = grid.n
    inv = np.linalg.inv(lam_spatial)
    if not np.allclose(inv, np.round(inv), atol=1e-12):
        raise ValueError("Lorentz matrix does not map the grid onto itself")
    inv = np.round(inv).astype(int)
    idx = np.indices((n,) * 3)  # target index k
    # x_k = -L/2 + k dx ; source x = inv @ x_target + shift
    src = np.zeros_like(idx)
    for a in range(3):
        acc = np.zeros_like(idx[0])
        for c in range(3):
            term = inv[a, c] * idx[c] + (inv[a, c] * (-(n // 2)))
            acc = acc + term
        acc = acc + n // 2 + shift_cells[a]
        src[a] = np.mod(acc, n)
    return tuple(src)


def poincare_apply_config(field: MajoranaField, g: PoincareElement, mass: float) -> MajoranaField:
    """Apply a grid-preserving Poincare element to a position-space field.

    Psi'(x) = sign * S Psi(Lambda^{-1} x + b): the spatial Lorentz part must
    permute the grid (identity, parity, axis quarter-turns and products),
    the spatial shift must be grid-commensurate, and the time component b0
    evolves the initial data.  General boosts act through
    :func:`boost_action` on analytic fields instead.
    """
    if field.domain != "position":
        raise ValueError("expected a position-space field")
    grid = field.grid
    lam = g.pin.lorentz
    if abs(lam[0, 0] - 1.0) > 1e-12 or np.abs(lam[0, 1:]).max() > 1e-12 or np.abs(lam[1:, 0]).max() > 1e-12:
        raise ValueError("only spatial (time-preserving) Lorentz parts act on gridded fields")
    shift = g.b[1:] / grid.spacing
    if np.abs(shift - np.round(shift)).max() > 1e-9:
        raise ValueError("translation is not grid-commensurate")
    src = _grid_permutation_indices(grid, lam[1:, 1:], np.round(shift).astype(int))
    inner = field
    if g.b[0] != 0.0:
        # Lambda^{-1} x + b has time component x0 + b0: evolve the data first
        inner = majorana_fourier_inverse(evolve(majorana_fourier(field, mass), g.b[0], mass), mass)
    values = g.pin.sign * (inner.values[src] @ g.pin.s.T)
    return field.with_values(values)


def projective_sign_check(
    g1: PoincareElement,
    g2: PoincareElement,
    grid: GridSpec,
    mass: float,
    seed: int = 0,
    canonical: PinElement | None = None,
) -> tuple[int, float]:
    """Realized sign of P(g1) P(g2) relative to P(g1 . g2) on a random field.

    Returns (sign, residual): the composite action equals sign times the
    action of the composed element, with the stated residual in the sup
    norm relative to the field scale.  ``canonical`` replaces the matrix
    product lift of the composite when a reference lift (e.g. the
    half-angle rotation lift) defines the sign convention.
    """
    psi = random_majorana_field(grid, seed)
    one = poincare_apply_config(psi, g2, mass)
    one = poincare_apply_config(one, g1, mass)
    composite = poincare_compose(g1, g2)
    if canonical is not None:
        composite = PoincareElement(canonical, composite.b)
    other = poincare_apply_config(psi, composite, mass)
    scale = np.abs(psi.values).max()
    dev_plus = np.abs(one.values - other.values).max() / scale
    dev_minus = np.abs(one.values + other.values).max() / scale
    if min(dev_plus, dev_minus) > 1e-10:
        raise ValueError(
            f"composite action is not a sign multiple (residuals {dev_plus:.2e}, {dev_minus:.2e})"
        )
    return (1, dev_plus) if dev_plus <= dev_minus else (-1, dev_minus)


def transition_operator(x0: float, grid: GridSpec, mass: float) -> np.ndarray:
    """Propagation kernel table T(x0, offset), shape grid.shape + (4, 4).

    Columns are the impulse responses of the evolution operator: with
    cellvol * sum_y T(x - y) Psi(y) the table reproduces evolve exactly by
    construction.  At x0 = 0 it is the lattice delta identity/cellvol (for
    m = 0 minus the projector on the zeroed p = 0 mode).
    """
    table = np.empty(grid.shape + (4, 4))
    for c in range(4):
        imp = np.zeros(grid.shape + (4,))
        imp[(0,) * grid.axes + (c,)] = 1.0 / grid.cell_volume
        f = MajoranaField(grid, imp)
        out = majorana_fourier_inverse(evolve(majorana_fourier(f, mass), x0, mass), mass)
        table[..., c] = out.values
    return table


def transition_operator_direct(x0: float, grid: GridSpec, mass: float) -> np.ndarray:
    """Momentum-sum evaluation of the transition kernel (test oracle, n <= 8).

    T(x) = (1/L^3) sum_p A(p) exp(-i gamma^0 (E_p x0 - p.offset)) A(p), with
    the same degenerate-mode conventions as the transform: no A factors on
    Nyquist-degenerate modes, p = 0 dropped when m = 0.
    """
    if grid.n > 8:
        raise ValueError("direct transition oracle restricted to n <= 8")
    pg = grid.momentum_grid().reshape(-1, 3)
    nyq = grid.nyquist_mask().reshape(-1)
    zero = grid.zero_mode_mask().reshape(-1)
    offs = grid.position_grid() - grid.positions()[0]  # offsets 0 .. (n-1) dx
    e = energy(pg, mass)
    table = np.zeros(grid.shape + (4, 4))
    for t in range(len(pg)):
        if zero[t] and mass == 0:
            continue
        phase = e[t] * x0 - offs @ pg[t]
        rot = rotation_exp_ig0(phase)
        if not (nyq[t] or zero[t]):
            a = momentum_kernel(pg[t], mass)
            rot = a @ rot @ a
        table += rot
    return table / grid.length**grid.axes


def spacelike_offsets(grid: GridSpec, x0: float, coarsest_spacing: float) -> np.ndarray:
    """Mask of grid offsets outside the light cone of x0, commensurate with
    the coarsest grid in a refinement sweep (so sweeps compare identical
    physical points)."""
    offs = grid.position_grid() - grid.positions()[0]
    half = grid.length / 2
    signed = np.where(offs > half, offs - grid.length, offs)
    dist = np.linalg.norm(signed, axis=-1)
    commensurate = np.all(
        np.abs(signed / coarsest_spacing - np.round(signed / coarsest_spacing)) < 1e-9, axis=-1
    )
    return commensurate & (dist > x0 + 1e-12)


def spacelike_norm_records(x0: float, grid: GridSpec, mass: float, coarsest_spacing: float) -> list[dict]:
    """Per-offset kernel norms outside the light cone, as JSON-ready records."""
    table = transition_operator(x0, grid, mass)
    norms = np.linalg.norm(table, axis=(-2, -1))
    mask = spacelike_offsets(grid, x0, coarsest_spacing)
    offs = grid.position_grid() - grid.positions()[0]
    half = grid.length / 2
    signed = np.where(offs > half, offs - grid.length, offs)
    records = []
    for idx in np.argwhere(mask):
        t = tuple(idx)
        records.append(
            {
                "offset": [float(v) for v in signed[t]],
                "x0": x0,
                "norm": float(norms[t]),
                "amplitude": float(norms[t] * grid.cell_volume),
                "grid": {"n": grid.n, "length": grid.length},
            }
        )
    return records


def causality_scan(
    x0: float, ns: list[int], length: float, mass: float
) -> list[dict]:
    """Spacelike leakage of the transition kernel under grid refinement.

    For each grid size the scan reports the maximum kernel norm over the
    spacelike offsets shared by all grids in the sweep, both raw and as the
    dimensionless per-cell amplitude ||T|| * cellvol (the lattice transition
    amplitude; the raw kernel carries the delta-family 1/cellvol scale and
    is not expected to converge pointwise).  The continuum kernel vanishes
    outside the light cone, so the per-cell amplitude must decrease toward
    zero with refinement.
    """
    coarsest = length / min(ns)
    records = []
    for n in ns:
        grid = GridSpec(n, length)
        table = transition_operator(x0, grid, mass)
        norms = np.linalg.norm(table, axis=(-2, -1))
        mask = spacelike_offsets(grid, x0, coarsest)
        timelike = float(norms[(0,) * grid.axes])
        records.append(
            {
                "n": n,
                "x0": x0,
                "mass": mass,
                "length": length,
                "max_spacelike_norm": float(norms[mask].max()),
                "max_spacelike_amplitude": float(norms[mask].max() * grid.cell_volume),
                "timelike_norm_at_origin": timelike,
                "offset_count": int(mask.sum()),
            }
        )
    return records
