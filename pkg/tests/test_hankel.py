import math

import numpy as np
import pytest
from scipy.special import lpmv, spherical_jn

from majorana.clifford import GAMMA, IG0
from majorana.hankel import (
    SphericalField,
    SphericalModeField,
    SphericalQuadSpec,
    angular_momentum_check,
    assoc_legendre,
    delta_kernel,
    majorana_hankel,
    majorana_hankel_direct,
    majorana_hankel_inverse,
    majorana_lambda_matrix,
    majorana_lambda_via_theta,
    pauli_hankel,
    pauli_hankel_inverse,
    pauli_spherical_matrix,
    s_prime_block,
    single_mode_field,
    spherical_bessel,
    spherical_harmonic,
)

SMALL_QUAD = SphericalQuadSpec(r_max=6.0, n_r=10, n_theta=8, n_phi=12, l_max=2)


def test_assoc_legendre_low_orders():
    xi = np.linspace(-0.9, 0.9, 7)
    assert np.allclose(assoc_legendre(0, 0, xi), 1.0)
    assert np.allclose(assoc_legendre(1, 0, xi), xi)
    # Condon-Shortley phase: P_1^1(0.5) = -sqrt(0.75)
    assert abs(float(assoc_legendre(1, 1, 0.5)) + math.sqrt(0.75)) < 1e-15


def test_assoc_legendre_against_scipy():
    rng = np.random.default_rng(0)
    for l in range(0, 9):
        for mu in range(-l, l + 1):
            xi = rng.uniform(-0.99, 0.99, 12)
            ref = lpmv(mu, l, xi)
            got = assoc_legendre(l, mu, xi)
            scale = max(np.abs(ref).max(), 1e-30)
            assert np.abs(got - ref).max() < 1e-12 * scale, (l, mu)


def test_assoc_legendre_domain_error():
    with pytest.raises(ValueError):
        assoc_legendre(2, 3, 0.1)


def test_spherical_harmonic_values():
    assert abs(spherical_harmonic(0, 0, 0.3, 1.0) - 1 / math.sqrt(4 * math.pi)) < 1e-15
    th = 0.7
    expect = math.sqrt(3 / (4 * math.pi)) * math.cos(th)
    assert abs(spherical_harmonic(1, 0, th, 0.2) - expect) < 1e-15


def test_spherical_harmonic_quadrature_orthonormality():
    xs, wx = np.polynomial.legendre.leggauss(16)
    th = np.arccos(xs)
    nph = 16
    ph = -np.pi + 2 * np.pi * np.arange(nph) / nph
    TH, PH = np.meshgrid(th, ph, indexing="ij")
    w = (wx * 2 * np.pi / nph)[:, None]
    y10 = spherical_harmonic(1, 0, TH, PH)
    assert abs(np.sum(w * np.conj(y10) * y10) - 1.0) < 1e-12
    y21 = spherical_harmonic(2, 1, TH, PH)
    assert abs(np.sum(w * np.conj(y10) * y21)) < 1e-12
    # conjugation symmetry
    y2m1 = spherical_harmonic(2, -1, TH, PH)
    assert np.abs(y2m1 - (-1) ** 1 * np.conj(y21)).max() < 1e-14


def test_spherical_bessel_values():
    assert abs(spherical_bessel(0, math.pi)) < 1e-14  # sin(pi)/pi
    assert abs(spherical_bessel(1, math.pi / 2) - 4 / math.pi**2) < 1e-14
    assert spherical_bessel(2, 0.0) == 0.0
    assert spherical_bessel(0, 0.0) == 1.0


def test_spherical_bessel_against_scipy():
    rng = np.random.default_rng(1)
    for l in (0, 1, 2, 5, 8, 16, 32):
        x = np.concatenate([rng.uniform(0.01, 2, 10), rng.uniform(2, 100, 20)])
        ref = spherical_jn(l, x)
        got = spherical_bessel(l, x)
        mask = np.abs(ref) > 1e-280
        assert np.abs((got[mask] - ref[mask]) / ref[mask]).max() < 1e-12, l


def test_spherical_bessel_recurrence_switch_region():
    # deep downward-recurrence territory: small argument, moderate order
    for l, x in [(10, 0.5), (20, 3.0), (32, 10.0)]:
        ref = spherical_jn(l, x)
        got = float(spherical_bessel(l, np.array(x)))
        assert abs(got - ref) < 1e-12 * abs(ref)


def test_pauli_spherical_matrix_range_check():
    with pytest.raises(ValueError):
        pauli_spherical_matrix(0, 0, 0.3, 0.1)
    with pytest.raises(ValueError):
        pauli_spherical_matrix(2, 2, 0.3, 0.1)  # mu must be <= l-1


def test_pauli_spherical_matrix_orthonormality_and_cross():
    xs, wx = np.polynomial.legendre.leggauss(20)
    th = np.arccos(xs)
    nph = 20
    ph = -np.pi + 2 * np.pi * np.arange(nph) / nph
    TH, PH = np.meshgrid(th, ph, indexing="ij")
    w = (wx * 2 * np.pi / nph)[:, None]
    for (l, mu) in [(1, -1), (1, 0), (2, 1), (3, -3), (4, 0)]:
        om = pauli_spherical_matrix(l, mu, TH, PH)
        gram = np.einsum("tp,tpab,tpac->bc", w, np.conj(om), om)
        assert np.abs(gram - np.eye(2)).max() < 1e-10, (l, mu)
    a = pauli_spherical_matrix(1, 0, TH, PH)
    b = pauli_spherical_matrix(2, 0, TH, PH)
    assert np.abs(np.einsum("tp,tpab,tpac->bc", w, np.conj(a), b)).max() < 1e-10


def test_pauli_spherical_matrix_projector_split():
    # right-multiplying by (1+sigma^3)/2 keeps only the first column
    om = pauli_spherical_matrix(2, 1, 0.8, -0.4)
    proj = om @ np.diag([1.0, 0.0])
    assert np.abs(proj[..., :, 1]).max() == 0.0
    assert np.abs(proj[..., :, 0] - om[..., :, 0]).max() == 0.0


def test_lambda_matrix_r_zero_branch():
    from majorana.hankel import lambda_matrix

    lam = lambda_matrix(1, 0, 0.0, 0.7, 0.3)
    # j_1(0) = 0 kills the first column, j_0(0) = 1 keeps the second
    assert np.abs(lam[..., :, 0]).max() == 0.0
    assert np.abs(lam[..., :, 1]).max() > 0.1


def test_substitution_vs_conjugation_random():
    rng = np.random.default_rng(2)
    worst = 0.0
    for _ in range(50):
        l = int(rng.integers(1, 6))
        mu = int(rng.integers(-l, l))
        r = rng.uniform(0.1, 20)
        th = rng.uniform(0.05, math.pi - 0.05)
        ph = rng.uniform(-math.pi, math.pi)
        a = majorana_lambda_matrix(l, mu, r, th, ph)
        b = majorana_lambda_via_theta(l, mu, r, th, ph)
        worst = max(worst, float(np.abs(a - b).max()))
    assert worst < 1e-12


def test_pseudoscalar_flip_identity():
    rng = np.random.default_rng(3)
    ig5 = GAMMA.ig5.astype(float)
    ig1 = GAMMA.ig1.astype(float)
    worst = 0.0
    for _ in range(100):
        l = int(rng.integers(1, 6))
        mu = int(rng.integers(-l, l))
        r = rng.uniform(0.1, 20)
        th = rng.uniform(0.05, math.pi - 0.05)
        ph = rng.uniform(-math.pi, math.pi)
        lam = majorana_lambda_matrix(l, mu, r, th, ph)
        flip = majorana_lambda_matrix(l, -mu - 1, r, th, ph)
        worst = max(worst, float(np.abs(ig5 @ lam + (-1.0) ** mu * (flip @ ig1)).max()))
    assert worst < 1e-12


def test_quad_spec_validation():
    with pytest.raises(ValueError):
        SphericalQuadSpec(-1.0, 8, 8, 12, 2)
    with pytest.raises(ValueError):
        SphericalQuadSpec(5.0, 8, 3, 12, 2)  # n_theta below l_max + 2
    with pytest.raises(ValueError):
        SphericalQuadSpec(5.0, 8, 8, 6, 2)  # n_phi below 2 l_max + 4
    q = SMALL_QUAD
    assert abs(q.p_max - math.pi * q.n_r / q.r_max) < 1e-14
    assert len(q.modes()) == sum(2 * l for l in range(1, q.l_max + 1))


def test_mode_pairing_involution():
    q = SMALL_QUAD
    modes = q.modes()
    for (l, mu) in modes:
        partner = (l, -mu - 1)
        assert partner in modes
        assert (partner[0], -partner[1] - 1) == (l, mu)


def test_s_prime_block_orthogonality_matrix():
    rng = np.random.default_rng(4)
    ig3 = GAMMA.ig3.astype(float)
    for _ in range(20):
        p = rng.uniform(0.01, 8)
        m = rng.uniform(0, 5)
        e = math.hypot(p, m)
        a = math.sqrt((e + m) / (2 * e))
        b = math.sqrt((e - m) / (2 * e))
        for mu in (-2, -1, 0, 1):
            k = (-1.0) ** mu * ig3
            block = np.block([[a * np.eye(4), -b * k], [b * k, a * np.eye(4)]])
            assert np.abs(block.T @ block - np.eye(8)).max() < 1e-14


def test_s_prime_block_roundtrip_and_norm():
    q = SMALL_QUAD
    rng = np.random.default_rng(5)
    modes = SphericalModeField(q, rng.standard_normal((len(q.modes()), q.n_r, 4)), "majorana")
    out = s_prime_block(modes, 1.3)
    assert abs(out.norm() - modes.norm()) < 1e-13 * modes.norm()
    back = s_prime_block(out, 1.3, inverse=True)
    assert np.abs(back.values - modes.values).max() < 1e-14


def test_s_prime_block_rest_limit():
    # p -> 0 with m > 0: off-diagonal weight vanishes, block acts as identity
    p, m = 1e-9, 2.0
    e = math.hypot(p, m)
    assert math.sqrt((e - m) / (2 * e)) < 1e-4


def test_majorana_hankel_matches_direct_kernel_sum():
    q = SMALL_QUAD
    rng = np.random.default_rng(6)
    f = SphericalField(q, rng.standard_normal(q.node_shape + (4,)), "majorana")
    for mass in (0.0, 0.5, 1.0):
        fast = majorana_hankel(f, mass)
        direct = majorana_hankel_direct(f, mass)
        assert np.abs(fast.values - direct.values).max() < 1e-10


def test_pauli_hankel_zero_field():
    q = SMALL_QUAD
    f = SphericalField(q, np.zeros(q.node_shape + (2,), dtype=complex), "pauli")
    assert pauli_hankel(f).norm() == 0.0


def test_pauli_hankel_adjointness():
    q = SMALL_QUAD
    rng = np.random.default_rng(7)
    f = SphericalField(
        q, rng.standard_normal(q.node_shape + (2,)) + 1j * rng.standard_normal(q.node_shape + (2,)), "pauli"
    )
    m = SphericalModeField(
        q,
        rng.standard_normal((len(q.modes()), q.n_r, 2)) + 1j * rng.standard_normal((len(q.modes()), q.n_r, 2)),
        "pauli",
    )
    _, wp = q.momentum_nodes()
    r, wr = q.radial_nodes()
    _, wxi = q.polar_nodes()
    _, wphi = q.azimuthal_nodes()
    lhs = np.einsum("p,mpc,mpc->", wp, np.conj(pauli_hankel(f).values), m.values)
    rhs = np.einsum(
        "r,t,rtpc,rtpc->", wr * r * r, np.full(q.n_theta, 1.0) * wxi * wphi, np.conj(f.values), pauli_hankel_inverse(m).values
    )
    assert abs(lhs - rhs) < 1e-12 * max(abs(lhs), 1.0)


REF_QUAD = SphericalQuadSpec(r_max=10.0, n_r=64, n_theta=32, n_phi=32, l_max=8)


def _band_limited(quad, seed, center=3.4, width=0.9):
    p, _ = quad.momentum_nodes()
    rng = np.random.default_rng(seed)
    env = np.exp(-(((p - center) / width) ** 2))
    amps = np.zeros((len(quad.modes()), quad.n_r, 4))
    for k in range(len(quad.modes())):
        amps[k] = env[:, None] * rng.standard_normal(4)[None, :]
    return SphericalModeField(quad, amps, "majorana")


def test_pauli_single_kernel_field_concentrates_in_mode_space():
    # a field built from one radial-angular kernel at fixed p0 analyses
    # into the (1, 0) mode family only (the radial profile spreads, the
    # angular labels do not)
    from majorana.hankel import lambda_matrix

    q = SphericalQuadSpec(r_max=8.0, n_r=24, n_theta=12, n_phi=16, l_max=3)
    p, _ = q.momentum_nodes()
    p0 = float(p[10])
    r, _ = q.radial_nodes()
    th, ph = q.angle_grids()
    w = np.array([0.8, -0.6 + 0.2j])
    vals = lambda_matrix(1, 0, p0 * r[:, None, None], th[None], ph[None]) @ w
    modes = pauli_hankel(SphericalField(q, vals, "pauli"))
    power = np.abs(modes.values) ** 2
    k0 = q.modes().index((1, 0))
    leak = power.sum() - power[k0].sum()
    assert leak < 1e-20 * power.sum()


def test_single_synthetic_mode_concentration():
    q = REF_QUAD
    p, wp = q.momentum_nodes()
    env = np.exp(-(((p - 3.4) / 0.9) ** 2))
    amps = np.zeros((len(q.modes()), q.n_r, 4))
    k0 = q.modes().index((1, 0))
    amps[k0, :, 0] = env
    modes = SphericalModeField(q, amps, "majorana")
    back = majorana_hankel(majorana_hankel_inverse(modes, 1.0), 1.0)
    total = modes.norm()
    # cross-mode leakage below 1e-3 relative
    leak = back.values.copy()
    leak[k0] = 0.0
    assert SphericalModeField(q, leak, "majorana").norm() < 1e-3 * total
    # and the pair partner stays empty up to the same tolerance
    kpair = q.modes().index((1, -1))
    assert np.abs(back.values[kpair]).max() < 1e-3 * np.abs(back.values).max()


def test_two_synthetic_modes_quadrature_orthogonality():
    q = REF_QUAD
    p, wp = q.momentum_nodes()
    env = np.exp(-(((p - 3.4) / 0.9) ** 2))

    def synth(l, mu, comp):
        amps = np.zeros((len(q.modes()), q.n_r, 4))
        amps[q.modes().index((l, mu)), :, comp] = env
        return majorana_hankel_inverse(SphericalModeField(q, amps, "majorana"), 1.0)

    f1 = synth(1, 0, 0)
    f2 = synth(2, 1, 1)
    r, wr = q.radial_nodes()
    _, wxi = q.polar_nodes()
    _, wphi = q.azimuthal_nodes()
    inner = np.einsum("r,t,rtpc,rtpc->", wr * r * r, wxi * wphi, f1.values, f2.values)
    assert abs(inner) < 1e-3 * f1.norm() * f2.norm()


def test_majorana_roundtrip_reference_resolution():
    modes = _band_limited(REF_QUAD, seed=42)
    field = majorana_hankel_inverse(modes, 1.0)
    back = majorana_hankel(field, 1.0)
    rel = SphericalModeField(REF_QUAD, back.values - modes.values, "majorana").norm() / modes.norm()
    assert rel < 1e-3
    # band-limited norm preservation at the same tolerance scale
    assert abs(field.norm() - modes.norm()) < 1e-3 * modes.norm()


def test_massless_roundtrip():
    q = SphericalQuadSpec(r_max=10.0, n_r=48, n_theta=16, n_phi=24, l_max=4)
    modes = _band_limited(q, seed=9)
    field = majorana_hankel_inverse(modes, 0.0)
    back = majorana_hankel(field, 0.0)
    rel = SphericalModeField(q, back.values - modes.values, "majorana").norm() / modes.norm()
    assert rel < 1e-2


def test_delta_kernel_is_dirac_eigenfunction():
    # finite-difference check of iH (Delta v) = E Delta (i gamma^0 v)
    from majorana.clifford import GJG0

    rng = np.random.default_rng(10)
    l, mu, p0, mass = 2, -1, 1.7, 1.0
    e = math.hypot(p0, mass)
    v = rng.standard_normal(4)
    x0 = np.array([0.4, -0.8, 0.6])
    h = 1e-6

    def kernel_at(x):
        r = np.linalg.norm(x)
        return delta_kernel(l, mu, p0, r, math.acos(x[2] / r), math.atan2(x[1], x[0]), mass)

    lhs = mass * (IG0 @ (kernel_at(x0) @ v))
    for j in range(3):
        step = np.zeros(3)
        step[j] = h
        d = (kernel_at(x0 + step) - kernel_at(x0 - step)) / (2 * h)
        lhs = lhs + (-GJG0[j]) @ (d @ v)
    rhs = e * (kernel_at(x0) @ (IG0 @ v))
    assert np.abs(lhs - rhs).max() < 1e-9


def test_angular_momentum_eigenaction():
    q = SphericalQuadSpec(r_max=10.0, n_r=32, n_theta=16, n_phi=24, l_max=4)
    spinor = np.array([0.3, -0.5, 0.7, 0.2])
    rep = angular_momentum_check(q, 1, 0, 10, spinor, 1.0)
    assert rep["jz_residual"] < 1e-3
    assert rep["dirac_residual"] < 1e-3
    rep = angular_momentum_check(q, 1, -1, 10, spinor, 1.0)
    assert rep["jz_residual"] < 1e-3
    rep0 = angular_momentum_check(q, 3, 2, 6, spinor, 0.0)
    assert rep0["jz_residual"] < 1e-3 and rep0["dirac_residual"] < 1e-3


def test_angular_momentum_zero_field_trivial():
    q = SMALL_QUAD
    rep = angular_momentum_check(q, 1, 0, 2, np.zeros(4), 1.0)
    assert rep["norm"] == 0.0 or rep["jz_residual"] == 0.0


def test_single_mode_field_shape():
    q = SMALL_QUAD
    f = single_mode_field(q, 1, 0, 1.0, np.array([1.0, 0, 0, 0]), 1.0)
    assert f.values.shape == q.node_shape + (4,)


def test_mode_serialization_roundtrip(tmp_path):
    from majorana.io import load_mode_field, save_mode_field

    q = SMALL_QUAD
    rng = np.random.default_rng(11)
    modes = SphericalModeField(q, rng.standard_normal((len(q.modes()), q.n_r, 4)), "majorana")
    path = tmp_path / "modes.dat"
    save_mode_field(path, modes, mass=0.5)
    loaded, mass = load_mode_field(path)
    assert mass == 0.5
    assert loaded.quad == q
    assert np.array_equal(loaded.values, modes.values)
