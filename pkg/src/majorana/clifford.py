"""Real Clifford algebra of signature (3,1) and the Pin group on top of it.

All five generators i*gamma^mu and the pseudo-scalar i*gamma^5 are real
orthogonal 4x4 matrices with entries in {-1, 0, +1}; they are kept as integer
arrays so the defining anti-commutation relations can be checked with exact
integer arithmetic.  Products of an even number of plain gamma matrices are
again real and are obtained through gamma^mu gamma^nu = -(i gamma^mu)(i gamma^nu).

Conventions fixed here and used everywhere else:

* metric g = diag(1, -1, -1, -1);
* (i gamma^0)^2 = -1, (i gamma^j)^2 = +1, i gamma^5 = (i gamma^0)(i gamma^1)
  (i gamma^2)(i gamma^3), which is the sign the partial-wave flip identity
  of the hankel module requires;
* the complex unit on 2-component complex (Pauli) spinors corresponds to
  left multiplication by i gamma^0 on 4-component real spinors, realised by
  the fixed orthogonal change of representation `theta_map`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

ETA = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class GammaSet:
    """The five anti-commuting integer matrices plus the metric."""

    ig0: np.ndarray
    ig1: np.ndarray
    ig2: np.ndarray
    ig3: np.ndarray
    ig5: np.ndarray
    metric: np.ndarray = field(default_factory=lambda: np.diag([1, -1, -1, -1]))

    def ig(self, mu: int) -> np.ndarray:
        return (self.ig0, self.ig1, self.ig2, self.ig3)[mu]

    @property
    def spatial(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.ig1, self.ig2, self.ig3


def build_majorana_basis() -> GammaSet:
    """Construct the integer Majorana basis used throughout the package.

    The pseudo-scalar is -(i gamma^0)(i gamma^1)(i gamma^2)(i gamma^3).
    This sign is forced by the dynamics: it makes the spin part of the
    z angular momentum, (1/2) i gamma^5 gamma^0 gamma^3 acting together
    with the orbital term, commute with the free Dirac operator.
    """
    ig1 = np.array([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]])
    ig2 = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    ig3 = np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]])
    ig0 = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    ig5 = -(ig0 @ ig1 @ ig2 @ ig3)
    return GammaSet(ig0=ig0, ig1=ig1, ig2=ig2, ig3=ig3, ig5=ig5)


GAMMA = build_majorana_basis()

IG0 = GAMMA.ig0.astype(float)
IG5 = GAMMA.ig5.astype(float)

# gamma^j gamma^0 (real, symmetric); building block of the momentum kernel
GJG0 = np.array([-(gj @ GAMMA.ig0) for gj in GAMMA.spatial], dtype=float)
# gamma^0 gamma^j (boost generators, symmetric, square to +1)
BOOST_GEN = np.array([-(GAMMA.ig0 @ gj) for gj in GAMMA.spatial], dtype=float)
# i gamma^5 gamma^0 gamma^j (rotation generators, antisymmetric, square to -1)
SPIN_GEN = np.array([-(GAMMA.ig5 @ GAMMA.ig0 @ gj) for gj in GAMMA.spatial], dtype=float)
# remaining even products used by the transforms
G1G5 = -(GAMMA.ig1 @ GAMMA.ig5).astype(float)
G3G5 = -(GAMMA.ig3 @ GAMMA.ig5).astype(float)
G0G5 = -(GAMMA.ig0 @ GAMMA.ig5).astype(float)
IG3 = GAMMA.ig3.astype(float)


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """ab + ba."""
    return a @ b + b @ a


def is_majorana(u: np.ndarray, tol: float = 0.0) -> bool:
    """True when the components of a 4-component complex spinor are real.

    In the basis above the reality of the components is exactly the spinor
    reality condition.  Use ``tol=0`` for constructed inputs and a small
    tolerance (1e-14) for values coming out of floating-point arithmetic.
    """
    u = np.asarray(u)
    return bool(np.all(np.abs(np.imag(u)) <= tol))


def expm_real(m: np.ndarray, term_tol: float = 1e-16) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring with a Taylor tail.

    The argument is halved until its 1-norm is below 0.5, the series is
    summed until the term norm drops below ``term_tol``, and the result is
    squared back up.  Adequate for the small dense generators used here.
    """
    m = np.asarray(m, dtype=float)
    norm = np.linalg.norm(m, 1)
    squarings = max(0, int(np.ceil(np.log2(norm / 0.5))) if norm > 0.5 else 0)
    a = m / (2.0**squarings)
    out = np.eye(m.shape[0])
    term = np.eye(m.shape[0])
    k = 1
    while True:
        term = term @ a / k
        out = out + term
        if np.linalg.norm(term, 1) < term_tol or k > 60:
            break
        k += 1
    for _ in range(squarings):
        out = out @ out
    return out


def lambda_of(s: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Lorentz matrix induced by a Pin element via trace reconstruction.

    Lambda^mu_nu = -(1/4) tr(S^-1 (i gamma^mu) S (i gamma_nu)), the index
    lowered with the metric.  The result is validated against the defining
    conjugation S^-1 (i gamma^mu) S = Lambda^mu_nu i gamma^nu; inputs that
    fail the reconstruction are not Pin elements and raise ValueError.

    Even in S by construction, so lambda_of(-S) == lambda_of(S) exactly.
    """
    s = np.asarray(s, dtype=float)
    s_inv = np.linalg.inv(s)
    igs = [GAMMA.ig(mu).astype(float) for mu in range(4)]
    lam = np.empty((4, 4))
    conj = [s_inv @ igs[mu] @ s for mu in range(4)]
    for mu in range(4):
        for nu in range(4):
            lam[mu, nu] = -0.25 * np.trace(conj[mu] @ (ETA[nu, nu] * igs[nu]))
    scale = max(1.0, float(np.abs(lam).max()))
    residual = max(
        np.abs(conj[mu] - np.einsum("n,nab->ab", lam[mu], np.array(igs))).max() for mu in range(4)
    )
    if residual > tol * scale:
        raise ValueError(f"input does not conjugate the gamma set into itself (residual {residual:.3e})")
    return lam


@dataclass(frozen=True)
class PinElement:
    """A spinor-space matrix with its induced Lorentz matrix and a tracked sign."""

    s: np.ndarray
    lorentz: np.ndarray
    sign: int = 1

    def inverse(self) -> "PinElement":
        return PinElement(np.linalg.inv(self.s), np.linalg.inv(self.lorentz), self.sign)


def pin_from_matrix(s: np.ndarray, sign: int = 1) -> PinElement:
    return PinElement(np.asarray(s, dtype=float), lambda_of(s), sign)


def spin_plus_element(theta: np.ndarray, boost: np.ndarray) -> PinElement:
    """exp(theta^j * (i g5 g0 gj) + boost^j * (g0 gj)) with its Lorentz image.

    Rotation angles and rapidities double under the covering map: generator
    angle pi about an axis gives S = -1 and Lorentz rotation by 2*pi.
    """
    theta = np.asarray(theta, dtype=float)
    boost = np.asarray(boost, dtype=float)
    gen = np.einsum("j,jab->ab", theta, SPIN_GEN) + np.einsum("j,jab->ab", boost, BOOST_GEN)
    s = expm_real(gen)
    return pin_from_matrix(s)


def omega_elements() -> list[PinElement]:
    """The eight discrete Pin elements covering parity and time reversal."""
    base = [np.eye(4), IG0, G0G5, IG5]
    return [pin_from_matrix(sgn * b, sign=1) for b in base for sgn in (1.0, -1.0)]


def commutant_certificate(generators: list[np.ndarray]) -> tuple[int, int]:
    """Dimensions of {X : XG = GX for all G} and of its symmetric part.

    Null spaces are computed by SVD with singular values below 1e-10 times
    the largest one counted as zero.  A representation of the generators is
    irreducible over the reals iff the symmetric commutant is spanned by the
    identity alone (dimension 1): any proper invariant subspace would supply
    an extra symmetric projector.
    """

    def null_dim(rows: np.ndarray, dim: int) -> int:
        if rows.size == 0:
            return dim
        sv = np.linalg.svd(rows, compute_uv=False)
        cutoff = 1e-10 * (sv[0] if sv.size and sv[0] > 0 else 1.0)
        return dim - int(np.sum(sv > cutoff))

    gens = [np.asarray(g, dtype=float) for g in generators]
    rows_full = []
    for g in gens:
        # vec(XG - GX) = (G^T (x) I - I (x) G) vec(X)
        rows_full.append(np.kron(g.T, np.eye(4)) - np.kron(np.eye(4), g))
    full = np.vstack(rows_full) if rows_full else np.empty((0, 16))
    dim_comm = null_dim(full, 16)

    # basis of symmetric 4x4 matrices, stacked as vec columns
    sym_basis = []
    for i in range(4):
        for j in range(i, 4):
            e = np.zeros((4, 4))
            e[i, j] = e[j, i] = 1.0
            sym_basis.append(e.reshape(-1))
    sym = np.array(sym_basis).T  # (16, 10)
    full_sym = full @ sym if full.size else np.empty((0, 10))
    dim_sym = null_dim(full_sym, 10)
    return dim_comm, dim_sym


@dataclass(frozen=True)
class ThetaBasis:
    """Matched orthonormal real bases of the 4d real spinor space and of C^2.

    m_plus/m_minus span the +1/-1 eigenspaces of gamma^3 gamma^5 and are
    paired by i gamma^0; p_plus/p_minus are the sigma^3 eigenbasis of C^2.
    m_minus is gamma^1 gamma^5 m_plus so that the substitution
    (i, sigma^1, sigma^3) -> (i gamma^0, gamma^1 gamma^5, gamma^3 gamma^5)
    coincides with conjugation by the resulting map.
    """

    m_plus: np.ndarray
    m_minus: np.ndarray
    p_plus: np.ndarray
    p_minus: np.ndarray
    matrix: np.ndarray  # columns (m+, ig0 m+, m-, ig0 m-)


def _eigenspace_representative(mat: np.ndarray, eigenvalue: float) -> np.ndarray:
    """Deterministic unit vector in an eigenspace via SVD null space.

    Projects the standard basis vectors onto the null space of (mat - ev*I),
    keeps the first projection with norm above 1/2, and orients it so its
    first component above 1e-9 in modulus is positive.
    """
    a = mat - eigenvalue * np.eye(4)
    _, sv, vt = np.linalg.svd(a)
    null = vt[sv < 1e-10 * max(sv[0], 1.0)].T
    for k in range(4):
        e = np.zeros(4)
        e[k] = 1.0
        proj = null @ (null.T @ e)
        nrm = np.linalg.norm(proj)
        if nrm > 0.5:
            v = proj / nrm
            lead = v[np.abs(v) > 1e-9][0]
            return v if lead > 0 else -v
    raise RuntimeError("eigenspace projection failed")


def build_theta_basis() -> ThetaBasis:
    m_plus = _eigenspace_representative(G3G5, +1.0)
    m_minus = G1G5 @ m_plus
    matrix = np.column_stack([m_plus, IG0 @ m_plus, m_minus, IG0 @ m_minus])
    return ThetaBasis(
        m_plus=m_plus,
        m_minus=m_minus,
        p_plus=np.array([1.0 + 0j, 0.0]),
        p_minus=np.array([0.0 + 0j, 1.0]),
        matrix=matrix,
    )


THETA = build_theta_basis()


def theta_map(psi: np.ndarray) -> np.ndarray:
    """Complex 2-component spinors -> real 4-component spinors, pointwise.

    Real-linear and norm preserving on any leading shape; multiplication by
    i on the input corresponds to left multiplication by i gamma^0 on the
    output.
    """
    psi = np.asarray(psi)
    parts = np.stack(
        [psi[..., 0].real, psi[..., 0].imag, psi[..., 1].real, psi[..., 1].imag], axis=-1
    )
    return parts @ THETA.matrix.T


def inverse_theta_map(big_psi: np.ndarray) -> np.ndarray:
    """Inverse of :func:`theta_map` (the basis matrix is orthogonal)."""
    parts = np.asarray(big_psi) @ THETA.matrix
    return np.stack([parts[..., 0] + 1j * parts[..., 1], parts[..., 2] + 1j * parts[..., 3]], axis=-1)


def rotation_exp_ig0(angle: np.ndarray) -> np.ndarray:
    """exp(-i gamma^0 * angle) as a stack of real 4x4 matrices.

    Closed form cos(a) I - sin(a) i gamma^0, valid because (i gamma^0)^2 = -1.
    Broadcasts over any leading shape of ``angle``.
    """
    a = np.asarray(angle, dtype=float)
    return np.cos(a)[..., None, None] * np.eye(4) - np.sin(a)[..., None, None] * IG0
