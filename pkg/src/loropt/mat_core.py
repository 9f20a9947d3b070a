"""Two-by-two and four-by-four matrix machinery for SL(2,C) and the Lorentz group.

Matrices are plain numpy arrays: complex (2, 2) for SL(2,C)/Jones matrices,
real (2, 2) for Sp(2)/ABCD matrices and real (4, 4) for Lorentz
transformations acting on four-vectors ordered (t, z, x, y).

Pauli basis
-----------
The spinor generators use a permuted Pauli basis in which the diagonal matrix
comes first and the imaginary one last:

    ======  ===============  ================  ============
    here    matrix           textbook name     axis (t,z,x,y)
    ======  ===============  ================  ============
    s1      diag(1, -1)      sigma_z           z
    s2      [[0, 1], [1, 0]] sigma_x           x
    s3      [[0, -i], [i, 0]] sigma_y          y
    ======  ===============  ================  ============

so the coherency matrix of a four-vector is ``t*1 + z*s1 + x*s2 + y*s3``.
The four-by-four generators keep their axis labels (J1 rotates about x, J2
about y, J3 about z), hence spinor index i corresponds to vector index
``SPINOR_TO_VECTOR[i]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

TOL_DET = 1e-12
TOL_HERM = 1e-12
TOL_ORTH = 1e-10

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

# spinor generator index -> four-by-four generator index (0-based)
SPINOR_TO_VECTOR = (2, 0, 1)


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class RangeError(OverflowError):
    """Result not representable in double precision."""


def _finite(name, *values):
    for v in values:
        if not math.isfinite(v):
            raise DomainError(f"{name} must be finite, got {v!r}")


def _cosh_sinh(half):
    try:
        return math.cosh(half), math.sinh(half)
    except OverflowError as exc:
        raise RangeError(f"rapidity {2 * half!r} overflows") from exc


def identity2():
    return np.eye(2)


def phase(phi):
    """Relative phase shift diag(e^{i phi/2}, e^{-i phi/2})."""
    _finite("phi", phi)
    return np.diag([np.exp(0.5j * phi), np.exp(-0.5j * phi)])


def rotation(theta):
    """Beam-mixing rotation; note the half angle: entries are cos(theta/2) etc."""
    _finite("theta", theta)
    c, s = math.cos(0.5 * theta), math.sin(0.5 * theta)
    return np.array([[c, -s], [s, c]])


def boost_z(eta):
    """Amplitude squeeze diag(e^{eta/2}, e^{-eta/2})."""
    _finite("eta", eta)
    try:
        a = math.exp(0.5 * eta)
        b = math.exp(-0.5 * eta)
    except OverflowError as exc:
        raise RangeError(f"rapidity {eta!r} overflows") from exc
    return np.diag([a, b])


def boost_x(chi):
    """Symmetric boost ((cosh chi/2, sinh chi/2), (sinh chi/2, cosh chi/2))."""
    _finite("chi", chi)
    ch, sh = _cosh_sinh(0.5 * chi)
    return np.array([[ch, sh], [sh, ch]])


def det(m):
    m = np.asarray(m)
    if m.shape == (2, 2):
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return np.linalg.det(m)


def check_unimodular(m, tol=TOL_DET):
    """Raise DomainError unless det(m) = 1 to relative tolerance ``tol``."""
    m = np.asarray(m)
    if m.shape != (2, 2):
        raise DomainError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DomainError("matrix has non-finite entries")
    d = det(m)
    scale = max(1.0, float(np.max(np.abs(m))) ** 2)
    if abs(d - 1) > tol * scale:
        raise DomainError(f"determinant {complex(d) if np.iscomplexobj(d) else float(d)} differs from 1")
    return m


def commutator(a, b):
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise DomainError(f"shape mismatch {a.shape} vs {b.shape}")
    return a @ b - b @ a


def pauli():
    """Pauli matrices in the permuted basis documented at module level."""
    s1 = np.array([[1, 0], [0, -1]], dtype=complex)
    s2 = np.array([[0, 1], [1, 0]], dtype=complex)
    s3 = np.array([[0, -1j], [1j, 0]], dtype=complex)
    return s1, s2, s3


def _m4(entries):
    m = np.zeros((4, 4), dtype=complex)
    for (r, c), v in entries.items():
        m[r, c] = v
    return m


# index of each coordinate in (t, z, x, y)
T, Z, X, Y = range(4)


def vector_generators():
    """Rotation and boost generators acting on (t, z, x, y).

    J1, J2, J3 rotate about x, y, z; K1, K2, K3 boost along x, y, z.
    A finite transformation is exp(-i(theta J + eta K)).
    """
    J1 = _m4({(Z, Y): 1j, (Y, Z): -1j})
    J2 = _m4({(Z, X): -1j, (X, Z): 1j})
    J3 = _m4({(X, Y): -1j, (Y, X): 1j})
    K1 = _m4({(T, X): 1j, (X, T): 1j})
    K2 = _m4({(T, Y): 1j, (Y, T): 1j})
    K3 = _m4({(T, Z): 1j, (Z, T): 1j})
    return (J1, J2, J3), (K1, K2, K3)


@dataclass(frozen=True)
class GeneratorSet:
    rep: str
    J: tuple
    K: tuple
    K_dot: tuple | None = None

    def all(self):
        return self.J + self.K


def generators(rep="spinor"):
    """Lorentz-algebra generators in the spinor (2x2) or vector (4x4) rep.

    The spinor set carries the dotted-representation boosts ``K_dot = -K``.
    """
    if rep == "spinor":
        s = pauli()
        J = tuple(0.5 * si for si in s)
        K = tuple(0.5j * si for si in s)
        return GeneratorSet("spinor", J, K, tuple(-k for k in K))
    if rep == "vector":
        J, K = vector_generators()
        return GeneratorSet("vector", J, K)
    raise DomainError(f"unknown representation {rep!r}")


LEVI_CIVITA = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    LEVI_CIVITA[_i, _j, _k] = 1.0
    LEVI_CIVITA[_j, _i, _k] = -1.0


def commutator_table_errors(gens: GeneratorSet) -> dict:
    """Largest entrywise violation of each Lorentz commutator family.

    Families: [J,J] = i eps J, [J,K] = i eps K, [K,K] = -i eps J, and for the
    spinor rep the same three with the dotted boosts.
    """
    out = {}

    def family(A, B, R, sign):
        worst = 0.0
        for i in range(3):
            for j in range(3):
                rhs = sum(sign * 1j * LEVI_CIVITA[i, j, k] * R[k] for k in range(3))
                worst = max(worst, float(np.max(np.abs(commutator(A[i], B[j]) - rhs))))
        return worst

    out["JJ"] = family(gens.J, gens.J, gens.J, 1)
    out["JK"] = family(gens.J, gens.K, gens.K, 1)
    out["KK"] = family(gens.K, gens.K, gens.J, -1)
    if gens.K_dot is not None:
        out["JKdot"] = family(gens.J, gens.K_dot, gens.K_dot, 1)
        out["KdotKdot"] = family(gens.K_dot, gens.K_dot, gens.J, -1)
    return out


def exp_generator(theta=(0.0, 0.0, 0.0), eta=(0.0, 0.0, 0.0), rep="spinor"):
    """exp(-i sum(theta_i J_i + eta_i K_i)) in the requested representation.

    Indices follow the representation's own generator labels (see the module
    docstring for the spinor/vector correspondence). In the spinor rep this is
    exp{-(i/2) sum(theta_i s_i + i eta_i s_i)}.
    """
    theta = tuple(float(t) for t in theta)
    eta = tuple(float(e) for e in eta)
    if len(theta) != 3 or len(eta) != 3:
        raise DomainError("theta and eta need three components each")
    _finite("parameters", *theta, *eta)
    gens = generators(rep)
    arg = sum(t * j for t, j in zip(theta, gens.J)) + sum(e * k for e, k in zip(eta, gens.K))
    with np.errstate(over="raise", invalid="raise"):
        try:
            out = expm(-1j * arg)
        except FloatingPointError as exc:
            raise RangeError("matrix exponential overflows") from exc
    if not np.all(np.isfinite(out)):
        raise RangeError("matrix exponential overflows")
    if rep == "vector":
        return out.real
    return out


def coherency_from_fourvector(v):
    """((t+z, x-iy), (x+iy, t-z)) for v = (t, z, x, y)."""
    t, z, x, y = (float(a) for a in v)
    return np.array([[t + z, x - 1j * y], [x + 1j * y, t - z]])


def is_hermitian(c, tol=TOL_HERM):
    c = np.asarray(c)
    scale = max(1.0, float(np.max(np.abs(c))))
    return bool(np.max(np.abs(c - c.conj().T)) <= tol * scale)


def fourvector_from_coherency(c, tol=TOL_HERM):
    c = np.asarray(c, dtype=complex)
    if c.shape != (2, 2):
        raise DomainError(f"expected a 2x2 matrix, got shape {c.shape}")
    if not is_hermitian(c, tol):
        raise DomainError("coherency matrix is not Hermitian")
    t = 0.5 * (c[0, 0].real + c[1, 1].real)
    z = 0.5 * (c[0, 0].real - c[1, 1].real)
    off = 0.5 * (c[1, 0] + c[0, 1].conjugate())
    return np.array([t, z, off.real, off.imag])


def induced_lorentz(L, tol=TOL_DET):
    """Four-by-four Lorentz matrix induced by C -> L C L^dagger.

    Column j is the image of the j-th basis four-vector.
    """
    L = check_unimodular(np.asarray(L, dtype=complex), tol)
    Lh = L.conj().T
    lam = np.empty((4, 4))
    for j, e in enumerate(np.eye(4)):
        img = L @ coherency_from_fourvector(e) @ Lh
        # the image is Hermitian by construction; skip the tolerance test
        lam[:, j] = fourvector_from_coherency(0.5 * (img + img.conj().T), tol=math.inf)
    return lam


def minkowski_norm(v):
    t, z, x, y = v
    return t * t - z * z - x * x - y * y


def metric_defect(lam):
    lam = np.asarray(lam)
    return float(np.max(np.abs(lam.T @ METRIC @ lam - METRIC)))


def boost4_z(eta):
    """Four-by-four boost along z with rapidity eta."""
    ch, sh = _cosh_sinh(eta)
    b = np.eye(4)
    b[T, T] = b[Z, Z] = ch
    b[T, Z] = b[Z, T] = sh
    return b


def random_sl2c(rng, scale=1.0):
    """Random SL(2,C) element: Gaussian entries normalized by sqrt(det)."""
    while True:
        m = rng.normal(scale=scale, size=(2, 2)) + 1j * rng.normal(scale=scale, size=(2, 2))
        d = det(m)
        if abs(d) > 1e-3:
            return m / np.sqrt(d)


def random_sp2(rng, depth=3, spread=1.0):
    """Random real unimodular matrix built as a product of rotations and boosts."""
    m = np.eye(2)
    for _ in range(depth):
        m = m @ rotation(rng.uniform(-2 * np.pi, 2 * np.pi)) @ boost_z(rng.normal(scale=spread))
    return m
