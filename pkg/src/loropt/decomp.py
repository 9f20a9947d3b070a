"""Decompositions of unimodular 2x2 matrices.

Rotations R and squeezes B are the half-angle matrices of ``mat_core``
(``rotation(theta)`` has entries cos(theta/2), ``boost_z(g)`` is
diag(e^{g/2}, e^{-g/2})).  Lens elements use the shear form
((1, 0), (c, 1)) with c = -1/f, translations ((1, u), (0, 1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .jsonio import encode, num
from .mat_core import (
    TOL_DET,
    DomainError,
    boost_x,
    boost_z,
    check_unimodular,
    commutator,
    rotation,
)

PARABOLIC_TOL = 1e-9
TOL_REAL = 1e-9

# ---------------------------------------------------------------- Bargmann


@dataclass(frozen=True)
class BargmannTriple:
    """M = rotation(alpha) @ boost_z(gamma) @ rotation(beta), gamma >= 0."""

    alpha: float
    gamma: float
    beta: float

    def matrix(self):
        return rotation(self.alpha) @ boost_z(self.gamma) @ rotation(self.beta)

    def to_json(self):
        return {"alpha": num(self.alpha), "gamma": num(self.gamma), "beta": num(self.beta)}


def _wrap(angle, period):
    """Map into (-period/2, period/2]."""
    a = math.remainder(angle, period)
    return period / 2 if a == -period / 2 else a


def bargmann(m, tol=TOL_DET) -> BargmannTriple:
    """Rotation-squeeze-rotation factorization of a real unimodular matrix.

    Writing a, b for the half angles and g = gamma/2,
    (A+D)/2 = cosh g cos(a+b), (C-B)/2 = cosh g sin(a+b),
    (A-D)/2 = sinh g cos(a-b), (B+C)/2 = sinh g sin(a-b).
    Canonical form: gamma >= 0, alpha in (-pi, pi], beta in (-2pi, 2pi];
    when gamma = 0 the split is ambiguous and beta = 0 (alpha then lies in
    (-2pi, 2pi]).
    """
    m = check_unimodular(np.asarray(m, dtype=float), tol)
    (A, B), (C, D) = m
    p, q = 0.5 * (A + D), 0.5 * (C - B)
    r, s = 0.5 * (A - D), 0.5 * (B + C)
    total = math.atan2(q, p)
    sh = math.hypot(r, s)
    if sh <= 1e-15 * math.hypot(p, q):
        return BargmannTriple(2.0 * total, 0.0, 0.0)
    gamma = 2.0 * math.asinh(sh)
    diff = math.atan2(s, r)
    alpha = total + diff
    beta = total - diff
    # rotation(x + 2 pi) = -rotation(x): shift both angles together
    if alpha > math.pi:
        alpha -= 2 * math.pi
        beta -= 2 * math.pi
    elif alpha <= -math.pi:
        alpha += 2 * math.pi
        beta += 2 * math.pi
    return BargmannTriple(alpha, gamma, _wrap(beta, 4 * math.pi))


def symmetric_rotation_split(m, tol=TOL_DET):
    """M = Sym @ Rot with Sym symmetric positive definite and Rot a rotation.

    From the Bargmann triple: Sym = R(alpha) B(gamma) R(-alpha),
    Rot = R(alpha + beta).
    """
    t = bargmann(m, tol)
    sym = rotation(t.alpha) @ boost_z(t.gamma) @ rotation(-t.alpha)
    sym = 0.5 * (sym + sym.T)
    return sym, rotation(t.alpha + t.beta)


# ------------------------------------------------------------ lens chains


@dataclass(frozen=True)
class Lens:
    f: float

    def matrix(self):
        return np.array([[1.0, 0.0], [-1.0 / self.f, 1.0]])

    def to_json(self):
        return {"lens": num(self.f)}


@dataclass(frozen=True)
class Gap:
    z: float

    @property
    def virtual(self):
        return bool(self.z < 0)

    def matrix(self):
        return np.array([[1.0, self.z], [0.0, 1.0]])

    def to_json(self):
        return {"gap": num(self.z), "virtual": self.virtual}


@dataclass
class LensChain:
    """Ordered optical elements; ``matrix()`` multiplies them in list order."""

    elements: list = field(default_factory=list)

    @property
    def lens_count(self):
        return sum(isinstance(e, Lens) for e in self.elements)

    @property
    def virtual(self):
        return any(isinstance(e, Gap) and e.virtual for e in self.elements)

    def matrix(self):
        out = np.eye(2)
        for e in self.elements:
            out = out @ e.matrix()
        return out

    def to_json(self):
        return [e.to_json() for e in self.elements]


_MIN_SHEAR = 1e-300


def _chain(shears):
    """Build a LensChain from ('T', u) / ('S', c) factors, merging and pruning."""
    merged = []
    for kind, value in shears:
        if merged and merged[-1][0] == kind:
            merged[-1] = (kind, merged[-1][1] + value)
        else:
            merged.append((kind, value))
    elements = []
    for kind, value in merged:
        # a shear too small to invert into a focal length acts as the identity
        if abs(value) < _MIN_SHEAR:
            continue
        elements.append(Gap(float(value)) if kind == "T" else Lens(float(-1.0 / value)))
    # pruning can bring two gaps (or two lenses) side by side
    if any(type(a) is type(b) for a, b in zip(elements, elements[1:])):
        vals = [("T", e.z) if isinstance(e, Gap) else ("S", -1.0 / e.f) for e in elements]
        return _chain(vals)
    return LensChain(elements)


def _one_lens(A, B, C, D):
    # T(u) S(C) T(v) = ((1 + uC, u + v + uvC), (C, 1 + vC))
    return [("T", (A - 1.0) / C), ("S", C), ("T", (D - 1.0) / C)]


def _lens_gap_lens(A, B, C, D):
    # S(c1) T(B) S(c2) = ((1 + B c2, B), (., 1 + B c1))
    return [("S", (D - 1.0) / B), ("T", B), ("S", (A - 1.0) / B)]


def _three_lens_positive(A, B, C, D):
    # S(c1) [T(|B|) S(-3/|B|) T(|B|)] S(c2); the bracket is ((-2, B), (., -2))
    g = abs(B)
    return [("S", (D + 2.0) / B), ("T", g), ("S", -3.0 / g), ("T", g), ("S", (A + 2.0) / B)]


def _candidates(m):
    (A, B), (C, D) = m
    scale = float(np.max(np.abs(m)))
    out = []
    if C == 0 and A == 1:
        out.append([("T", B)])
    if C != 0:
        out.append(_one_lens(A, B, C, D))
    if B != 0:
        out.append(_lens_gap_lens(A, B, C, D))
        if B < 0:
            out.append(_three_lens_positive(A, B, C, D))
    # pre/post-multiplied variants for near-degenerate entries
    for c0 in (scale, -scale, 1.0, -1.0):
        if D != 0:
            n = m @ np.array([[1.0, 0.0], [c0 / D, 1.0]])
            if n[1, 0] != 0:
                out.append(_one_lens(*n.ravel()) + [("S", -c0 / D)])
        if A != 0:
            n = np.array([[1.0, 0.0], [c0 / A, 1.0]]) @ m
            if n[1, 0] != 0:
                out.append([("S", -c0 / A)] + _one_lens(*n.ravel()))
    for g in (1.0, scale, 1.0 / scale if scale else 1.0):
        n = np.array([[1.0, -g], [0.0, 1.0]]) @ m
        a, b, c, d = n.ravel()
        if b > 0:
            out.append([("T", g)] + _lens_gap_lens(a, b, c, d))
        elif b < 0:
            out.append([("T", g)] + _three_lens_positive(a, b, c, d))
        n = m @ np.array([[1.0, -g], [0.0, 1.0]])
        a, b, c, d = n.ravel()
        if b > 0:
            out.append(_lens_gap_lens(a, b, c, d) + [("T", g)])
        elif b < 0:
            out.append(_three_lens_positive(a, b, c, d) + [("T", g)])
    return out


def synthesize_lenses(m, physical=False, tol=TOL_DET, max_error=1e-10) -> LensChain:
    """Lens/gap chain with at most three lenses whose product is ``m``.

    By default the chain with the fewest lenses is returned; negative
    (virtual) gaps may appear and are flagged. With ``physical=True`` only
    chains with non-negative gaps are considered; one always exists with at
    most three lenses.
    """
    m = check_unimodular(np.asarray(m, dtype=float), tol)
    scale = max(1.0, float(np.max(np.abs(m))))
    best = None
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        candidates = _candidates(m)
    for shears in candidates:
        if not all(math.isfinite(v) for _, v in shears):
            continue
        chain = _chain(shears)
        if chain.lens_count > 3 or (physical and chain.virtual):
            continue
        err = float(np.max(np.abs(chain.matrix() - m)))
        if err > max_error * scale:
            continue
        key = (chain.lens_count, err)
        if best is None or key < best[0]:
            best = (key, chain)
    if best is None:
        raise ArithmeticError("lens synthesis failed to meet the reconstruction tolerance")
    return best[1]


# ---------------------------------------------------- SU(1,1) <-> Sp(2)

C1 = np.array([[1, 1j], [1j, 1]]) / math.sqrt(2)
C2 = np.array([[1, 1], [-1, 1]]) / math.sqrt(2)
_W = np.exp(1j * math.pi / 4)
C_CONJ = np.array([[_W, _W], [-_W.conjugate(), _W.conjugate()]]) / math.sqrt(2)
C_CONJ_INV = np.array([[_W.conjugate(), -_W], [_W.conjugate(), _W]]) / math.sqrt(2)


def su11_to_sp2(w, tol=TOL_REAL):
    """V = C W C^-1 with C = C2 C1; raises if V is not real."""
    w = np.asarray(w, dtype=complex)
    if w.shape != (2, 2):
        raise DomainError("expected a 2x2 matrix")
    v = C_CONJ @ w @ C_CONJ_INV
    scale = max(1.0, float(np.max(np.abs(v))))
    if float(np.max(np.abs(v.imag))) > tol * scale:
        raise DomainError("matrix is not conjugate to a real matrix (not in SU(1,1))")
    return v.real.copy()


def sp2_to_su11(v):
    """W = C^-1 V C."""
    v = np.asarray(v, dtype=float)
    if v.shape != (2, 2):
        raise DomainError("expected a 2x2 matrix")
    return C_CONJ_INV @ v @ C_CONJ


# ---------------------------------------------------------------- Iwasawa


def iwasawa_angle(eta):
    """theta solving sinh(eta) = cosh(eta) sin(2 theta)."""
    if not math.isfinite(eta):
        raise DomainError("eta must be finite")
    return 0.5 * math.asin(math.tanh(eta))


def rotation_squeeze_rotation(phi, eta, xi):
    """R(phi) diag(e^eta, e^-eta) R(xi) with full-angle rotations."""
    return rotation(2.0 * phi) @ boost_z(2.0 * eta) @ rotation(2.0 * xi)


def iwasawa_matrix(eta, theta=None):
    """Assemble R(theta + pi/4) diag(e^eta, e^-eta) R(theta - pi/4).

    At the constrained theta this is ((1, 0), (2 sinh eta, 1)).
    """
    if theta is None:
        theta = iwasawa_angle(eta)
    return rotation_squeeze_rotation(theta + math.pi / 4, eta, theta - math.pi / 4)


# ----------------------------------------------------------- matrix powers


@dataclass(frozen=True)
class PowerForm:
    """Conjugacy normal form M = sign * S K S^-1.

    K is rotation(parameter) (elliptic), boost_x(parameter) (hyperbolic) or
    the translation ((1, parameter), (0, 1)) (parabolic), with S real
    unimodular.
    """

    klass: str
    sign: float
    conjugator: np.ndarray
    parameter: float

    def core(self, n=1):
        if self.klass == "elliptic":
            return rotation(math.remainder(n * self.parameter, 4 * math.pi))
        if self.klass == "hyperbolic":
            return boost_x(n * self.parameter)
        return np.array([[1.0, n * self.parameter], [0.0, 1.0]])

    def power(self, n):
        s = self.conjugator
        s_inv = np.array([[s[1, 1], -s[0, 1]], [-s[1, 0], s[0, 0]]])
        return self.sign**n * (s @ self.core(n) @ s_inv)

    @property
    def pure_boost(self):
        """True when the conjugator is diagonal, i.e. a pure boost_z."""
        s = self.conjugator
        return bool(s[0, 1] == 0 and s[1, 0] == 0 and s[0, 0] > 0)

    def boost_rapidity(self):
        """Rapidity mu with conjugator = boost_z(mu), if pure_boost."""
        return 2.0 * math.log(self.conjugator[0, 0]) if self.pure_boost else None

    def to_json(self):
        return {
            "class": self.klass,
            "sign": num(self.sign),
            "conjugator": encode(self.conjugator),
            "parameter": num(self.parameter),
            "pure_boost": self.pure_boost,
        }


def classify(m, parabolic_tol=PARABOLIC_TOL):
    tr = float(m[0, 0] + m[1, 1])
    if abs(abs(tr) - 2.0) <= parabolic_tol:
        return "parabolic"
    return "elliptic" if abs(tr) < 2.0 else "hyperbolic"


def _triangular_conjugator(r, c):
    """S = ((1/sqrt c, r/sqrt c), (0, sqrt c)), c > 0."""
    rc = math.sqrt(c)
    return np.array([[1.0 / rc, r / rc], [0.0, rc]])


def power_form(m, tol=TOL_DET, parabolic_tol=PARABOLIC_TOL) -> PowerForm:
    m = check_unimodular(np.asarray(m, dtype=float), tol)
    klass = classify(m, parabolic_tol)
    tr = float(m[0, 0] + m[1, 1])
    sign = 1.0 if tr >= 0 else -1.0

    if klass == "elliptic":
        (A, B), (C, D) = m
        c = 0.5 * tr
        s = math.copysign(math.sqrt(1.0 - c * c), C)
        theta = 2.0 * math.atan2(s, c)
        # (M - cI)/s = S J S^-1 with J = ((0, -1), (1, 0))
        return PowerForm("elliptic", 1.0, _triangular_conjugator(0.5 * (A - D) / s, C / s), theta)

    me = sign * m
    (A, B), (C, D) = me
    r = 0.5 * (A - D)
    if klass == "parabolic":
        # me - I is (nearly) nilpotent: u * a b^T with a its kernel, b = a rotated by +90 deg
        nil = me - np.eye(2)
        if abs(B) + abs(r) > 0:
            a = np.array([B, -r])
        else:
            a = np.array([0.0, 1.0])
        a = a / np.hypot(*a)
        b = np.array([-a[1], a[0]])
        u = float(a @ nil @ b)
        s = np.array([[a[0], b[0]], [a[1], b[1]]])
        return PowerForm("parabolic", sign, s, u)

    ch = 0.5 * abs(tr)
    shm = math.sqrt(ch * ch - 1.0)
    chi = 2.0 * math.asinh(shm)
    if A == D:
        # N = ((0, b), (1/b, 0)) is P conjugated by diag(sqrt|b|, 1/sqrt|b|),
        # with the sign of b absorbed into the rapidity
        k = math.sqrt(abs(B) / shm)
        return PowerForm("hyperbolic", sign, np.diag([k, 1.0 / k]), math.copysign(chi, B))
    # N = (me - ch I)/sh squares to I; S P S^-1 = N with P = ((0, 1), (1, 0))
    # maps the P eigenvectors (1, +-1)/sqrt 2 onto those of N
    (a, b), (c, _) = (me - ch * np.eye(2)) / shm
    v_plus = max((np.array([b, 1.0 - a]), np.array([1.0 + a, c])), key=np.linalg.norm)
    v_minus = max((np.array([b, -1.0 - a]), np.array([1.0 - a, -c])), key=np.linalg.norm)
    v = np.column_stack([v_plus, v_minus])
    if np.linalg.det(v) > 0:
        v[:, 1] *= -1
    s = v @ (np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2))
    s = s / math.sqrt(np.linalg.det(s))
    return PowerForm("hyperbolic", sign, s, chi)


def power_closed_form(m, n, tol=TOL_DET, parabolic_tol=PARABOLIC_TOL):
    """M^n in constant time from the conjugacy normal form.

    Elliptic: S R(n theta) S^-1.  Parabolic: sign^n (I + n (sign M - I)),
    with the trace defect inside the parabolic window carried through the
    Chebyshev weights.
    Hyperbolic: sign^n S X(n chi) S^-1.
    """
    if int(n) != n or n < 0:
        raise DomainError("power must be a non-negative integer")
    n = int(n)
    form = power_form(m, tol, parabolic_tol)
    if n == 0:
        return np.eye(2)
    if form.klass == "parabolic":
        me = form.sign * np.asarray(m, dtype=float)
        u1, u2 = _near_parabolic_weights(0.5 * float(np.trace(me)), n)
        return form.sign**n * (u1 * me - u2 * np.eye(2))
    return form.power(n)


def _chebyshev_u(t, k):
    """U_k(t) for t near 1: sin((k+1) a)/sin a or its hyperbolic twin, at t = cos a or cosh a."""
    if k < 0:
        return 0.0
    d = t - 1.0
    if d == 0:
        return float(k + 1)
    if d > 0:
        a = math.acosh(t)
        return math.sinh((k + 1) * a) / math.sinh(a)
    a = math.acos(t)
    return math.sin((k + 1) * a) / math.sin(a)


def _near_parabolic_weights(t, n):
    """(U_{n-1}(t), U_{n-2}(t)) with M^n = U_{n-1} M - U_{n-2} I.

    At t = 1 these are (n, n - 1), the exact shear formula I + n (M - I);
    inside the parabolic window the trace defect is kept instead of dropped.
    """
    return _chebyshev_u(t, n - 1), _chebyshev_u(t, n - 2)


def power_direct(m, n):
    out = np.eye(2)
    for _ in range(n):
        out = out @ m
    return out


# ------------------------------------------------------- shear generators

SP2_GENERATORS = (
    0.5 * np.array([[1j, 0], [0, -1j]]),
    0.5 * np.array([[0, 1j], [1j, 0]]),
    0.5 * np.array([[0, -1j], [1j, 0]]),
)


@dataclass(frozen=True)
class ShearAlgebra:
    X: tuple
    coefficients: np.ndarray  # row i: X_i in terms of (B1, B2, J)
    residual: float


def shear_generators() -> ShearAlgebra:
    """X1, X2, X3 generating translations, lenses and squeezes.

    exp(-i u X1) = ((1, u), (0, 1)), exp(-i u X2) = ((1, 0), (u, 1)).
    The coefficients express each X_i in the Sp(2) basis (B1, B2, J).
    """
    X1 = np.array([[0, 1j], [0, 0]])
    X2 = np.array([[0, 0], [1j, 0]])
    X3 = np.array([[1j, 0], [0, -1j]])
    basis = np.stack([g.ravel() for g in SP2_GENERATORS], axis=1)
    # real coefficients: stack real and imaginary parts
    A = np.vstack([basis.real, basis.imag])
    coefs, resid = [], 0.0
    for x in (X1, X2, X3):
        rhs = np.concatenate([x.ravel().real, x.ravel().imag])
        k, *_ = np.linalg.lstsq(A, rhs, rcond=None)
        coefs.append(k)
        resid = max(resid, float(np.max(np.abs(A @ k - rhs))))
    return ShearAlgebra((X1, X2, X3), np.array(coefs), resid)


def shear_commutator_defects(alg: ShearAlgebra | None = None):
    """Entrywise defects of [X1,X2] = iX3, [X1,X3] = -iX1, [X2,X3] = iX2."""
    X1, X2, X3 = (alg or shear_generators()).X
    return {
        "[X1,X2]=iX3": float(np.max(np.abs(commutator(X1, X2) - 1j * X3))),
        "[X1,X3]=-iX1": float(np.max(np.abs(commutator(X1, X3) + 1j * X1))),
        "[X2,X3]=iX2": float(np.max(np.abs(commutator(X2, X3) - 1j * X2))),
    }
