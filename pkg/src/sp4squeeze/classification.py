"""U(2)-invariant classification of two-mode squeezing transformations.

A squeezing transformation is exp(k.g_K + l.g_L) for real 3-vectors k, l.
Conjugation by U(2) rotates (k, l) as a pair by the U(1) angle and rotates
both vectors by a common SO(3) matrix, so the class is fixed by the Gram
matrix invariants det M and tr M, equivalently by (a, b) with a >= b >= 0
and det M = a^2 b^2, tr M = a^2 + b^2. The class representative is
diag(e^{(a-b)/2}, e^{(a+b)/2}, e^{-(a-b)/2}, e^{-(a+b)/2}).
"""
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from scipy.spatial.transform import Rotation

from .errors import InvalidLabelError, NotSymplecticError, Sp4Error
from .symplectic import (
    algebra_element,
    expm,
    extract_u2,
    generator_matrix,
    polar_decompose,
    require_symplectic,
)

ZERO_TOL = 1e-12


@dataclass(frozen=True)
class SqueezeVectors:
    k: tuple
    l: tuple

    def __post_init__(self):
        k = tuple(float(x) for x in self.k)
        l = tuple(float(x) for x in self.l)
        if len(k) != 3 or len(l) != 3:
            raise Sp4Error("squeeze vectors must have three components each")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "l", l)

    @property
    def karr(self):
        return np.array(self.k)

    @property
    def larr(self):
        return np.array(self.l)

    def to_dict(self):
        return {"k": list(self.k), "l": list(self.l)}

    @classmethod
    def from_dict(cls, d):
        return cls(d["k"], d["l"])


@dataclass(frozen=True)
class ClassLabel:
    """Equivalence class (a, b), a >= b >= 0.

    The origin is representable but carries ``no_squeeze=True``: it is the
    identity, not a squeezing transformation.
    """

    a: float
    b: float
    no_squeeze: bool = field(default=False, compare=False)

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (np.isfinite(a) and np.isfinite(b)):
            raise InvalidLabelError("class label must be finite")
        if b < 0 or a < b:
            raise InvalidLabelError(f"class label needs a >= b >= 0, got ({a}, {b})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if a == 0.0:
            object.__setattr__(self, "no_squeeze", True)

    def to_dict(self):
        return {"a": self.a, "b": self.b, "no_squeeze": self.no_squeeze}

    @classmethod
    def from_dict(cls, d):
        return cls(d["a"], d["b"])


class InvariantPair(NamedTuple):
    i1: float
    i2: float


class Canonical(NamedTuple):
    theta: float
    rot: np.ndarray
    label: ClassLabel


def gram_matrix(v):
    k, l = v.karr, v.larr
    return np.array([[k @ k, k @ l], [k @ l, l @ l]])


def invariants(v):
    """(det M, tr M) = (|k x l|^2, |k|^2 + |l|^2)."""
    k, l = v.karr, v.larr
    c = np.cross(k, l)
    return InvariantPair(float(c @ c), float(k @ k + l @ l))


def class_from_invariants(p):
    """Solve a^2 b^2 = i1, a^2 + b^2 = i2 for a >= b >= 0.

    ``i2 == 0`` is the identity and returns the flagged (0, 0) label. Near
    a = b the discriminant cancels and a - b is only good to about
    sqrt(eps) * a; prefer :func:`class_of_vectors` when (k, l) is known.
    """
    i1, i2 = float(p[0]), float(p[1])
    if i1 < 0 or i2 < 0:
        raise Sp4Error("invariants must be non-negative")
    if i2 == 0.0:
        return ClassLabel(0.0, 0.0, no_squeeze=True)
    disc = max(i2 * i2 - 4.0 * i1, 0.0)
    a2 = 0.5 * (i2 + np.sqrt(disc))
    b2 = min(i1 / a2, a2)
    return ClassLabel(np.sqrt(a2), np.sqrt(b2))


def class_of_vectors(v):
    """(a, b) of exp(k.g_K + l.g_L) from the Gram matrix eigenvalues a^2, b^2.

    Same information as :func:`invariants`, but a^2 comes from the symmetric
    2x2 eigenproblem and b^2 = |k x l|^2 / a^2, which keeps full precision
    at a = b (where solving the quadratic in :func:`class_from_invariants`
    loses half the digits) and gives b = 0 exactly for parallel k, l.
    """
    a2 = float(max(np.linalg.eigvalsh(gram_matrix(v))[1], 0.0))
    if a2 == 0.0:
        return ClassLabel(0.0, 0.0, no_squeeze=True)
    b2 = min(invariants(v).i1 / a2, a2)
    return ClassLabel(float(np.sqrt(a2)), float(np.sqrt(b2)))


def so3_rotation(alpha):
    """R_rs(alpha) = d_rs cos + alpha_r alpha_s (1 - cos)/alpha^2 + e_rst alpha_t sin/alpha.

    This is the matrix by which conjugation with exp(alpha.g_J) rotates k and l.
    """
    alpha = np.asarray(alpha, dtype=float)
    ang = float(np.linalg.norm(alpha))
    if ang == 0.0:
        return np.eye(3)
    n = alpha / ang
    cross = np.array([[0.0, n[2], -n[1]], [-n[2], 0.0, n[0]], [n[1], -n[0], 0.0]])
    return np.eye(3) * np.cos(ang) + np.outer(n, n) * (1 - np.cos(ang)) + cross * np.sin(ang)


def su2_angles(rot):
    """Inverse of :func:`so3_rotation`: alpha with so3_rotation(alpha) == rot."""
    # so3_rotation(alpha) is the active rotation by -alpha
    return -Rotation.from_matrix(rot).as_rotvec()


def canonical_passive(theta, rot):
    """4x4 passive K with K S(v) K^T equal to the canonical form of S(v).

    K = exp(alpha.g_J) exp(theta g_Q), alpha = su2_angles(rot).
    """
    alpha = su2_angles(rot)
    return expm(algebra_element(0.0, alpha)) @ expm(theta * generator_matrix("Q"))


def _rotate_pair(k, l, theta):
    c, s = np.cos(theta), np.sin(theta)
    return c * k - s * l, s * k + c * l


def _min_rotation_to(vec, target):
    """Smallest rotation taking unit ``vec`` onto unit ``target``."""
    axis = np.cross(vec, target)
    sin = np.linalg.norm(axis)
    cos = float(vec @ target)
    if sin < 1e-15:
        if cos > 0:
            return np.eye(3)
        # antiparallel: half turn about any perpendicular axis
        perp = np.cross(vec, [1.0, 0.0, 0.0])
        if np.linalg.norm(perp) < 1e-8:
            perp = np.cross(vec, [0.0, 0.0, 1.0])
        return Rotation.from_rotvec(np.pi * perp / np.linalg.norm(perp)).as_matrix()
    return Rotation.from_rotvec(axis / sin * np.arctan2(sin, cos)).as_matrix()


def canonicalize(v):
    """U(1) angle and SO(3) rotation bringing (k, l) to ((0, a, 0), (b, 0, 0)).

    (k', l') = R(theta)(k, l) makes the Gram matrix diagonal with the larger
    entry first; then rot @ k' = (0, a, 0) and rot @ l' = (b, 0, 0).
    """
    k, l = v.karr, v.larr
    m = gram_matrix(v)
    tr = m[0, 0] + m[1, 1]
    if tr == 0.0:
        raise Sp4Error("cannot canonicalize the zero squeeze")
    if abs(m[0, 0] - m[1, 1]) <= 1e-14 * tr and abs(m[0, 1]) <= 1e-14 * tr:
        theta = 0.0
    else:
        _, vecs = np.linalg.eigh(m)
        x, y = vecs[:, 1]
        theta = float(np.arctan2(-y, x)) + 0.0
        if theta <= -np.pi / 2:
            theta += np.pi
        elif theta > np.pi / 2:
            theta -= np.pi
    k1, l1 = _rotate_pair(k, l, theta)
    a = float(np.linalg.norm(k1))
    khat = k1 / a
    lperp = l1 - (l1 @ khat) * khat
    b = float(np.linalg.norm(lperp))
    e1, e2 = np.eye(3)[0], np.eye(3)[1]
    if b <= 1e-14 * a:
        rot = _min_rotation_to(khat, e2)
    else:
        lhat = lperp / b
        rot = np.array([lhat, khat, np.cross(lhat, khat)])
    label = ClassLabel(a, min(b, a)) if a > 0 else ClassLabel(0.0, 0.0)
    return Canonical(theta, rot, label)


def squeeze_symplectic(v):
    """exp(k.g_K + l.g_L), a symmetric positive definite symplectic matrix."""
    return expm(algebra_element(0.0, (0.0, 0.0, 0.0), v.k, v.l))


def representative_symplectic(label):
    a, b = label.a, label.b
    return np.diag(np.exp([(a - b) / 2, (a + b) / 2, -(a - b) / 2, -(a + b) / 2]))


def _require_positive(p, tol):
    p = require_symplectic(p, tol)
    scale = max(1.0, float(np.max(np.abs(p))))
    if np.max(np.abs(p - p.T)) > tol * scale:
        raise NotSymplecticError("matrix is not symmetric")
    w = np.linalg.eigvalsh(0.5 * (p + p.T))
    if w[0] <= 0:
        raise NotSymplecticError("matrix is not positive definite")
    return 0.5 * (p + p.T)


def class_of_positive(p, tol=1e-9):
    """(a, b) of a member of Pi from its eigenvalues.

    The eigenvalues come in reciprocal pairs e^{+-(a+b)/2}, e^{+-(a-b)/2};
    each pair is combined as a ratio before taking logs, which keeps
    a >= b >= 0 exact under rounding.
    """
    p = _require_positive(p, tol)
    lam = np.linalg.eigvalsh(p)[::-1]
    half_sum = 0.5 * (np.log(lam[0]) - np.log(lam[3]))
    half_diff = 0.5 * (np.log(lam[1]) - np.log(lam[2]))
    half_diff = min(max(half_diff, 0.0), half_sum)
    a = half_sum + half_diff
    b = half_sum - half_diff
    if a <= ZERO_TOL:
        return ClassLabel(0.0, 0.0, no_squeeze=True)
    return ClassLabel(a, b)


def class_from_traces(p, tol=1e-9):
    """(a, b) of a member of Pi by solving the trace equations directly.

    Tr P = 2[cosh((a-b)/2) + cosh((a+b)/2)] and
    Tr P^2 = 2[cosh(a-b) + cosh(a+b)]. With x = cosh((a-b)/2) and
    y = cosh((a+b)/2) these give x + y and x^2 + y^2. Loses about half the
    digits near b = 0 (x = y, the discriminant cancels) and near a = b
    (x = 1, arccosh is flat); :func:`class_of_positive` is the accurate
    route and this one is kept as an independent check.
    """
    p = _require_positive(p, tol)
    s = 0.5 * np.trace(p)
    q = 0.25 * np.trace(p @ p) + 1.0
    prod = 0.5 * (s * s - q)
    disc = np.sqrt(max(s * s - 4.0 * prod, 0.0))
    y = max(0.5 * (s + disc), 1.0)
    x = max(0.5 * (s - disc), 1.0)
    half_sum, half_diff = np.arccosh(y), np.arccosh(x)
    a, b = half_sum + half_diff, half_sum - half_diff
    if a <= ZERO_TOL:
        return ClassLabel(0.0, 0.0, no_squeeze=True)
    return ClassLabel(a, max(b, 0.0))


def trace_residuals(p, label):
    """Relative residuals of both trace equations for ``label``."""
    p = np.asarray(p, dtype=float)
    a, b = label.a, label.b
    t1 = 2 * (np.cosh((a - b) / 2) + np.cosh((a + b) / 2))
    t2 = 2 * (np.cosh(a - b) + np.cosh(a + b))
    return (abs(np.trace(p) - t1) / t1, abs(np.trace(p @ p) - t2) / t2)


def classify_symplectic(s, tol=1e-9):
    """Polar-decompose S = P S(X, Y) and classify P.

    Returns:
        (ClassLabel, u): the class of the squeezing factor and the passive
        factor as a 2x2 unitary u = X - iY.
    """
    p, k = polar_decompose(s, tol)
    return class_of_positive(p, tol), extract_u2(k, 1e-8)


def caves_schumaker_vectors(z):
    """(k, l) of exp(z a1^dag a2^dag - z* a1 a2); class (2|z|, 0)."""
    z = complex(z)
    return SqueezeVectors((0.0, 0.0, -2.0 * z.imag), (0.0, 0.0, 2.0 * z.real))


def single_mode_vectors(z, alpha, beta, tol=1e-10):
    """(k, l) of the squeeze of the single dressed mode alpha a1 + beta a2.

    Class (2|z|, 2|z|). Requires |alpha|^2 + |beta|^2 = 1.
    """
    z, alpha, beta = complex(z), complex(alpha), complex(beta)
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > tol:
        raise Sp4Error("(alpha, beta) must be normalized")
    ac, bc = alpha.conjugate(), beta.conjugate()
    w = 2 * z * np.array([-1j * (ac**2 - bc**2), ac**2 + bc**2, 2j * ac * bc])
    return SqueezeVectors(w.real, w.imag)


def product_class(p1, p2, tol=1e-9):
    """Class of the squeezing factor of P1 P2 (generally not in Pi itself)."""
    _require_positive(p1, tol)
    _require_positive(p2, tol)
    label, _ = classify_symplectic(np.asarray(p1) @ np.asarray(p2), tol)
    return label


def product_trace_residuals(p1, p2, label):
    """Relative residuals of the two cosh equations for the product P1 P2."""
    m = np.asarray(p1) @ np.asarray(p2)
    mm = m @ m.T
    a, b = label.a, label.b
    t1 = 2 * (np.cosh(a - b) + np.cosh(a + b))
    t2 = 2 * (np.cosh(2 * (a - b)) + np.cosh(2 * (a + b)))
    return (abs(np.trace(mm) - t1) / t1, abs(np.trace(mm @ mm) - t2) / t2)


def two_mode_character(label):
    """1 - b/a: 1 on the Caves-Schumaker line, 0 on the single-mode line."""
    if label.a <= 0:
        raise Sp4Error("two-mode character undefined for the identity class")
    return 1.0 - label.b / label.a
