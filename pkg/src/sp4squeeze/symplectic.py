"""Linear algebra of Sp(4,R) in the quadrature ordering xi = (q1, q2, p1, p2).

Group elements are plain 4x4 float arrays acting as xi -> S xi. Passive
(photon-number conserving) elements are the U(2) block matrices
S(X, Y) = [[X, Y], [-Y, X]] with u = X - iY unitary.

The ten metaplectic generators Q, J1..J3, K1..K3, L1..L3 are hermitian
quadratics in the mode operators. Each is stored as a complex quadratic form
in xi_c = (a1, a2, a1^dag, a2^dag), converted to a real symmetric form G in
xi, and mapped to the matrix generator g = -beta G, so that
exp(i t X) acts on the quadratures as exp(t g).
"""
import numpy as np

from . import kernels
from .errors import NotSymplecticError, NotUnitaryError

GENERATOR_NAMES = ("Q", "J1", "J2", "J3", "K1", "K2", "K3", "L1", "L2", "L3")

_A1, _A2, _A1D, _A2D = 0, 1, 2, 3

# (coefficient, i, j) meaning coefficient * xi_c[i] * xi_c[j], symmetrized.
_GENERATOR_TERMS = {
    "Q": [(0.5, _A1D, _A1), (0.5, _A2D, _A2)],
    "J1": [(0.5, _A1D, _A2), (0.5, _A2D, _A1)],
    "J2": [(0.5j, _A2D, _A1), (-0.5j, _A1D, _A2)],
    "J3": [(0.5, _A1D, _A1), (-0.5, _A2D, _A2)],
    "K1": [(0.25, _A1D, _A1D), (0.25, _A1, _A1), (-0.25, _A2D, _A2D), (-0.25, _A2, _A2)],
    "K2": [(-0.25j, _A1D, _A1D), (0.25j, _A1, _A1), (-0.25j, _A2D, _A2D), (0.25j, _A2, _A2)],
    "K3": [(-0.5, _A1D, _A2D), (-0.5, _A1, _A2)],
    "L1": [(0.25j, _A1D, _A1D), (-0.25j, _A1, _A1), (-0.25j, _A2D, _A2D), (0.25j, _A2, _A2)],
    "L2": [(0.25, _A1D, _A1D), (0.25, _A1, _A1), (0.25, _A2D, _A2D), (0.25, _A2, _A2)],
    "L3": [(-0.5j, _A1D, _A2D), (0.5j, _A1, _A2)],
}

_BETA = np.block([[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]])
_OMEGA = np.array(
    [[1, 0, 1j, 0], [0, 1, 0, 1j], [1, 0, -1j, 0], [0, 1, 0, -1j]], dtype=complex
) / np.sqrt(2.0)


def beta_form():
    """The symplectic form with [xi_a, xi_b] = i beta_ab."""
    return _BETA.copy()


def omega_matrix():
    """The unitary Omega with xi_c = Omega xi."""
    return _OMEGA.copy()


def symplectic_residual(s):
    s = np.asarray(s, dtype=float)
    return float(np.max(np.abs(s @ _BETA @ s.T - _BETA)))


def is_symplectic(s, tol=1e-10):
    """True iff max|S beta S^T - beta| <= tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    s = np.asarray(s, dtype=float)
    if s.shape != (4, 4) or not np.all(np.isfinite(s)):
        return False
    return symplectic_residual(s) <= tol


def require_symplectic(s, tol=1e-10):
    """Return ``s`` as a float array or raise NotSymplecticError.

    ``tol`` is relative: it is scaled by max(1, max|S|^2) because rounding in
    S beta S^T grows with the square of the entries.
    """
    s = np.asarray(s, dtype=float)
    if s.shape != (4, 4):
        raise NotSymplecticError(f"expected a 4x4 matrix, got shape {s.shape}")
    if not np.all(np.isfinite(s)):
        raise NotSymplecticError("matrix has non-finite entries")
    res = symplectic_residual(s)
    scale = max(1.0, float(np.max(np.abs(s))) ** 2)
    if res > tol * scale:
        raise NotSymplecticError(f"matrix is not symplectic (residual {res:.3e})", residual=res)
    return s


def is_unitary(u, tol=1e-10):
    u = np.asarray(u, dtype=complex)
    return u.shape == (2, 2) and bool(np.max(np.abs(u.conj().T @ u - np.eye(2))) <= tol)


def embed_u2(u, tol=1e-10):
    """Real 4x4 passive symplectic matrix S(X, Y) for a 2x2 unitary u = X - iY."""
    u = np.asarray(u, dtype=complex)
    if not is_unitary(u, tol):
        raise NotUnitaryError("u is not a 2x2 unitary matrix")
    x, y = u.real, -u.imag
    return np.block([[x, y], [-y, x]])


def is_u2_block(s, tol=1e-10):
    s = np.asarray(s, dtype=float)
    if s.shape != (4, 4):
        return False
    x, y = s[:2, :2], s[:2, 2:]
    block_ok = np.max(np.abs(s[2:, 2:] - x)) <= tol and np.max(np.abs(s[2:, :2] + y)) <= tol
    return bool(block_ok) and np.max(np.abs(s @ s.T - np.eye(4))) <= tol


def extract_u2(s, tol=1e-10):
    """Inverse of :func:`embed_u2`; rejects matrices outside the U(2) block form."""
    s = np.asarray(s, dtype=float)
    if not is_u2_block(s, tol):
        raise NotUnitaryError("matrix is not in the orthogonal U(2) block form")
    x = 0.5 * (s[:2, :2] + s[2:, 2:])
    y = 0.5 * (s[:2, 2:] - s[2:, :2])
    return x - 1j * y


def complex_form(s):
    """S_c = Omega S Omega^dag, the action on (a1, a2, a1^dag, a2^dag)."""
    return _OMEGA @ np.asarray(s, dtype=float) @ _OMEGA.conj().T


def _check_name(name):
    if name not in _GENERATOR_TERMS:
        raise KeyError(f"unknown generator {name!r}; expected one of {GENERATOR_NAMES}")


def quadratic_form_of_generator(name):
    """Real symmetric G with X = 1/2 xi^T G xi + const for generator ``name``."""
    _check_name(name)
    c = np.zeros((4, 4), dtype=complex)
    for coef, i, j in _GENERATOR_TERMS[name]:
        c[i, j] += coef
    g = _OMEGA.T @ (c + c.T) @ _OMEGA
    # hermitian generators give a real form; the imaginary part is rounding
    assert np.max(np.abs(g.imag)) < 1e-14
    g = g.real
    return 0.5 * (g + g.T)


_GENERATORS = {n: -_BETA @ quadratic_form_of_generator(n) for n in GENERATOR_NAMES}
for _g in _GENERATORS.values():
    _g.flags.writeable = False


def generator_matrix(name):
    """Matrix generator g with exp(i t X) acting on xi as exp(t g)."""
    _check_name(name)
    return _GENERATORS[name].copy()


def generator_basis():
    return {n: _GENERATORS[n].copy() for n in GENERATOR_NAMES}


def algebra_element(qc=0.0, j=(0.0, 0.0, 0.0), k=(0.0, 0.0, 0.0), l=(0.0, 0.0, 0.0)):
    """qc g_Q + j.g_J + k.g_K + l.g_L."""
    out = qc * _GENERATORS["Q"]
    for r in range(3):
        out = out + j[r] * _GENERATORS[f"J{r + 1}"]
        out = out + k[r] * _GENERATORS[f"K{r + 1}"]
        out = out + l[r] * _GENERATORS[f"L{r + 1}"]
    return np.array(out, dtype=float)


def expm(m):
    """Matrix exponential of a real square matrix.

    Symmetric and antisymmetric inputs go through a hermitian
    eigendecomposition; everything else through scaling-and-squaring
    Pade(13) (compiled for 4x4 when available).

    Raises:
        ValueError: non-finite entries.
        OverflowError: the exponential is not representable.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expm needs a square matrix")
    if not np.all(np.isfinite(m)):
        raise ValueError("expm input has non-finite entries")
    if np.abs(m).sum(axis=0).max() > 700.0:
        raise OverflowError("matrix norm too large for a finite exponential")
    scale = max(1.0, float(np.max(np.abs(m))))
    if np.max(np.abs(m - m.T)) <= 1e-15 * scale:
        w, v = np.linalg.eigh(0.5 * (m + m.T))
        out = (v * np.exp(w)) @ v.T
    elif np.max(np.abs(m + m.T)) <= 1e-15 * scale:
        w, v = np.linalg.eigh(-0.5j * (m - m.T))
        out = ((v * np.exp(1j * w)) @ v.conj().T).real
    elif m.shape == (4, 4):
        out = kernels.expm_pade(m)
    else:
        out = kernels._fallback.expm_pade(m)
    if not np.all(np.isfinite(out)):
        raise OverflowError("matrix exponential overflowed")
    return out


def polar_decompose(s, tol=1e-9):
    """Factor S = P K with P in Pi (symmetric positive definite symplectic)
    and K in U(2) (orthogonal symplectic).

    Computed from the SVD S = W diag(sigma) Z^T as P = W diag(sigma) W^T,
    K = W Z^T; this is (S S^T)^(1/2) and its complement without squaring the
    condition number.
    """
    s = require_symplectic(s, tol)
    w, sig, zt = np.linalg.svd(s)
    p = (w * sig) @ w.T
    p = 0.5 * (p + p.T)
    k = w @ zt
    return p, k


def random_unitary(rng):
    """Haar-random 2x2 unitary."""
    z = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_symplectic(rng, scale=2.0):
    """exp of an algebra element with coefficients uniform in [-scale, scale]."""
    c = rng.uniform(-scale, scale, size=10)
    return expm(algebra_element(c[0], c[1:4], c[4:7], c[7:10]))
