"""Detection models and passive-optics synthesis of U(2) elements.

Heterodyne detection measures the q quadrature of a(psi) = (a1 + a2)
e^{-i psi/2} / sqrt(2), i.e. only the one-parameter family U_H(psi) of
SU(2). A Mach-Zehnder interferometer with phase shifters, or a
quarter-half-quarter wave plate stack, reaches every element.

Jones convention for a retarder with retardance delta and slow axis at chi:
W(delta, chi) = R(chi) diag(e^{-i delta/2}, e^{i delta/2}) R(-chi), with R
the real 2x2 rotation.
"""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NotUnitaryError
from .gaussian import VACUUM_VARIANCE
from .symplectic import is_unitary

FOUR_PI = 4.0 * np.pi
_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)
# conjugation by _CYCLE maps sigma_x -> sigma_y -> sigma_z -> sigma_x
_CYCLE = 0.5 * (np.eye(2) - 1j * (_SX + _SY + _SZ))


@dataclass(frozen=True)
class HeterodyneSetting:
    psi: float

    def __post_init__(self):
        object.__setattr__(self, "psi", float(np.mod(self.psi, FOUR_PI)))


@dataclass(frozen=True)
class MachZehnderParams:
    phi: float
    theta: float
    psi1: float
    psi2: float

    def to_dict(self):
        return {"phi": self.phi, "theta": self.theta, "psi1": self.psi1, "psi2": self.psi2}


@dataclass(frozen=True)
class WaveplateParams:
    """Slow-axis angles of Q1, H, Q2 (light meets Q1 first); reduced mod pi."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, float(np.mod(getattr(self, name), np.pi)))

    def to_dict(self):
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}


class HeterodyneScan(NamedTuple):
    psi_min: float
    var_min: float
    detects: bool
    psis: np.ndarray
    variances: np.ndarray


def _psi(s):
    return s.psi if isinstance(s, HeterodyneSetting) else float(s)


def heterodyne_unitary(s):
    """U_H(psi) = [[e^{-i psi/2}, e^{-i psi/2}], [-e^{i psi/2}, e^{i psi/2}]] / sqrt2."""
    e = np.exp(-0.5j * _psi(s))
    return np.array([[e, e], [-np.conj(e), np.conj(e)]]) / np.sqrt(2.0)


def heterodyne_quadrature_vector(s):
    """w with q(psi) = w . xi, i.e. (c, c, s, s)/sqrt2 for the half angle."""
    half = 0.5 * _psi(s)
    c, sn = np.cos(half), np.sin(half)
    return np.array([c, c, sn, sn]) / np.sqrt(2.0)


def quadrature_variance(v, w):
    w = np.asarray(w, dtype=float)
    if not np.linalg.norm(w) > 0:
        raise ValueError("quadrature vector must be nonzero")
    return float(w @ np.asarray(v, dtype=float) @ w)


def heterodyne_scan(v, samples=64, threshold_tol=1e-12):
    """Minimum heterodyne quadrature variance over psi in [0, 4 pi).

    var(psi) = A cos^2(psi/2) + B sin^2(psi/2) + C sin(psi/2) cos(psi/2) is
    minimised in closed form; the grid of ``samples`` points is returned for
    output and as a cross-check. ``detects`` is var_min < 1/2 by more than
    ``threshold_tol``. The variance matrix is not checked for physicality.
    """
    if samples < 8:
        raise ValueError("need at least 8 samples")
    v = np.asarray(v, dtype=float)
    wq = np.array([1.0, 1.0, 0.0, 0.0]) / np.sqrt(2.0)
    wp = np.array([0.0, 0.0, 1.0, 1.0]) / np.sqrt(2.0)
    a, b = wq @ v @ wq, wp @ v @ wp
    c = wq @ v @ wp + wp @ v @ wq
    mid, amp = 0.5 * (a + b), np.hypot(0.5 * (a - b), 0.5 * c)
    var_min = float(mid - amp)
    psi_min = 0.0 if amp == 0.0 else float(np.mod(np.arctan2(-c, -(a - b)), 2 * np.pi))
    psis = np.linspace(0.0, FOUR_PI, samples, endpoint=False)
    half = 0.5 * psis
    variances = a * np.cos(half) ** 2 + b * np.sin(half) ** 2 + c * np.sin(half) * np.cos(half)
    detects = var_min < VACUUM_VARIANCE - threshold_tol
    return HeterodyneScan(psi_min, var_min, bool(detects), psis, variances)


def mz_forward(p):
    """U(2) matrix of the Mach-Zehnder with phase settings ``p``."""
    c, s = np.cos(p.theta), np.sin(p.theta)
    return np.array(
        [
            [np.exp(1j * (p.phi + p.psi1)) * c, -1j * np.exp(-1j * (p.phi - p.psi1)) * s],
            [-1j * np.exp(1j * (p.phi + p.psi2)) * s, np.exp(-1j * (p.phi - p.psi2)) * c],
        ]
    )


def mz_synthesize(u, tol=1e-10):
    """Mach-Zehnder settings reproducing the unitary ``u``.

    theta = arccos|u11| in [0, pi/2]. When an entry pair vanishes the phases
    are underdetermined and phi = 0 is used.
    """
    u = np.asarray(u, dtype=complex)
    if not is_unitary(u, 1e-8):
        raise NotUnitaryError("u is not a 2x2 unitary matrix")
    c = np.sqrt(0.5 * (abs(u[0, 0]) ** 2 + abs(u[1, 1]) ** 2))
    s = np.sqrt(0.5 * (abs(u[0, 1]) ** 2 + abs(u[1, 0]) ** 2))
    theta = float(np.arctan2(s, c))
    diag1, diag2 = np.angle(u[0, 0]), np.angle(u[1, 1])
    off1, off2 = np.angle(u[0, 1]) + np.pi / 2, np.angle(u[1, 0]) + np.pi / 2
    if s <= tol * 1e-4:
        phi, psi1, psi2 = 0.0, diag1, diag2
    elif c <= tol * 1e-4:
        phi, psi1, psi2 = 0.0, off1, off2
    else:
        phi = 0.5 * (diag1 - off1)
        psi1 = diag1 - phi
        psi2 = diag2 + phi if c >= s else off2 - phi
    wrap = lambda x: float(np.mod(x + np.pi, 2 * np.pi) - np.pi)
    return MachZehnderParams(wrap(phi), theta, wrap(psi1), wrap(psi2))


def retarder(delta, chi):
    """Jones matrix W(delta, chi)."""
    c, s = np.cos(chi), np.sin(chi)
    rot = np.array([[c, -s], [s, c]])
    return rot @ np.diag([np.exp(-0.5j * delta), np.exp(0.5j * delta)]) @ rot.T


def waveplate_forward(p):
    """Q(gamma) H(beta) Q(alpha); always in SU(2)."""
    return retarder(np.pi / 2, p.gamma) @ retarder(np.pi, p.beta) @ retarder(np.pi / 2, p.alpha)


def _zyz_angles(m):
    """(A, B, C) with m = Rz(A) Ry(B) Rz(C), m in SU(2), R_n(t) = exp(-i t sigma_n / 2)."""
    c, s = abs(m[0, 0]), abs(m[1, 0])
    b = 2.0 * np.arctan2(s, c)
    apc = -2.0 * np.angle(m[0, 0]) if c > 1e-14 else 0.0
    amc = 2.0 * np.angle(m[1, 0]) if s > 1e-14 else 0.0
    return 0.5 * (apc + amc), b, 0.5 * (apc - amc)


def _waveplate_closed_form(u_su2):
    # Q(g) H(b) Q(a) = -Ry(2g) Rx(4b - 2a - 2g)^-1 Ry(-2a); cycle the axes to use ZYZ
    big_a, big_b, big_c = _zyz_angles(_CYCLE @ (-u_su2) @ _CYCLE.conj().T)
    gamma, alpha = 0.5 * big_a, -0.5 * big_c
    beta = 0.25 * (2 * alpha + 2 * gamma - big_b)
    return np.array([alpha, beta, gamma])


def _wp_residual(x, target):
    d = waveplate_forward(WaveplateParams(*x)) - target
    return np.concatenate([d.real.ravel(), d.imag.ravel()])


def waveplate_newton(target, start, tol=1e-10, max_iter=100, step=1e-7):
    """Gauss-Newton on the three plate angles with a finite-difference Jacobian."""
    x = np.array(start, dtype=float)
    r = _wp_residual(x, target)
    for _ in range(max_iter):
        if np.max(np.abs(r)) <= tol:
            break
        jac = np.empty((8, 3))
        for i in range(3):
            dx = np.zeros(3)
            dx[i] = step
            jac[:, i] = (_wp_residual(x + dx, target) - _wp_residual(x - dx, target)) / (2 * step)
        delta = np.linalg.lstsq(jac, -r, rcond=None)[0]
        x = x + delta
        r = _wp_residual(x, target)
    return x, float(np.max(np.abs(r)))


def waveplate_synthesize(u, det_one=False, tol=1e-10):
    """Plate angles and global phase with e^{i phase} waveplate_forward(p) = u.

    The SU(2) part is solved in closed form; Newton iteration from fixed
    starting points is only a fallback if that misses ``tol``.

    Returns:
        (WaveplateParams, global_phase)
    """
    u = np.asarray(u, dtype=complex)
    if not is_unitary(u, 1e-8):
        raise NotUnitaryError("u is not a 2x2 unitary matrix")
    det = np.linalg.det(u)
    if det_one:
        if abs(det - 1.0) > 1e-8:
            raise NotUnitaryError("det_one requested but det(u) != 1")
        phase = 0.0
    else:
        phase = 0.5 * float(np.angle(det))
    target = u * np.exp(-1j * phase)
    x = _waveplate_closed_form(target)
    err = float(np.max(np.abs(_wp_residual(x, target))))
    if err > tol:
        starts = [x] + [np.array([i, j, k]) * np.pi / 2 + 0.3 for i in (0, 1) for j in (0, 1) for k in (0, 1)]
        best = (x, err)
        for st in starts:
            cand, cerr = waveplate_newton(target, st, tol)
            if cerr < best[1]:
                best = (cand, cerr)
            if cerr <= tol:
                break
        x = best[0]
    return WaveplateParams(*x), phase
