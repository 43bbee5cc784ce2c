"""Gaussian two-mode states described by means and variance matrices.

Units: the vacuum variance matrix is 1/2 * I (hbar = 1 with
q = (a + a^dag)/sqrt(2)), so a state is squeezed iff the least eigenvalue
of V is below 1/2. Other libraries often normalise the vacuum to I.
"""
from dataclasses import dataclass

import numpy as np

from .classification import ClassLabel, representative_symplectic
from .errors import Sp4Error
from .jsonio import complex_matrix_to_json
from .symplectic import beta_form, embed_u2, require_symplectic

VACUUM_VARIANCE = 0.5


def uncertainty_min_eigenvalue(v):
    """Least eigenvalue of the hermitian matrix V + (i/2) beta."""
    return float(np.linalg.eigvalsh(np.asarray(v, dtype=float) + 0.5j * beta_form())[0])


def validate_variance(v, tol=1e-10):
    """Check symmetry, positivity and V + (i/2) beta >= 0; return V as an array."""
    v = np.asarray(v, dtype=float)
    if v.shape != (4, 4) or not np.all(np.isfinite(v)):
        raise Sp4Error("variance matrix must be a finite 4x4 array")
    scale = max(1.0, float(np.max(np.abs(v))))
    if np.max(np.abs(v - v.T)) > tol * scale:
        raise Sp4Error("variance matrix is not symmetric")
    v = 0.5 * (v + v.T)
    if np.linalg.eigvalsh(v)[0] <= 0:
        raise Sp4Error("variance matrix is not positive definite")
    if uncertainty_min_eigenvalue(v) < -tol * scale:
        raise Sp4Error("variance matrix violates the uncertainty relation V + (i/2) beta >= 0")
    return v


@dataclass(frozen=True, eq=False)
class GaussianState:
    mean: np.ndarray
    variance: np.ndarray

    def __post_init__(self):
        mean = np.array(self.mean, dtype=float).reshape(4)
        var = validate_variance(self.variance)
        mean.flags.writeable = False
        var.flags.writeable = False
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "variance", var)

    def to_dict(self):
        return {"mean": self.mean.tolist(), "variance": self.variance.tolist()}

    @classmethod
    def from_dict(cls, d):
        return cls(d["mean"], d["variance"])


@dataclass(frozen=True, eq=False)
class SqueezingVerdict:
    least_eigenvalue: float
    squeezed: bool
    optimal_passive: np.ndarray
    multiplicity: int = 1

    def to_dict(self):
        return {
            "least_eigenvalue": self.least_eigenvalue,
            "squeezed": self.squeezed,
            "multiplicity": self.multiplicity,
            "optimal_passive": complex_matrix_to_json(self.optimal_passive),
        }


def coherent_state(alpha1, alpha2):
    a1, a2 = complex(alpha1), complex(alpha2)
    mean = np.sqrt(2.0) * np.array([a1.real, a2.real, a1.imag, a2.imag])
    return GaussianState(mean, VACUUM_VARIANCE * np.eye(4))


def _coth_half(beta):
    beta = float(beta)
    if not beta > 0:
        raise Sp4Error("inverse temperature beta must be positive")
    return 1.0 / np.tanh(beta / 2)


def thermal_state(beta):
    """Isotropic two-mode thermal state, beta = hbar omega / kT."""
    return GaussianState(np.zeros(4), VACUUM_VARIANCE * _coth_half(beta) * np.eye(4))


def apply_symplectic(s, state, tol=1e-10):
    """State after U(S): mean -> S mean, V -> S V S^T."""
    s = require_symplectic(s, tol)
    v = s @ state.variance @ s.T
    return GaussianState(s @ state.mean, 0.5 * (v + v.T))


def least_eigenvalue(v):
    return float(np.linalg.eigvalsh(np.asarray(v, dtype=float))[0])


def passive_for_quadrature(w):
    """Unitary u whose embedding has unit 4-vector ``w`` as its first row.

    Then (S(u) V S(u)^T)_11 = w^T V w: every quadrature direction can be
    moved into the leading q1 slot by some U(2) element.
    """
    w = np.asarray(w, dtype=float)
    w = w / np.linalg.norm(w)
    u11 = w[0] - 1j * w[2]
    u12 = w[1] - 1j * w[3]
    return np.array([[u11, u12], [-np.conj(u12), np.conj(u11)]])


def squeezing_verdict(v, threshold_tol=1e-12):
    """U(2)-invariant squeezing test and the passive element exposing it.

    ``optimal_passive`` moves an eigenvector of the least eigenvalue into the
    q1 quadrature. For a degenerate least eigenvalue any eigenvector in the
    eigenspace works; ``multiplicity`` reports the degeneracy. States whose
    least eigenvalue sits within ``threshold_tol`` of 1/2 count as unsqueezed,
    so round-off on the boundary does not flip the verdict.
    """
    v = np.asarray(v, dtype=float)
    w, vecs = np.linalg.eigh(0.5 * (v + v.T))
    ell = float(w[0])
    mult = int(np.sum(np.abs(w - ell) <= 1e-10 * max(1.0, abs(ell))))
    vec = vecs[:, 0]
    if vec[np.argmax(np.abs(vec))] < 0:
        vec = -vec
    return SqueezingVerdict(ell, ell < VACUUM_VARIANCE - threshold_tol, passive_for_quadrature(vec), mult)


def squeezed_coherent(alpha1, alpha2, label):
    """U0(a, b)|alpha>; V = 1/2 S0(2a, 2b)."""
    return apply_symplectic(representative_symplectic(label), coherent_state(alpha1, alpha2))


def squeezed_thermal(beta, label):
    """U0(a, b) rho_0(beta) U0(a, b)^-1; V = 1/2 coth(beta/2) S0(2a, 2b)."""
    return apply_symplectic(representative_symplectic(label), thermal_state(beta))


def thermal_squeeze_threshold(beta):
    """ln coth(beta/2): squeezed_thermal(beta, (a, b)) is squeezed iff a + b exceeds it."""
    _coth_half(beta)
    x = np.exp(-float(beta))
    return float(np.log1p(x) - np.log1p(-x))


def single_mode_wavefunction(q, alpha, a):
    """psi(q; alpha, a) = e^{-a/4} pi^{-1/4} exp[i alpha Im(alpha) - (q e^{-a/2} - sqrt2 alpha)^2 / 2]."""
    q = np.asarray(q, dtype=float)
    alpha = complex(alpha)
    arg = 1j * alpha * alpha.imag - 0.5 * (q * np.exp(-a / 2) - np.sqrt(2.0) * alpha) ** 2
    return np.exp(-a / 4) / np.pi**0.25 * np.exp(arg)


def wavefunction(q1, q2, alpha1, alpha2, label):
    """<q1, q2 | alpha; a, b>, a product of single-mode factors with squeezes a-b and a+b."""
    if not isinstance(label, ClassLabel):
        label = ClassLabel(*label)
    return single_mode_wavefunction(q1, alpha1, label.a - label.b) * single_mode_wavefunction(
        q2, alpha2, label.a + label.b
    )


def rotate_variance(u, v):
    """S(u) V S(u)^T for a 2x2 unitary u."""
    e = embed_u2(u, tol=1e-9)
    return e @ np.asarray(v, dtype=float) @ e.T
