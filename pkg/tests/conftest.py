import itertools
import sys

import numpy as np
import pytest

from sp4squeeze.symplectic import GENERATOR_NAMES


def levi_civita(r, s, t):
    return int(np.linalg.det(np.eye(3)[[r, s, t]])) if len({r, s, t}) == 3 else 0


def structure_constants(x, y):
    """Coefficients c with [X, Y] = sum_Z c[Z] Z, written out from the
    operator commutation relations of the Sp(4,R) generators."""
    out = {n: 0j for n in GENERATOR_NAMES}
    fx, rx = x[0], (int(x[1]) - 1 if len(x) > 1 else None)
    fy, ry = y[0], (int(y[1]) - 1 if len(y) > 1 else None)
    if fx == "Q" and fy == "Q":
        return out
    if fx == "Q" or fy == "Q":
        sign = 1 if fx == "Q" else -1
        other, r = (fy, ry) if fx == "Q" else (fx, rx)
        # [Q, K] = -i L, [Q, L] = i K, [Q, J] = 0
        if other == "K":
            out[f"L{r + 1}"] = sign * -1j
        elif other == "L":
            out[f"K{r + 1}"] = sign * 1j
        return out
    for t in range(3):
        eps = levi_civita(rx, ry, t)
        if fx == "J" and fy == "J":
            out[f"J{t + 1}"] += 1j * eps
        elif fx == "J" and fy in "KL":
            out[f"{fy}{t + 1}"] += 1j * eps
        elif fy == "J" and fx in "KL":
            out[f"{fx}{t + 1}"] += -1j * levi_civita(ry, rx, t)
        elif fx == fy:  # KK or LL
            out[f"J{t + 1}"] += -1j * eps
    if {fx, fy} == {"K", "L"} and rx == ry:
        out["Q"] = 1j if fx == "K" else -1j
    return out


def all_pairs():
    return list(itertools.combinations(GENERATOR_NAMES, 2))


class Fock:
    """Two truncated oscillators; commutators are exact on states with
    total photon number well below the cutoff."""

    def __init__(self, cutoff=10):
        n = cutoff
        a = np.diag(np.sqrt(np.arange(1, n)), 1).astype(complex)
        eye = np.eye(n)
        self.a1 = np.kron(a, eye)
        self.a2 = np.kron(eye, a)
        self.cutoff = n
        low = [i * n + j for i in range(n) for j in range(n) if i + j <= n - 4]
        self.low = np.array(low)

    def d(self, m):
        return m.conj().T

    def generators(self):
        a1, a2, d = self.a1, self.a2, self.d
        one = np.eye(a1.shape[0])
        return {
            "Q": 0.5 * (d(a1) @ a1 + d(a2) @ a2 + one),
            "J1": 0.5 * (d(a1) @ a2 + d(a2) @ a1),
            "J2": 0.5j * (d(a2) @ a1 - d(a1) @ a2),
            "J3": 0.5 * (d(a1) @ a1 - d(a2) @ a2),
            "K1": 0.25 * (d(a1) @ d(a1) + a1 @ a1 - d(a2) @ d(a2) - a2 @ a2),
            "K2": -0.25j * (d(a1) @ d(a1) - a1 @ a1 + d(a2) @ d(a2) - a2 @ a2),
            "K3": -0.5 * (d(a1) @ d(a2) + a1 @ a2),
            "L1": 0.25j * (d(a1) @ d(a1) - a1 @ a1 - d(a2) @ d(a2) + a2 @ a2),
            "L2": 0.25 * (d(a1) @ d(a1) + a1 @ a1 + d(a2) @ d(a2) + a2 @ a2),
            "L3": -0.5j * (d(a1) @ d(a2) - a1 @ a2),
        }

    def quadratures(self):
        a1, a2, d = self.a1, self.a2, self.d
        s = np.sqrt(2.0)
        return [(a1 + d(a1)) / s, (a2 + d(a2)) / s, (a1 - d(a1)) / (1j * s), (a2 - d(a2)) / (1j * s)]

    def restrict(self, m):
        return m[np.ix_(self.low, self.low)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def fock():
    return Fock(10)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key, _, _ in mod.CRITERIA:
        if key in mod.RESULTS:
            terminalreporter.write_line(mod.RESULTS[key])
