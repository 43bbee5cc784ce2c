"""Pure-Python (numpy) versions of the compiled kernels in ``_kernels.pyx``.

Both implement the same scaling-and-squaring Pade(13) algorithm so results
agree to rounding. This module is used when the extension is not built or
when ``SP4SQUEEZE_PURE_PYTHON=1`` is set.
"""
import math

import numpy as np

# Pade(13) numerator coefficients and the 1-norm bound theta_13 (Higham 2005).
PADE13 = (
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
)
THETA13 = 5.371920351148152


def squaring_count(norm1):
    if norm1 <= THETA13:
        return 0
    return max(0, int(math.ceil(math.log2(norm1 / THETA13))))


def expm_pade(m):
    """Matrix exponential of a small square real matrix by Pade(13)."""
    a = np.array(m, dtype=float)
    n = a.shape[0]
    s = squaring_count(np.abs(a).sum(axis=0).max())
    if s:
        a = a / 2.0**s
    b = PADE13
    ident = np.eye(n)
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a4 @ a2
    u = a @ (a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident)
    v = a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident
    r = np.linalg.solve(v - u, v + u)
    for _ in range(s):
        r = r @ r
    return r


def expm_pade_many(stack):
    stack = np.asarray(stack, dtype=float)
    out = np.empty_like(stack)
    for i in range(stack.shape[0]):
        out[i] = expm_pade(stack[i])
    return out
