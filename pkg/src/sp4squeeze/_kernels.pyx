# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled 4x4 kernels: scaling-and-squaring Pade(13) matrix exponential."""
import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, ceil, log2, ldexp

cnp.import_array()

cdef double THETA13 = 5.371920351148152
cdef double[14] B13 = [
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0, 129060195264000.0, 10559470521600.0,
    670442572800.0, 33522128640.0, 1323241920.0, 40840800.0,
    960960.0, 16380.0, 182.0, 1.0,
]


cdef inline void _mul(const double* x, const double* y, double* out) noexcept nogil:
    cdef int i, j, k
    cdef double acc
    for i in range(4):
        for j in range(4):
            acc = 0.0
            for k in range(4):
                acc += x[4 * i + k] * y[4 * k + j]
            out[4 * i + j] = acc


cdef int _solve(double* lhs, double* rhs) noexcept nogil:
    """Solve lhs @ X = rhs in place (rhs <- X); LU with partial pivoting."""
    cdef int col, row, piv, j
    cdef double best, tmp, f
    for col in range(4):
        piv = col
        best = fabs(lhs[4 * col + col])
        for row in range(col + 1, 4):
            if fabs(lhs[4 * row + col]) > best:
                best = fabs(lhs[4 * row + col])
                piv = row
        if best == 0.0:
            return -1
        if piv != col:
            for j in range(4):
                tmp = lhs[4 * col + j]
                lhs[4 * col + j] = lhs[4 * piv + j]
                lhs[4 * piv + j] = tmp
                tmp = rhs[4 * col + j]
                rhs[4 * col + j] = rhs[4 * piv + j]
                rhs[4 * piv + j] = tmp
        for row in range(col + 1, 4):
            f = lhs[4 * row + col] / lhs[4 * col + col]
            if f != 0.0:
                for j in range(col, 4):
                    lhs[4 * row + j] -= f * lhs[4 * col + j]
                for j in range(4):
                    rhs[4 * row + j] -= f * rhs[4 * col + j]
    for col in range(3, -1, -1):
        for j in range(4):
            tmp = rhs[4 * col + j]
            for row in range(col + 1, 4):
                tmp -= lhs[4 * col + row] * rhs[4 * row + j]
            rhs[4 * col + j] = tmp / lhs[4 * col + col]
    return 0


cdef int _expm4(const double* m, double* out) noexcept nogil:
    cdef double a[16]
    cdef double a2[16]
    cdef double a4[16]
    cdef double a6[16]
    cdef double t1[16]
    cdef double t2[16]
    cdef double u[16]
    cdef double v[16]
    cdef double lhs[16]
    cdef double norm1 = 0.0, colsum
    cdef int i, j, s = 0
    cdef double scale, eye

    for j in range(4):
        colsum = 0.0
        for i in range(4):
            colsum += fabs(m[4 * i + j])
        if colsum > norm1:
            norm1 = colsum
    if norm1 > THETA13:
        s = <int>ceil(log2(norm1 / THETA13))
        if s < 0:
            s = 0
    scale = ldexp(1.0, -s)
    for i in range(16):
        a[i] = m[i] * scale

    _mul(a, a, a2)
    _mul(a2, a2, a4)
    _mul(a4, a2, a6)

    # u = a @ (a6 @ (b13 a6 + b11 a4 + b9 a2) + b7 a6 + b5 a4 + b3 a2 + b1 I)
    for i in range(16):
        t1[i] = B13[13] * a6[i] + B13[11] * a4[i] + B13[9] * a2[i]
    _mul(a6, t1, t2)
    for i in range(16):
        eye = 1.0 if i % 5 == 0 else 0.0
        t2[i] += B13[7] * a6[i] + B13[5] * a4[i] + B13[3] * a2[i] + B13[1] * eye
    _mul(a, t2, u)

    # v = a6 @ (b12 a6 + b10 a4 + b8 a2) + b6 a6 + b4 a4 + b2 a2 + b0 I
    for i in range(16):
        t1[i] = B13[12] * a6[i] + B13[10] * a4[i] + B13[8] * a2[i]
    _mul(a6, t1, v)
    for i in range(16):
        eye = 1.0 if i % 5 == 0 else 0.0
        v[i] += B13[6] * a6[i] + B13[4] * a4[i] + B13[2] * a2[i] + B13[0] * eye

    for i in range(16):
        lhs[i] = v[i] - u[i]
        out[i] = v[i] + u[i]
    if _solve(lhs, out) != 0:
        return -1
    for j in range(s):
        _mul(out, out, t1)
        for i in range(16):
            out[i] = t1[i]
    return 0


def expm_pade(m):
    """Matrix exponential of a real 4x4 matrix."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] src = np.ascontiguousarray(m, dtype=np.float64)
    if src.shape[0] != 4 or src.shape[1] != 4:
        raise ValueError("compiled expm kernel requires a 4x4 matrix")
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] res = np.empty((4, 4), dtype=np.float64)
    cdef int rc
    with nogil:
        rc = _expm4(&src[0, 0], &res[0, 0])
    if rc != 0:
        raise np.linalg.LinAlgError("singular Pade denominator")
    return res


def expm_pade_many(stack):
    """Matrix exponentials of an (n, 4, 4) stack."""
    cdef cnp.ndarray[cnp.float64_t, ndim=3, mode="c"] src = np.ascontiguousarray(stack, dtype=np.float64)
    if src.shape[1] != 4 or src.shape[2] != 4:
        raise ValueError("compiled expm kernel requires 4x4 matrices")
    cdef Py_ssize_t n = src.shape[0], k
    cdef cnp.ndarray[cnp.float64_t, ndim=3, mode="c"] res = np.empty((n, 4, 4), dtype=np.float64)
    cdef int bad = 0
    with nogil:
        for k in range(n):
            if _expm4(&src[k, 0, 0], &res[k, 0, 0]) != 0:
                bad = 1
    if bad:
        raise np.linalg.LinAlgError("singular Pade denominator")
    return res
