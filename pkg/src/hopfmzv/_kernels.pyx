# cython: language_level=3
"""Compiled coefficient kernels.

The coefficients stay Python objects (exact rationals), so results are
bit-identical to the pure twin in _kernels_py.py; compilation only removes
interpreter loop overhead from the innermost Cauchy product.
"""

BACKEND = "compiled"


def convolve(a, b, Py_ssize_t n):
    """First n coefficients of the Cauchy product of coefficient vectors."""
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t i, j, jmax
    out = [0] * n
    if la > n:
        la = n
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        jmax = n - i
        if jmax > lb:
            jmax = lb
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out
