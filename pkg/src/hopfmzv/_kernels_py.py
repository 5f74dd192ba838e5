"""Pure-Python twin of the compiled coefficient kernels.

Same algorithm, same object-level arithmetic as _kernels.pyx; series.py picks
whichever imports.  Zero coefficients are skipped (exact zeros are common in
these series: odd Bernoulli tails, parity gaps), and integer zeros are allowed
in the output — the series layer normalizes every coefficient to Fraction.
"""

from __future__ import annotations

BACKEND = "pure-python"


def convolve(a, b, n):
    """First n coefficients of the Cauchy product of coefficient vectors."""
    out = [0] * n
    la = len(a)
    lb = len(b)
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
                out[i + j] += ai * bj
    return out
