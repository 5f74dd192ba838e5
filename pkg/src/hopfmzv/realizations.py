"""Character realizations and the operator laboratory behind them.

z-side characters (exact Laurent series in the regulator z):

  phi(d^{k_1}y ... d^{k_n}y) = D^{k_1}[ x * D^{k_2}[ x * ... * D^{k_n}[x] ] ]
  with D = d/dz and the atom x(z) = exp(z)/(1 - exp(z)), whose expansion is
  -(1/z + sum_{n>=0} B_{n+1}/(n+1)! z^n) in the B(1) = +1/2 convention.

  psi(d^{k_1}y ... d^{k_n}y) =
      sum over 0 <= l_j <= k_j of  prod_j (-1)^{l_j+1} binom(k_j, l_j)
                                   * prod_j f(L_j z),  L_j = l_1+...+l_j+1,
  with the atom f(u) = exp(u)/(exp(u) - 1) = sum_{m>=0} B_m/m! u^{m-1};
  f(L z) has residue 1/L at z = 0.  psi is the z-realization of the modified
  q-sums below after q = exp(z).  psi_C is the independent low-order oracle:
  the same double sum reorganized through the finite alternating-binomial
  constants C, with psi(w) = sum_m prod_i B_{m_i}/m_i! * C * z^{sum(m) - n}.

Both characters go through a precision planner: a request for exponents
through P on word w generates atoms valid through P + wt(w) + sum(k) + guard
(guard defaults to 4, override with HOPFMZV_GUARD), and retries once with a
doubled guard before surfacing PrecisionExceeded.

t-side (one-variable polylogarithm realization): J divides the m-th
coefficient by m, delta multiplies by m, J o delta = delta o J = Id on power
series with no constant term; li_J iterates them from y(t) = t/(1-t) =
sum_{m>=1} t^m, li_nested is the brute-force nested sum oracle.

q-side: bivariate truncations of t*Q[[t, q]] with the dilation E_q
(t^a q^b -> t^a q^{a+b}), the difference D_q = Id - E_q, and its inverse
P_q (rowwise multiplication by 1/(1 - q^a)), a Rota-Baxter operator of
weight -1.  qz_series sums the modified nested q-value

    sum_{m_1 > ... > m_n > 0} q^{m_1} (1-q^{m_1})^{k_1} ... (1-q^{m_n})^{k_n}

directly; qz_rational expands the closed form
sum_l prod_i [(-1)^{l_i+1} binom(k_i, l_i)] * prod_j q^{L_j}/(q^{L_j} - 1);
qchar_realization builds the same series as D_q^{k_1}[y * D_q^{k_2}[...]](t)
evaluated at t = q.

mero_depth1 / mero_depth2 are the closed-form continuation oracles
  zeta(-l) = -B_{l+1}/(l+1),
  zeta(-a, -b) = (1/2)(1 + delta_0(b)) B_{a+b+1}/(a+b+1)   (a+b odd).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .bernoulli import bernoulli
from .errors import (
    EvenWeight,
    NonzeroConstantTerm,
    NotAdmissible,
    PrecisionExceeded,
    TruncationMismatch,
)
from .series import (
    LaurentSeries,
    constant,
    series_add,
    series_diff,
    series_mul,
    series_scale,
)
from .words import is_admissible, weight, word_to_indices

Fr = Fraction

__all__ = [
    "BivariateSeries",
    "default_guard",
    "eval_t_eq_q",
    "li_J",
    "li_nested",
    "mero_depth1",
    "mero_depth2",
    "mul_bivariate",
    "op_Dq",
    "op_Eq",
    "op_J",
    "op_Pq",
    "op_delta",
    "phi",
    "plan_valid_through",
    "psi",
    "psi_C",
    "psi_factor",
    "qchar_realization",
    "qz_rational",
    "qz_series",
    "x_series",
    "y_bivariate",
    "y_powerseries",
]


# ---------------------------------------------------------------------------
# precision planning
# ---------------------------------------------------------------------------


def default_guard() -> int:
    return int(os.environ.get("HOPFMZV_GUARD", "4"))


def plan_valid_through(P: int, w: str, guard: int | None = None) -> int:
    """Window for the atoms of a character evaluation targeting exponent P.

    Pole order is bounded by wt(w), each derivative costs one exponent, and
    the guard absorbs the slack of products against partially eroded factors.
    """
    g = default_guard() if guard is None else guard
    ks = word_to_indices(w) if w else ()
    return P + weight(w) + sum(ks) + g


# ---------------------------------------------------------------------------
# z-side atoms and characters
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def psi_factor(level: int, valid_through: int) -> LaurentSeries:
    """f(level * z) with f(u) = sum_{m>=0} B_m/m! u^{m-1}; residue 1/level."""
    if level < 1:
        raise ValueError("level must be a positive integer")
    coeffs = [
        bernoulli(m) * Fr(level) ** (m - 1) / factorial(m)
        for m in range(valid_through + 2)
    ]
    return LaurentSeries(-1, tuple(coeffs))


def x_series(valid_through: int) -> LaurentSeries:
    """x(z) = exp(z)/(1 - exp(z)) = -f(z)."""
    return series_scale(psi_factor(1, valid_through), -1)


@lru_cache(maxsize=None)
def _phi_planned(w: str, P: int, guard: int) -> LaurentSeries:
    V = plan_valid_through(P, w, guard)
    if w == "":
        return constant(1, V)
    ks = word_to_indices(w)
    x = x_series(V)
    acc = x
    for _ in range(ks[-1]):
        acc = series_diff(acc)
    for k in reversed(ks[:-1]):
        acc = series_mul(x, acc)
        for _ in range(k):
            acc = series_diff(acc)
    return acc


def phi(w: str, P: int, *, guard: int | None = None) -> LaurentSeries:
    """The polylogarithm-limit character, valid through exponent >= P."""
    if not is_admissible(w):
        raise NotAdmissible(f"phi needs an admissible word, got {w!r}")
    g = default_guard() if guard is None else guard
    s = _phi_planned(w, P, g)
    if s.valid_through < P:  # pragma: no cover - plan is generous at desk scale
        s = _phi_planned(w, P, 2 * g + 4)
        if s.valid_through < P:
            raise PrecisionExceeded(
                f"phi({w!r}) reached z^{s.valid_through} < requested z^{P}"
            )
    return s


@lru_cache(maxsize=None)
def _psi_planned(w: str, P: int, guard: int) -> LaurentSeries:
    V = plan_valid_through(P, w, guard)
    if w == "":
        return constant(1, V)
    ks = word_to_indices(w)
    n = len(ks)
    total: LaurentSeries | None = None

    def descend(j: int, lsum: int, coeff: Fraction, prod: LaurentSeries | None):
        nonlocal total
        if j == n:
            term = series_scale(prod, coeff)
            total = term if total is None else series_add(total, term)
            return
        for l in range(ks[j] + 1):
            c = coeff * comb(ks[j], l) * (-1) ** (l + 1)
            factor = psi_factor(lsum + l + 1, V)
            nxt = factor if prod is None else series_mul(prod, factor)
            descend(j + 1, lsum + l, c, nxt)

    descend(0, 0, Fr(1), None)
    assert total is not None
    return total


def psi(w: str, P: int, *, guard: int | None = None) -> LaurentSeries:
    """The modified q-value character at q = exp(z), valid through >= P."""
    if not is_admissible(w):
        raise NotAdmissible(f"psi needs an admissible word, got {w!r}")
    g = default_guard() if guard is None else guard
    s = _psi_planned(w, P, g)
    if s.valid_through < P:  # pragma: no cover - plan is generous at desk scale
        s = _psi_planned(w, P, 2 * g + 4)
        if s.valid_through < P:
            raise PrecisionExceeded(
                f"psi({w!r}) reached z^{s.valid_through} < requested z^{P}"
            )
    return s


def psi_C(k: tuple[int, ...], m: tuple[int, ...]) -> Fraction:
    """Alternating-binomial constants C^k_m (independent psi oracle).

    C = sum over 0 <= l_j <= k_j of
        prod_i binom(k_i, l_i) (-1)^{l_i + 1} (l_1 + ... + l_i + 1)^{m_i - 1};
    m_i = 0 makes the power an honest rational 1/(l_1+...+l_i+1).
    """
    if len(k) != len(m):
        raise ValueError("index vectors k and m must have equal length")
    n = len(k)
    total = Fr(0)

    def descend(i: int, lsum: int, coeff: Fraction):
        nonlocal total
        if i == n:
            total += coeff
            return
        for l in range(k[i] + 1):
            L = lsum + l + 1
            c = coeff * comb(k[i], l) * (-1) ** (l + 1) * Fr(L) ** (m[i] - 1)
            descend(i + 1, lsum + l, c)

    descend(0, 0, Fr(1))
    return total


# ---------------------------------------------------------------------------
# t-side: power series in t, J and delta, polylogarithms
# ---------------------------------------------------------------------------
# A power series truncated at t^T is a tuple of T+1 Fractions (index = power).


def y_powerseries(T: int) -> tuple[Fraction, ...]:
    """y(t) = t/(1-t) = sum_{m>=1} t^m."""
    return (Fr(0),) + (Fr(1),) * T


def op_J(s: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Divide the m-th coefficient by m (weight-0 Rota-Baxter operator)."""
    if s[0] != 0:
        raise NonzeroConstantTerm("J needs a vanishing constant term")
    return (Fr(0),) + tuple(c / m for m, c in enumerate(s[1:], start=1))


def op_delta(s: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Multiply the m-th coefficient by m (Euler derivation t d/dt)."""
    if s[0] != 0:
        raise NonzeroConstantTerm("delta needs a vanishing constant term")
    return (Fr(0),) + tuple(c * m for m, c in enumerate(s[1:], start=1))


def _ps_mul(a, b):
    n = len(a)
    out = [Fr(0)] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(n - i):
            if b[j]:
                out[i + j] += ai * b[j]
    return tuple(out)


def li_J(k: tuple[int, ...], T: int) -> tuple[Fraction, ...]:
    """One-variable polylogarithm at integer indices of any sign, to t^T.

    J^{k_1}[ y * J^{k_2}[ ... J^{k_n}[y] ] ] with J^{-m} = delta^m.
    """
    if not k:
        raise ValueError("index vector must have length >= 1")
    y = y_powerseries(T)

    def power(s, e):
        op = op_J if e > 0 else op_delta
        for _ in range(abs(e)):
            s = op(s)
        return s

    acc = power(y, k[-1])
    for e in reversed(k[:-1]):
        acc = power(_ps_mul(y, acc), e)
    return acc


def li_nested(k: tuple[int, ...], T: int) -> tuple[Fraction, ...]:
    """Oracle: sum_{m_1 > ... > m_n > 0} t^{m_1} / prod m_i^{k_i}."""
    if not k:
        raise ValueError("index vector must have length >= 1")
    n = len(k)
    layer = [Fr(0)] * (T + 1)  # layer[m] = inner sum with m_j = m
    for m in range(1, T + 1):
        layer[m] = Fr(1) / Fr(m) ** k[n - 1]
    for j in range(n - 2, -1, -1):
        partial = [Fr(0)] * (T + 1)
        run = Fr(0)
        for m in range(1, T + 1):
            partial[m] = run  # sum of layer over indices < m
            run += layer[m]
        layer = [
            Fr(0) if m == 0 else partial[m] / Fr(m) ** k[j] for m in range(T + 1)
        ]
    return tuple(layer)


# ---------------------------------------------------------------------------
# q-side: bivariate truncations of t Q[[t, q]]
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BivariateSeries:
    """Element of t*Q[[t, q]]: rows[a-1][b] = coefficient of t^a q^b."""

    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def t_truncation(self) -> int:
        return len(self.rows)

    @property
    def q_truncation(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else 0


def y_bivariate(A: int, Q: int) -> BivariateSeries:
    """y(t) = sum_{m=1}^{A} t^m (no q-dependence)."""
    row = (Fr(1),) + (Fr(0),) * Q
    return BivariateSeries(tuple(row for _ in range(A)))


def op_Eq(s: BivariateSeries) -> BivariateSeries:
    """Dilation t -> qt: shifts row a up by a powers of q."""
    Q = s.q_truncation
    rows = []
    for a, row in enumerate(s.rows, start=1):
        shifted = (Fr(0),) * min(a, Q + 1) + row[: max(Q + 1 - a, 0)]
        rows.append(shifted)
    return BivariateSeries(tuple(rows))


def op_Dq(s: BivariateSeries) -> BivariateSeries:
    """q-difference Id - E_q."""
    e = op_Eq(s)
    return BivariateSeries(
        tuple(
            tuple(c - ec for c, ec in zip(row, erow))
            for row, erow in zip(s.rows, e.rows)
        )
    )


def op_Pq(s: BivariateSeries) -> BivariateSeries:
    """Inverse of D_q: row a multiplies by 1/(1 - q^a) = sum_j q^{aj}."""
    Q = s.q_truncation
    rows = []
    for a, row in enumerate(s.rows, start=1):
        out = list(row)
        for b in range(a, Q + 1):
            out[b] += out[b - a]  # out, not row: accumulates all q^{aj}
        rows.append(tuple(out))
    return BivariateSeries(tuple(rows))


def mul_bivariate(s1: BivariateSeries, s2: BivariateSeries) -> BivariateSeries:
    A = min(s1.t_truncation, s2.t_truncation)
    Q = min(s1.q_truncation, s2.q_truncation)
    rows = [[Fr(0)] * (Q + 1) for _ in range(A)]
    for a1 in range(1, A):  # a1 + a2 <= A with a2 >= 1
        r1 = s1.rows[a1 - 1]
        for a2 in range(1, A - a1 + 1):
            r2 = s2.rows[a2 - 1]
            target = rows[a1 + a2 - 1]
            for b1 in range(Q + 1):
                c1 = r1[b1]
                if not c1:
                    continue
                for b2 in range(Q + 1 - b1):
                    if r2[b2]:
                        target[b1 + b2] += c1 * r2[b2]
    return BivariateSeries(tuple(tuple(r) for r in rows))


def eval_t_eq_q(s: BivariateSeries) -> tuple[Fraction, ...]:
    """Substitute t = q; needs t-truncation >= q-truncation."""
    Q = s.q_truncation
    if s.t_truncation < Q:
        raise TruncationMismatch(
            f"t-truncation {s.t_truncation} < q-truncation {Q}"
        )
    out = [Fr(0)] * (Q + 1)
    for a, row in enumerate(s.rows, start=1):
        for b, c in enumerate(row):
            if c and a + b <= Q:
                out[a + b] += c
    return tuple(out)


def qchar_realization(k: tuple[int, ...], Q: int) -> tuple[Fraction, ...]:
    """D_q^{k_1}[ y * D_q^{k_2}[ ... ] ](t) at t = q, to q^Q."""
    if not k:
        raise ValueError("index vector must have length >= 1")
    y = y_bivariate(Q, Q)

    def dq_power(s, e):
        for _ in range(e):
            s = op_Dq(s)
        return s

    acc = dq_power(y, k[-1])
    for e in reversed(k[:-1]):
        acc = dq_power(mul_bivariate(y, acc), e)
    return eval_t_eq_q(acc)


def _qpoly_mul(a, b, Q):
    out = [Fr(0)] * (Q + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(min(len(b), Q + 1 - i)):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def qz_series(k: tuple[int, ...], Q: int) -> tuple[Fraction, ...]:
    """Modified nested q-sum at arguments (-k_1, ..., -k_n), to q^Q.

    sum_{m_1 > ... > m_n > 0} q^{m_1} prod_i (1 - q^{m_i})^{k_i};
    only the outermost index carries the factor q^{m_1}.
    """
    if not k:
        raise ValueError("index vector must have length >= 1")
    n = len(k)

    def binom_poly(m: int, e: int):
        # (1 - q^m)^e truncated at Q
        out = [Fr(0)] * (Q + 1)
        for i in range(e + 1):
            if i * m > Q:
                break
            out[i * m] = Fr(comb(e, i) * (-1) ** i)
        return out

    # layer[m] = sum over admissible (m_j, ..., m_n) with m_j = m
    layer = [binom_poly(m, k[n - 1]) if m else [Fr(0)] * (Q + 1) for m in range(Q + 1)]
    for j in range(n - 2, -1, -1):
        partial = [[Fr(0)] * (Q + 1) for _ in range(Q + 1)]
        run = [Fr(0)] * (Q + 1)
        for m in range(1, Q + 1):
            partial[m] = list(run)
            run = [x + y for x, y in zip(run, layer[m])]
        layer = [
            _qpoly_mul(binom_poly(m, k[j]), partial[m], Q) if m else [Fr(0)] * (Q + 1)
            for m in range(Q + 1)
        ]
    total = [Fr(0)] * (Q + 1)
    for m in range(1, Q + 1):
        row = layer[m]
        for b in range(Q + 1 - m):
            if row[b]:
                total[m + b] += row[b]  # the outer factor q^{m_1}
    return tuple(total)


def qz_rational(k: tuple[int, ...], Q: int) -> tuple[Fraction, ...]:
    """Closed-form expansion of the same value, to q^Q.

    sum over 0 <= l_i <= k_i of prod_i [(-1)^{l_i+1} binom(k_i, l_i)]
    * prod_j q^{L_j}/(q^{L_j} - 1) with L_j = l_1 + ... + l_j + 1; each
    factor q^L/(q^L - 1) = -(q^L + q^{2L} + ...).
    """
    if not k:
        raise ValueError("index vector must have length >= 1")
    n = len(k)

    def geom_factor(L: int):
        out = [Fr(0)] * (Q + 1)
        for i in range(L, Q + 1, L):
            out[i] = Fr(-1)
        return out

    total = [Fr(0)] * (Q + 1)

    def descend(j: int, lsum: int, coeff: Fraction, prod):
        nonlocal total
        if j == n:
            for i, c in enumerate(prod):
                if c:
                    total[i] += coeff * c
            return
        for l in range(k[j] + 1):
            c = coeff * comb(k[j], l) * (-1) ** (l + 1)
            factor = geom_factor(lsum + l + 1)
            nxt = factor if prod is None else _qpoly_mul(prod, factor, Q)
            descend(j + 1, lsum + l, c, nxt)

    descend(0, 0, Fr(1), None)
    return tuple(total)


# ---------------------------------------------------------------------------
# closed-form continuation oracles (depth 1 and 2)
# ---------------------------------------------------------------------------


def mero_depth1(k: int) -> Fraction:
    """zeta(-k) = -B_{k+1}/(k+1)."""
    if k < 0:
        raise ValueError("depth-1 oracle takes k >= 0")
    return -bernoulli(k + 1) / (k + 1)


def mero_depth2(a: int, b: int) -> Fraction:
    """zeta(-a, -b) = (1/2)(1 + delta_0(b)) B_{a+b+1}/(a+b+1), a+b odd."""
    if a < 0 or b < 0:
        raise ValueError("depth-2 oracle takes a, b >= 0")
    if (a + b) % 2 == 0:
        raise EvenWeight(f"(-{a}, -{b}) lies in the singular set (a+b even)")
    scale = Fr(1, 2) * (2 if b == 0 else 1)
    return scale * bernoulli(a + b + 1) / (a + b + 1)
