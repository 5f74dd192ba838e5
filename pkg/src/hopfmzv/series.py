"""Truncated Laurent series over exact rationals, with validity windows.

A series is a pair (ord, coeffs): coeffs[i] is the coefficient of
z**(ord + i).  Exponents below ord are known to vanish; exponents above

    valid_through = ord + len(coeffs) - 1

are *unknown*, and asking for one raises PrecisionExceeded instead of
returning a silently wrong zero.  Derivative chains eat one exponent of
validity per step and products intersect windows, so every operation here
computes the exact exponent range on which its output is trustworthy:

    add:  valid_through = min of the operands'
    mul:  ord = a.ord + b.ord,
          valid_through = min(a.valid_through + b.ord, b.valid_through + a.ord)
    diff: everything shifts down by one

Negative ord houses pole terms; pole_part / regular_part split a series into
the two images of the complementary idempotent projectors used by the
Birkhoff decomposition (pole_part is a Rota-Baxter operator of weight -1 on
the window, which the test suite checks).

Equality is deliberately not structural: two series are compared on the
intersection of their validity windows, with a minimum overlap supplied by
the caller (equal_on_window).  Tests never compare unknown regions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PrecisionExceeded

try:  # compiled kernel if the optional extension built, else the pure twin
    from . import _kernels as _kern  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    from . import _kernels_py as _kern

KERNEL_BACKEND = _kern.BACKEND

Fr = Fraction
_ZERO = Fr(0)

__all__ = [
    "KERNEL_BACKEND",
    "LaurentSeries",
    "coefficient",
    "constant",
    "equal_on_window",
    "monomial",
    "pole_part",
    "regular_part",
    "series_add",
    "series_diff",
    "series_from_json",
    "series_mul",
    "series_scale",
    "series_slice",
    "series_to_json",
    "zero_series",
]


@dataclass(frozen=True, eq=False)
class LaurentSeries:
    """ord + exact coefficient window; immutable and safe to share."""

    ord: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "coeffs",
            tuple(c if isinstance(c, Fraction) else Fr(c) for c in self.coeffs),
        )

    @property
    def valid_through(self) -> int:
        return self.ord + len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        return coefficient(self, n)

    # -- convenience operator forms (the named functions below are the API) --
    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, series_scale(other, -1))

    def __neg__(self):
        return series_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        return f"LaurentSeries(ord={self.ord}, coeffs={self.coeffs!r})"


def zero_series(valid_through: int) -> LaurentSeries:
    """The zero series, known to vanish through the given exponent."""
    return LaurentSeries(valid_through + 1, ())


def monomial(exponent: int, coeff, valid_through: int) -> LaurentSeries:
    if valid_through < exponent:
        raise ValueError("window ends below the monomial's exponent")
    pad = valid_through - exponent
    return LaurentSeries(exponent, (Fr(coeff),) + (_ZERO,) * pad)


def constant(value, valid_through: int) -> LaurentSeries:
    return monomial(0, value, valid_through)


def _get(a: LaurentSeries, n: int) -> Fraction:
    """Coefficient of z^n assuming n <= a.valid_through."""
    if n < a.ord:
        return _ZERO
    return a.coeffs[n - a.ord]


def coefficient(a: LaurentSeries, n: int) -> Fraction:
    """Coefficient of z^n; PrecisionExceeded beyond the validity horizon."""
    if n > a.valid_through:
        raise PrecisionExceeded(
            f"coefficient of z^{n} requested but series is only valid "
            f"through z^{a.valid_through}"
        )
    return _get(a, n)


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    vt = min(a.valid_through, b.valid_through)
    lo = min(a.ord, b.ord)
    if vt < lo:
        return LaurentSeries(vt + 1, ())
    return LaurentSeries(lo, tuple(_get(a, n) + _get(b, n) for n in range(lo, vt + 1)))


def series_scale(a: LaurentSeries, c) -> LaurentSeries:
    c = Fr(c)
    if c == 0:
        return LaurentSeries(a.ord, (_ZERO,) * len(a.coeffs))
    return LaurentSeries(a.ord, tuple(x * c for x in a.coeffs))


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    ord_ = a.ord + b.ord
    vt = min(a.valid_through + b.ord, b.valid_through + a.ord)
    n = vt - ord_ + 1
    if n <= 0:
        return LaurentSeries(vt + 1, ())
    return LaurentSeries(ord_, tuple(_kern.convolve(a.coeffs, b.coeffs, n)))


def series_diff(a: LaurentSeries) -> LaurentSeries:
    """Termwise d/dz; costs one exponent of validity."""
    return LaurentSeries(
        a.ord - 1, tuple((a.ord + i) * c for i, c in enumerate(a.coeffs))
    )


def pole_part(a: LaurentSeries) -> LaurentSeries:
    """Strictly negative exponents of a; idempotent."""
    return LaurentSeries(
        a.ord,
        tuple(c if a.ord + i < 0 else _ZERO for i, c in enumerate(a.coeffs)),
    )


def regular_part(a: LaurentSeries) -> LaurentSeries:
    """a - pole_part(a): exponents >= 0 only."""
    return LaurentSeries(
        a.ord,
        tuple(c if a.ord + i >= 0 else _ZERO for i, c in enumerate(a.coeffs)),
    )


def series_slice(a: LaurentSeries, valid_through: int) -> LaurentSeries:
    """Shrink the window (never widens); used for deterministic printing."""
    if valid_through > a.valid_through:
        raise PrecisionExceeded(
            f"cannot widen window to z^{valid_through}; series valid "
            f"through z^{a.valid_through}"
        )
    if valid_through < a.ord:
        return LaurentSeries(valid_through + 1, ())
    return LaurentSeries(a.ord, a.coeffs[: valid_through - a.ord + 1])


def equal_on_window(a: LaurentSeries, b: LaurentSeries, min_overlap: int = 1) -> bool:
    """Compare all coefficients on the intersection of validity windows.

    The window is [min(ords), min(valid_throughs)] — exponents below either
    ord are known zeros, so everything in that range is known for both sides.
    If the window holds fewer than min_overlap exponents the comparison would
    be vacuous, which is reported as PrecisionExceeded rather than True.
    """
    hi = min(a.valid_through, b.valid_through)
    lo = min(a.ord, b.ord)
    if hi - lo + 1 < min_overlap:
        raise PrecisionExceeded(
            f"only {max(hi - lo + 1, 0)} comparable exponents, "
            f"{min_overlap} required"
        )
    return all(_get(a, n) == _get(b, n) for n in range(lo, hi + 1))


# ---------------------------------------------------------------------------
# JSON form: {"ord": int, "valid_through": int, "coeffs": ["p/q", ...]}
# ---------------------------------------------------------------------------


def series_to_json(a: LaurentSeries) -> dict:
    return {
        "ord": a.ord,
        "valid_through": a.valid_through,
        "coeffs": [str(c) for c in a.coeffs],
    }


def series_from_json(obj: dict) -> LaurentSeries:
    coeffs = tuple(Fr(c) for c in obj["coeffs"])
    s = LaurentSeries(int(obj["ord"]), coeffs)
    if s.valid_through != int(obj["valid_through"]):
        raise ValueError(
            "inconsistent series JSON: valid_through must equal "
            "ord + len(coeffs) - 1"
        )
    return s
