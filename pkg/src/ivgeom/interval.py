"""Closed floating-point intervals with outward-rounded arithmetic.

An ``Interval`` stands for the set of real numbers between its two binary64
endpoints.  Every operation here satisfies the containment property: the
result interval is a superset of the exact real-arithmetic image of its
operands.  That single guarantee is what lets callers treat "the result
excludes zero" as a proof.

Endpoints are directed-rounded.  Each endpoint is first computed in the
default round-to-nearest mode; an error-free transformation (2Sum for
sums, Dekker/Veltkamp 2Prod for products, an exact rational comparison for
quotients and as the general fallback) then tells us on which side of the
float the exact value lies, and the endpoint is stepped one ulp outward
only when it has to be.  Exact operations therefore stay exact, and every
endpoint is the correctly rounded one, which is within the advertised
1-ulp budget.

Conventions:

* the empty interval has the single canonical form ``[+inf, -inf]``;
  constructing any ``lo > hi`` pair normalizes to it
* endpoint zeros are normalized to ``+0.0``
* endpoint products ``0 * inf`` count as ``0`` (a zero factor means every
  selectable real product is zero, so no infinite contribution is needed)
* NaN endpoints are rejected outright
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

_INF = math.inf
_MAX = sys.float_info.max

# Veltkamp splitter for binary64 (2**27 + 1); splitting overflows for
# magnitudes above ~2**996 and the 2Prod error term degrades near the
# subnormal range, hence the fast-path guards in _prod_bounds.
_SPLITTER = 134217729.0
_PROD_FAST_LO = 1e-290
_PROD_FAST_HI = 1e292


@dataclass(frozen=True, slots=True)
class Interval:
    """A closed interval of reals with binary64 endpoints.

    ``lo > hi`` inputs normalize to the canonical empty interval, and a
    same-signed infinite singleton (``[inf, inf]``) is empty as well: it
    contains no real number.
    """

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo = float(self.lo)
        hi = float(self.hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("interval endpoints must not be NaN")
        if lo > hi or lo == _INF or hi == -_INF:
            lo, hi = _INF, -_INF  # canonical empty
        else:
            if lo == 0.0:
                lo = 0.0
            if hi == 0.0:
                hi = 0.0
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def singleton(value: float) -> "Interval":
        v = float(value)
        if math.isinf(v):
            raise ValueError("singleton endpoints must be finite")
        return Interval(v, v)

    @staticmethod
    def from_decimal(text: str) -> "Interval":
        """Parse one decimal literal into the tightest enclosing interval.

        The literal names a real number that binary64 may not represent;
        the lower endpoint rounds toward -inf and the upper toward +inf,
        so the interval always contains the intended real.
        """
        lo = _decimal_to_float(text, up=False)
        hi = _decimal_to_float(text, up=True)
        return Interval(lo, hi)

    @staticmethod
    def from_decimal_pair(lo_text: str, hi_text: str) -> "Interval":
        """Parse ``[lo,hi]`` endpoint literals, rounding each outward."""
        lo = -_INF if _is_neg_inf(lo_text) else _decimal_to_float(lo_text, up=False)
        hi = _INF if _is_pos_inf(hi_text) else _decimal_to_float(hi_text, up=True)
        return Interval(lo, hi)

    # -- queries -----------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi and math.isfinite(self.lo)

    def contains(self, value: float | Fraction) -> bool:
        # float/Fraction comparisons are exact in Python
        return self.lo <= value <= self.hi

    def excludes_zero(self) -> bool:
        return self.is_empty or self.lo > 0.0 or self.hi < 0.0

    @property
    def is_zero(self) -> bool:
        return self.lo == 0.0 and self.hi == 0.0

    def width(self) -> float:
        """hi - lo (0 for empty; may overflow to inf)."""
        if self.is_empty:
            return 0.0
        return self.hi - self.lo

    def mig(self) -> float:
        """Mignitude: min |v| over the interval; > 0 proves 0 is excluded."""
        if self.is_empty:
            raise ValueError("mignitude of the empty interval")
        if self.lo <= 0.0 <= self.hi:
            return 0.0
        return min(abs(self.lo), abs(self.hi))

    # -- operator sugar ------------------------------------------------------

    def __add__(self, other: "Interval") -> "Interval":
        return add(self, other)

    def __sub__(self, other: "Interval") -> "Interval":
        return sub(self, other)

    def __mul__(self, other: "Interval") -> "Interval":
        return mul(self, other)

    def __neg__(self) -> "Interval":
        return neg(self)

    def __str__(self) -> str:
        if self.is_empty:
            return "empty"
        return f"[{self.lo!r}, {self.hi!r}]"


EMPTY = Interval(_INF, -_INF)
ZERO = Interval(0.0, 0.0)
ONE = Interval(1.0, 1.0)
WHOLE = Interval(-_INF, _INF)


# -- directed-rounding endpoint helpers --------------------------------------


def _two_sum(a: float, b: float) -> float:
    """Rounding error of fl(a+b) for finite a, b with finite sum."""
    s = a + b
    bv = s - a
    av = s - bv
    return (a - av) + (b - bv)


def _down_sum(x: float, y: float) -> float:
    """Greatest float <= the exact x + y (x, y never an inf/-inf pair)."""
    if math.isinf(x) or math.isinf(y):
        return x + y
    s = x + y
    if math.isinf(s):
        # overflowed in round-to-nearest: the exact sum is beyond the max
        # finite float, so the best finite lower bound is that max float
        return _MAX if s > 0.0 else -_INF
    if _two_sum(x, y) < 0.0:
        return math.nextafter(s, -_INF)
    return s


def _up_sum(x: float, y: float) -> float:
    if math.isinf(x) or math.isinf(y):
        return x + y
    s = x + y
    if math.isinf(s):
        return _INF if s > 0.0 else -_MAX
    if _two_sum(x, y) > 0.0:
        return math.nextafter(s, _INF)
    return s


def _two_product_err(x: float, y: float, p: float) -> float:
    xc = _SPLITTER * x
    xh = xc - (xc - x)
    xl = x - xh
    yc = _SPLITTER * y
    yh = yc - (yc - y)
    yl = y - yh
    e1 = p - xh * yh
    e2 = e1 - xl * yh
    e3 = e2 - xh * yl
    return xl * yl - e3


def _prod_direction(x: float, y: float, p: float) -> int:
    """Sign of (exact x*y - p): 0 when fl(x*y) was exact."""
    ax, ay, ap = abs(x), abs(y), abs(p)
    if _PROD_FAST_LO < ap and ax < _PROD_FAST_HI and ay < _PROD_FAST_HI:
        err = _two_product_err(x, y, p)
        return 0 if err == 0.0 else (1 if err > 0.0 else -1)
    exact = Fraction(x) * Fraction(y)
    pf = Fraction(p)
    if exact == pf:
        return 0
    return 1 if exact > pf else -1


def _down_prod(x: float, y: float) -> float:
    if x == 0.0 or y == 0.0:
        return 0.0  # covers the 0 * inf endpoint convention
    if math.isinf(x) or math.isinf(y):
        return _INF if (x > 0.0) == (y > 0.0) else -_INF
    p = x * y
    if math.isinf(p):
        return _MAX if p > 0.0 else -_INF
    d = _prod_direction(x, y, p)
    if d < 0:
        return math.nextafter(p, -_INF)
    return p


def _up_prod(x: float, y: float) -> float:
    if x == 0.0 or y == 0.0:
        return 0.0
    if math.isinf(x) or math.isinf(y):
        return _INF if (x > 0.0) == (y > 0.0) else -_INF
    p = x * y
    if math.isinf(p):
        return _INF if p > 0.0 else -_MAX
    d = _prod_direction(x, y, p)
    if d > 0:
        return math.nextafter(p, _INF)
    return p


def _down_quot(x: float, y: float) -> float:
    """Directed x / y for y != 0, with inf endpoints as limits."""
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return _INF if (x > 0.0) == (y > 0.0) else -_INF
    if math.isinf(y):
        return 0.0
    q = x / y
    if math.isinf(q):
        return _MAX if q > 0.0 else -_INF
    exact = Fraction(x) / Fraction(y)
    if exact < Fraction(q):
        return math.nextafter(q, -_INF)
    return q


def _up_quot(x: float, y: float) -> float:
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return _INF if (x > 0.0) == (y > 0.0) else -_INF
    if math.isinf(y):
        return 0.0
    q = x / y
    if math.isinf(q):
        return _INF if q > 0.0 else -_MAX
    exact = Fraction(x) / Fraction(y)
    if exact > Fraction(q):
        return math.nextafter(q, _INF)
    return q


# -- interval operations ------------------------------------------------------


def add(a: Interval, b: Interval) -> Interval:
    """Superset of { x + y : x in a, y in b }."""
    if a.is_empty or b.is_empty:
        return EMPTY
    return Interval(_down_sum(a.lo, b.lo), _up_sum(a.hi, b.hi))


def sub(a: Interval, b: Interval) -> Interval:
    """Superset of { x - y : x in a, y in b } (independent operands)."""
    if a.is_empty or b.is_empty:
        return EMPTY
    return Interval(_down_sum(a.lo, -b.hi), _up_sum(a.hi, -b.lo))


def neg(a: Interval) -> Interval:
    if a.is_empty:
        return EMPTY
    return Interval(-a.hi, -a.lo)


def mul(a: Interval, b: Interval) -> Interval:
    """Superset of { x * y : x in a, y in b }, from the four corner products."""
    if a.is_empty or b.is_empty:
        return EMPTY
    corners = ((a.lo, b.lo), (a.lo, b.hi), (a.hi, b.lo), (a.hi, b.hi))
    lo = min(_down_prod(x, y) for x, y in corners)
    hi = max(_up_prod(x, y) for x, y in corners)
    return Interval(lo, hi)


def intersect(a: Interval, b: Interval) -> Interval:
    """Exact set intersection; no rounding involved."""
    if a.is_empty or b.is_empty:
        return EMPTY
    return Interval(max(a.lo, b.lo), min(a.hi, b.hi))


def div_rel(a: Interval, b: Interval) -> Interval:
    """Interval hull of { x : exists y in b with x * y in a }.

    This is the relational inverse of ``mul``: extended division that
    keeps every x for which some multiplier in ``b`` lands the product in
    ``a``.  When the exact solution set is two rays, their hull (the whole
    line) is returned.
    """
    if a.is_empty or b.is_empty:
        return EMPTY
    if b.lo <= 0.0 <= b.hi:
        if a.contains(0.0):
            return WHOLE  # y = 0 certifies every x
        if b.is_zero:
            return EMPTY
        if b.lo == 0.0:
            # multipliers (0, b.hi]
            if a.lo > 0.0:
                return Interval(_down_quot(a.lo, b.hi), _INF)
            return Interval(-_INF, _up_quot(a.hi, b.hi))
        if b.hi == 0.0:
            # multipliers [b.lo, 0)
            if a.lo > 0.0:
                return Interval(-_INF, _up_quot(a.lo, b.lo))
            return Interval(_down_quot(a.hi, b.lo), _INF)
        return WHOLE  # zero interior to b: two rays, hull is the line
    corners = ((a.lo, b.lo), (a.lo, b.hi), (a.hi, b.lo), (a.hi, b.hi))
    lo = min(_down_quot(x, y) for x, y in corners)
    hi = max(_up_quot(x, y) for x, y in corners)
    return Interval(lo, hi)


# -- decimal conversion -------------------------------------------------------


def _is_pos_inf(text: str) -> bool:
    return text.strip().lstrip("+") in ("inf", "infinity")


def _is_neg_inf(text: str) -> bool:
    t = text.strip()
    return t.startswith("-") and t[1:] in ("inf", "infinity")


def _decimal_to_float(text: str, up: bool) -> float:
    """Directed conversion of a decimal literal to binary64."""
    try:
        exact = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a decimal literal: {text!r}") from e
    try:
        f = float(exact)
    except OverflowError:
        f = _INF if exact > 0 else -_INF
    if math.isinf(f):
        if f > 0.0:
            return _INF if up else _MAX
        return -_MAX if up else -_INF
    ef = Fraction(f)
    if ef == exact:
        return f
    if up:
        return math.nextafter(f, _INF) if ef < exact else f
    return math.nextafter(f, -_INF) if ef > exact else f


def format_interval(a: Interval) -> str:
    """Render ``[lo, hi]`` with shortest round-trip decimals, or ``empty``."""
    return str(a)
