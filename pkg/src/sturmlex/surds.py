"""Exact arithmetic on quadratic surds (p + q*sqrt(d))/r with integer parts.

All floors, ceilings, and comparisons are computed with integer arithmetic
only (isqrt bracketing plus sign analysis by squaring), so mechanical-word
letters derived from these values are exact.  Rationals are the q == 0 case;
mixing two irrational surds requires a common radicand d.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

__all__ = ["QuadraticSurd", "surd_floor", "surd_ceil", "surd_compare", "parse_surd"]


def _squarefree(d: int) -> bool:
    if d < 0:
        return False
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


class QuadraticSurd:
    """The exact real number (p + q*sqrt(d))/r in canonical reduced form."""

    __slots__ = ("p", "q", "d", "r")

    def __init__(self, p: int, q: int = 0, d: int = 0, r: int = 1):
        if r == 0:
            raise ValueError("zero denominator")
        if r < 0:
            p, q, r = -p, -q, -r
        if d == 1:
            p, q, d = p + q, 0, 0
        if q == 0:
            d = 0
        if d == 0:
            q = 0
        if d and not _squarefree(d):
            raise ValueError(f"radicand {d} is not square-free")
        g = math.gcd(math.gcd(abs(p), abs(q)), r)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r // g)

    def __setattr__(self, *_):
        raise AttributeError("QuadraticSurd is immutable")

    @classmethod
    def from_fraction(cls, x: Fraction | int) -> "QuadraticSurd":
        x = Fraction(x)
        return cls(x.numerator, 0, 0, x.denominator)

    @classmethod
    def sqrt(cls, d: int) -> "QuadraticSurd":
        return cls(0, 1, d, 1)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    @property
    def is_irrational(self) -> bool:
        return not self.is_rational

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational value")
        return Fraction(self.p, self.r)

    def _common(self, other) -> tuple["QuadraticSurd", "QuadraticSurd"]:
        if isinstance(other, (int, Fraction)):
            other = QuadraticSurd.from_fraction(other)
        if not isinstance(other, QuadraticSurd):
            raise TypeError(f"cannot combine QuadraticSurd with {type(other).__name__}")
        if self.d and other.d and self.d != other.d:
            raise ValueError(f"incompatible radicands {self.d} and {other.d}")
        return self, other

    def __add__(self, other):
        a, b = self._common(other)
        d = a.d or b.d
        return QuadraticSurd(a.p * b.r + b.p * a.r, a.q * b.r + b.q * a.r, d, a.r * b.r)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other):
        a, b = self._common(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        d = a.d or b.d
        return QuadraticSurd(
            a.p * b.p + a.q * b.q * d, a.p * b.q + a.q * b.p, d, a.r * b.r
        )

    __rmul__ = __mul__

    def _sign(self) -> int:
        """Sign of the value, by exact squaring (r > 0 so only the numerator matters)."""
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return (q > 0) - (q < 0)
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        lhs, rhs = p * p, q * q * d  # compare |p| vs |q|*sqrt(d)
        if p > 0:  # q < 0: sign of p - |q|sqrt(d)
            return 1 if lhs > rhs else -1 if lhs < rhs else 0
        return 1 if rhs > lhs else -1 if rhs < lhs else 0

    def floor(self) -> int:
        """Exact floor; uses floor(x/r) == floor(floor(x)/r) for integer r >= 1."""
        p, q, d, r = self.p, self.q, self.d, self.r
        if q == 0:
            return p // r
        s = math.isqrt(q * q * d)
        t = s if q > 0 else -s - 1  # floor(q*sqrt(d)); irrational, never an integer
        return (p + t) // r

    def ceil(self) -> int:
        return -((-self).floor())

    def __float__(self):
        return (self.p + self.q * math.sqrt(self.d)) / self.r

    def compare(self, other) -> int:
        a, b = self._common(other)
        return (a - b)._sign()

    def __eq__(self, other):
        try:
            return self.compare(other) == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __hash__(self):
        if self.is_rational:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.d, self.r))

    def __repr__(self):
        if self.is_rational:
            return f"QuadraticSurd({self.p}/{self.r})"
        return f"QuadraticSurd(({self.p}+{self.q}*sqrt({self.d}))/{self.r})"


def surd_floor(x: QuadraticSurd) -> int:
    return x.floor()


def surd_ceil(x: QuadraticSurd) -> int:
    return x.ceil()


def surd_compare(x: QuadraticSurd, y: QuadraticSurd | int | Fraction) -> int:
    """-1, 0, or 1 as x is less than, equal to, or greater than y."""
    return x.compare(y)


_SURD_RE = re.compile(
    r"""^\(\s*(?P<p>[+-]?\d+)\s*(?P<sign>[+-])\s*(?:(?P<q>\d+)\s*\*\s*)?
        sqrt\(\s*(?P<d>\d+)\s*\)\s*\)\s*(?:/\s*(?P<r>\d+))?$""",
    re.VERBOSE,
)
_RAT_RE = re.compile(r"^(?P<p>[+-]?\d+)\s*(?:/\s*(?P<r>\d+))?$")


def parse_surd(text: str) -> QuadraticSurd:
    """Parse "p/q" or "(p+q*sqrt(d))/r" (the q* coefficient may be omitted)."""
    text = text.strip()
    m = _RAT_RE.match(text)
    if m:
        return QuadraticSurd(int(m["p"]), 0, 0, int(m["r"] or 1))
    m = _SURD_RE.match(text)
    if m:
        q = int(m["q"] or 1)
        if m["sign"] == "-":
            q = -q
        return QuadraticSurd(int(m["p"]), q, int(m["d"]), int(m["r"] or 1))
    raise ValueError(f"cannot parse surd {text!r}; expected p/q or (p+q*sqrt(d))/r")
