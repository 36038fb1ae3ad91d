"""Bridging digit words and real numbers: fractional parts, covering arcs, Gamma-tilde.

All real quantities are exact rationals derived from digit prefixes; verdict
paths contain no floating point.  A truncated expansion is carried as an
interval [value, value + b^-N] so the error is explicit everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .extremal import BoundedVerdict, check_sturmian_extremal
from .generators import characteristic, thue_morse
from .surds import QuadraticSurd
from .words import (
    Alphabet,
    FiniteWord,
    InfiniteWord,
    UltimatelyPeriodicWord,
    classify_eventually_periodic,
    complexity,
    is_balanced,
)

__all__ = [
    "RationalInterval",
    "DigitExpansion",
    "TorusPointSet",
    "digits_from_rational",
    "real_bounds_from_digits",
    "fractional_parts",
    "min_covering_interval",
    "ClassifyReport",
    "bugeaud_dubickas_classify",
    "self_sturmian_test",
    "gamma_tilde_member",
    "gamma_tilde_orbit",
    "thue_morse_constant",
    "veerman_interval",
]


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


@dataclass(frozen=True)
class RationalInterval:
    """A closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def to_obj(self) -> dict:
        return {"lo": _frac_str(self.lo), "hi": _frac_str(self.hi)}

    def __repr__(self):
        return f"RationalInterval({self.lo}, {self.hi})"


@dataclass(frozen=True)
class DigitExpansion:
    """A base-b digit word (finite prefix or infinite stream) with provenance."""

    base: int
    digits: FiniteWord | InfiniteWord
    provenance: str = "from-word"

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be at least 2")
        if self.digits.alphabet.size > self.base:
            raise ValueError("digit word uses letters outside the base range")

    def prefix_digits(self, n: int) -> bytes:
        if isinstance(self.digits, FiniteWord):
            if n > len(self.digits):
                raise ValueError(f"only {len(self.digits)} digits available, {n} requested")
            return self.digits.data[:n]
        return self.digits.prefix_bytes(n)


def digits_from_rational(xi: Fraction, base: int, n: int) -> DigitExpansion:
    """Greedy base-b digits of a rational in (0, 1)."""
    if not 0 < xi < 1:
        raise ValueError("xi must lie strictly between 0 and 1")
    if n < 1:
        raise ValueError("need at least one digit")
    out = bytearray()
    x = xi
    for _ in range(n):
        x *= base
        d = int(x)  # 0 < x, floor
        out.append(d)
        x -= d
    return DigitExpansion(base, FiniteWord(out, Alphabet.digits(base)), "from-rational")


def real_bounds_from_digits(d: DigitExpansion, n: int | None = None) -> RationalInterval:
    """Interval of width base^-N containing every real with the given digit prefix."""
    digits = d.prefix_digits(n) if n is not None else d.prefix_digits(len(d.digits))
    value = 0
    for digit in digits:
        value = value * d.base + digit
    scale = d.base ** len(digits)
    return RationalInterval(Fraction(value, scale), Fraction(value + 1, scale))


def fractional_parts(d: DigitExpansion, shifts: int, precision: int) -> list[RationalInterval]:
    """Intervals around the first ``shifts`` orbit points, each of width base^-precision."""
    data = d.prefix_digits(shifts + precision)
    out = []
    scale = d.base**precision
    for n in range(shifts):
        value = 0
        for digit in data[n : n + precision]:
            value = value * d.base + digit
        out.append(RationalInterval(Fraction(value, scale), Fraction(value + 1, scale)))
    return out


@dataclass(frozen=True)
class TorusPointSet:
    """A finite set of exact rational points on the unit circle, sorted and deduplicated."""

    points: tuple[Fraction, ...]

    def __post_init__(self):
        pts = tuple(sorted(set(self.points)))
        if any(not 0 <= p < 1 for p in pts):
            raise ValueError("points must lie in [0, 1)")
        object.__setattr__(self, "points", pts)


def min_covering_interval(
    items: TorusPointSet | list[RationalInterval] | list[Fraction],
    circular: bool = True,
) -> tuple[Fraction, RationalInterval]:
    """Shortest closed arc (or interval) covering all the points/intervals.

    On the circle this is the complement of the largest empty gap; the result
    interval may have hi > 1 to represent an arc wrapping through 0.
    """
    if isinstance(items, TorusPointSet):
        intervals = [(p, p) for p in items.points]
    else:
        intervals = []
        for it in items:
            if isinstance(it, RationalInterval):
                intervals.append((it.lo, it.hi))
            else:
                intervals.append((Fraction(it), Fraction(it)))
    if not intervals:
        raise ValueError("empty input")
    intervals.sort()
    if not circular:
        lo = min(a for a, _ in intervals)
        hi = max(b for _, b in intervals)
        return hi - lo, RationalInterval(lo, hi)
    n = len(intervals)
    best_gap = None
    best_start = 0
    max_hi = intervals[0][1]
    for i in range(n):
        nxt = i + 1
        if nxt < n:
            gap = intervals[nxt][0] - max_hi
            start = nxt
        else:
            gap = intervals[0][0] + 1 - max_hi
            start = 0
        if best_gap is None or gap > best_gap:
            best_gap, best_start = gap, start
            best_end = max_hi
        if nxt < n:
            max_hi = max(max_hi, intervals[nxt][1])
    if best_gap <= 0:
        return Fraction(1), RationalInterval(Fraction(0), Fraction(1))
    length = 1 - best_gap
    lo = intervals[best_start][0]
    return length, RationalInterval(lo, lo + length)


# ---------------------------------------------------------------------------
# digit-word classification


@dataclass
class ClassifyReport:
    """Desk-scale structure report for a digit-word prefix.

    ``interval_refinement`` addresses whether the minimal covering interval
    would be open: it is not open exactly when some shift of the digit word
    is characteristic, which a prefix can never certify, so the report says
    "undetermined-at-bounds" unless a shift passes the bounded
    characteristic-attainment test inside the material.
    """

    base: int
    values: tuple[int, ...]
    adjacent_pair: bool
    low_digit: int | None
    balanced: bool | None
    periodic_certificate: UltimatelyPeriodicWord | None
    verdict: str
    prefix_length: int
    interval_refinement: str = "not-applicable"
    characteristic_shift: int | None = None

    def to_obj(self) -> dict:
        cert = None
        if self.periodic_certificate is not None:
            cert = {
                "preperiod": self.periodic_certificate.preperiod.as_str(),
                "period": self.periodic_certificate.period.as_str(),
            }
        return {
            "base": self.base,
            "values": list(self.values),
            "adjacent_pair": self.adjacent_pair,
            "low_digit": self.low_digit,
            "balanced": self.balanced,
            "periodic_certificate": cert,
            "classification": self.verdict,
            "prefix_length": self.prefix_length,
            "interval_refinement": self.interval_refinement,
            "characteristic_shift": self.characteristic_shift,
        }


def _characteristic_shift_candidate(data: bytes) -> int | None:
    """Smallest j >= 1 whose tail passes the bounded characteristic inequalities.

    Runs a.u <= T^k(u) <= b.u for u = data[j:] at bounds derived from the
    material.  A pass marks the tail as a characteristic candidate (the
    covering interval would then not be open); absence proves nothing.
    """
    n = len(data)
    span = max(32, n // 6)  # comparison depth and shift count for each tail
    for j in range(1, n - 2 * span):
        u = data[j:]
        lower = b"\x00" + u[: span - 1]
        upper = b"\x01" + u[: span - 1]
        if all(lower <= u[k : k + span] <= upper for k in range(span + 1)):
            return j
    return None


def bugeaud_dubickas_classify(d: DigitExpansion, prefix_length: int) -> ClassifyReport:
    """Check a digit prefix against the structure forced by the covering theorem.

    The orbit of a number can stay inside a closed interval of length 1/b
    only when the digits form a balanced word on two adjacent values {k, k+1}
    (aperiodic for irrationals).  The verdict is a statement about this
    prefix only: "consistent-with-sturmian", "periodic-balanced", or
    "excluded".
    """
    if prefix_length < 2:
        raise ValueError("need at least two digits")
    data = d.prefix_digits(prefix_length)
    values = tuple(sorted(set(data)))
    low = values[0]
    if len(values) == 1:
        word = UltimatelyPeriodicWord.purely_periodic(FiniteWord(b"\x00", Alphabet(("0", "1"))))
        return ClassifyReport(
            d.base, values, False, low, True, word, "periodic-balanced", prefix_length
        )
    adjacent = len(values) == 2 and values[1] == values[0] + 1
    if not adjacent:
        return ClassifyReport(d.base, values, False, None, None, None, "excluded", prefix_length)
    induced = FiniteWord(bytes(c - low for c in data), Alphabet(("0", "1")))
    balanced = is_balanced(induced)
    certificate = classify_eventually_periodic(induced)
    if not balanced:
        verdict = "excluded"
    elif certificate is not None:
        verdict = "periodic-balanced"
    else:
        verdict = "consistent-with-sturmian"
    refinement = "not-applicable"
    shift_candidate = None
    if verdict == "consistent-with-sturmian":
        shift_candidate = _characteristic_shift_candidate(induced.data)
        refinement = (
            "interval-not-open-candidate" if shift_candidate is not None
            else "undetermined-at-bounds"
        )
    return ClassifyReport(
        d.base, values, True, low, balanced, certificate, verdict, prefix_length,
        refinement, shift_candidate,
    )


def self_sturmian_test(s: InfiniteWord, K: int, L: int, complexity_depth: int = 30) -> BoundedVerdict:
    """Bounded test that s = 1u with u a characteristic word beginning with 1.

    Requires the 11 prefix, the characteristic shift inequalities for u at
    (K, L), and the Sturmian factor-count k+1 for k up to complexity_depth on
    the material (which rules out eventually periodic impostors at the
    observed scale).
    """
    if s.alphabet.size != 2:
        raise ValueError("binary word required")
    head = s.prefix_bytes(2)
    if head != b"\x01\x01":
        return BoundedVerdict(
            False, K, L, witness={"reason": "must begin with 11", "found": f"{head[0]}{head[1]}"}
        )
    u = s.shifted(1)
    verdict = check_sturmian_extremal(u, u, K, L)
    if not verdict.holds:
        verdict.detail["reason"] = "tail fails the characteristic inequalities"
        return verdict
    p = complexity(u, complexity_depth, K + L)
    bad = next((k for k, v in enumerate(p, start=1) if v != k + 1), None)
    if bad is not None:
        return BoundedVerdict(
            False,
            K,
            L,
            witness={"reason": "factor count is not k+1", "k": bad, "p": p[bad - 1]},
            detail={"complexity_depth": complexity_depth},
        )
    verdict.detail["complexity_depth"] = complexity_depth
    return verdict


# ---------------------------------------------------------------------------
# Gamma-tilde and named constants


def gamma_tilde_orbit(x: Fraction, cap: int = 1_000_000) -> list[Fraction]:
    """Doubling-map orbit of a rational until the first repeat (exact)."""
    orbit = []
    seen = set()
    y = x - int(x)  # {x}; x = 1 maps to 0
    while y not in seen:
        if len(orbit) > cap:
            raise ValueError("orbit cap exceeded")
        seen.add(y)
        orbit.append(y)
        y = (2 * y) % 1
    return orbit


def gamma_tilde_member(x: Fraction, cap: int = 1_000_000) -> bool:
    """Exact membership of a rational in {x : 1-x <= {2^k x} <= x for all k}.

    Rational orbits under doubling are eventually periodic, so cycle
    detection makes the check exact; ``cap`` only guards degenerate inputs.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError("x must lie in [0, 1]")
    return all(1 - x <= y <= x for y in gamma_tilde_orbit(x, cap))


def thue_morse_constant(n_terms: int) -> RationalInterval:
    """Bounds for sum(t_n / 2^n) from the first n_terms terms; width 2^-(n_terms-1)."""
    if n_terms < 1:
        raise ValueError("need at least one term")
    digits = thue_morse().prefix_bytes(n_terms)
    value = sum(Fraction(d, 2**n) for n, d in enumerate(digits))
    return RationalInterval(value, value + Fraction(2, 2**n_terms))


def veerman_interval(alpha: QuadraticSurd, precision: int) -> tuple[RationalInterval, RationalInterval]:
    """Digit bounds for the reals with binary expansions 0.c and 1.c, c characteristic.

    The two intervals have width 2^-precision and their lower endpoints differ
    by exactly 1/2, the length of the arc spanned by the slope-alpha orbit
    closure.
    """
    if alpha.is_rational:
        raise ValueError("slope must be irrational")
    if not (QuadraticSurd(0) < alpha < QuadraticSurd(1)):
        raise ValueError("slope must lie in (0, 1)")
    c = characteristic(alpha)
    tail = c.prefix_bytes(precision - 1)
    base = Alphabet.digits(2)
    d0 = DigitExpansion(2, FiniteWord(bytes([0]) + tail, base), "from-word")
    d1 = DigitExpansion(2, FiniteWord(bytes([1]) + tail, base), "from-word")
    return real_bounds_from_digits(d0), real_bounds_from_digits(d1)
