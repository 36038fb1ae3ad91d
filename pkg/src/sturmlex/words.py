"""Finite and infinite words over small alphabets, with exact combinatorial analysis.

Letters are integers 0..size-1; display names are cosmetic.  Finite words are
immutable byte strings, so factor extraction and lexicographic scans run at
C speed.  Infinite words are deterministic lazy streams with a memoized
prefix buffer; every analysis of an infinite word is explicitly performed on
a finite prefix supplied by the caller, and results are only claims about
that prefix.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "Alphabet",
    "BINARY",
    "BINARY_AB",
    "FiniteWord",
    "InfiniteWord",
    "UltimatelyPeriodicWord",
    "LexOrder",
    "Relation",
    "ComparisonOutcome",
    "shift",
    "reversal",
    "is_palindrome",
    "complement",
    "prepend",
    "factors",
    "complexity",
    "special_factors",
    "is_balanced",
    "balance_violation",
    "block_condition",
    "lex_compare",
    "detect_period",
    "classify_eventually_periodic",
    "word_to_text",
    "word_from_text",
    "complexity_json",
    "factors_json",
]

# Safety cap for any single prefix evaluation; overridable via environment.
MAX_PREFIX = int(os.environ.get("STURMLEX_MAX_LEN", "1000000"))

_LETTER_POOL = "abcdefgh"


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of letters 0..size-1 with single-character display names."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ValueError("alphabet must have at least one letter")
        if len(set(self.names)) != len(self.names):
            raise ValueError("display names must be distinct")
        if any(len(n) != 1 for n in self.names):
            raise ValueError("display names must be single characters")

    @staticmethod
    def of_size(size: int, names: str | None = None) -> "Alphabet":
        if size < 1:
            raise ValueError("alphabet size must be >= 1")
        if names is None:
            if size > len(_LETTER_POOL):
                raise ValueError(f"default names only cover sizes up to {len(_LETTER_POOL)}")
            names = _LETTER_POOL[:size]
        return Alphabet(tuple(names))

    @staticmethod
    def digits(base: int) -> "Alphabet":
        """Alphabet 0..base-1 displayed as decimal digits (base <= 10)."""
        if not 2 <= base <= 10:
            raise ValueError("digit alphabets supported for bases 2..10")
        return Alphabet(tuple(str(i) for i in range(base)))

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        if name in self.names:
            return self.names.index(name)
        # binary words are written equally with 0/1 and a/b
        if self.size == 2:
            alias = {"0": 0, "1": 1, "a": 0, "b": 1}
            if name in alias:
                return alias[name]
        raise ValueError(f"unknown letter {name!r} for alphabet {''.join(self.names)}")

    def __repr__(self):
        return f"Alphabet({''.join(self.names)!r})"


BINARY = Alphabet(("0", "1"))
BINARY_AB = Alphabet(("a", "b"))


class FiniteWord:
    """An immutable finite word; the empty word is allowed."""

    __slots__ = ("data", "alphabet")

    def __init__(self, letters: Iterable[int] | bytes, alphabet: Alphabet):
        data = bytes(letters)
        if data and max(data) >= alphabet.size:
            raise ValueError("letter out of range for alphabet")
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "alphabet", alphabet)

    def __setattr__(self, *_):
        raise AttributeError("FiniteWord is immutable")

    @classmethod
    def from_str(cls, text: str, alphabet: Alphabet | None = None) -> "FiniteWord":
        if alphabet is None:
            if set(text) <= {"0", "1"}:
                alphabet = BINARY
            else:
                hi = max((_LETTER_POOL.index(c) for c in text if c in _LETTER_POOL), default=0)
                alphabet = Alphabet.of_size(max(hi + 1, 2))
        return cls([alphabet.index(c) for c in text], alphabet)

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(self.data)

    def __len__(self):
        return len(self.data)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return FiniteWord(self.data[i], self.alphabet)
        return self.data[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.data)

    def __add__(self, other: "FiniteWord") -> "FiniteWord":
        if self.alphabet.size != other.alphabet.size:
            raise ValueError("alphabet mismatch")
        return FiniteWord(self.data + other.data, self.alphabet)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteWord)
            and self.data == other.data
            and self.alphabet.size == other.alphabet.size
        )

    def __hash__(self):
        return hash((self.data, self.alphabet.size))

    def count(self, letter: int) -> int:
        return self.data.count(letter)

    def reversal(self) -> "FiniteWord":
        return FiniteWord(self.data[::-1], self.alphabet)

    def is_palindrome(self) -> bool:
        return self.data == self.data[::-1]

    def as_str(self) -> str:
        return "".join(self.alphabet.names[c] for c in self.data)

    def __repr__(self):
        return f"FiniteWord({self.as_str()!r})"


class InfiniteWord:
    """A deterministic lazy infinite word with a memoized prefix buffer.

    ``stream`` yields letters in order; it may be finite, in which case
    requesting a prefix past the end raises ValueError (the word is only
    defined up to the material the construction can supply).  Constructions
    with O(1) random access may supply ``letter_fn``, which bypasses the
    prefix buffer for single-letter reads.
    """

    def __init__(self, stream: Iterable[int], alphabet: Alphabet, recipe: str, letter_fn=None):
        self.alphabet = alphabet
        self.recipe = recipe
        self._it = iter(stream)
        self._buf = bytearray()
        self._lock = threading.RLock()
        self._letter_fn = letter_fn

    def _fill(self, n: int) -> None:
        if n > MAX_PREFIX:
            raise ValueError(f"prefix request {n} exceeds cap {MAX_PREFIX} (STURMLEX_MAX_LEN)")
        with self._lock:
            while len(self._buf) < n:
                try:
                    self._buf.append(next(self._it))
                except StopIteration:
                    raise ValueError(
                        f"{self.recipe}: word only defined up to length {len(self._buf)}"
                    ) from None

    def prefix_bytes(self, n: int) -> bytes:
        self._fill(n)
        return bytes(self._buf[:n])

    def prefix(self, n: int) -> FiniteWord:
        return FiniteWord(self.prefix_bytes(n), self.alphabet)

    def letter(self, n: int) -> int:
        if self._letter_fn is not None and n >= len(self._buf):
            return self._letter_fn(n)
        self._fill(n + 1)
        return self._buf[n]

    def shifted(self, k: int) -> "InfiniteWord":
        if k < 0:
            raise ValueError("shift must be non-negative")
        if k == 0:
            return self
        parent = self

        def stream():
            i = k
            while True:
                yield parent.letter(i)
                i += 1

        return InfiniteWord(stream(), self.alphabet, f"T^{k}({self.recipe})")

    def __repr__(self):
        return f"InfiniteWord({self.recipe})"


class UltimatelyPeriodicWord(InfiniteWord):
    """The word u v^omega in canonical form (primitive v, minimal preperiod)."""

    def __init__(self, preperiod: FiniteWord, period: FiniteWord):
        if len(period) == 0:
            raise ValueError("period must be non-empty")
        if preperiod.alphabet.size != period.alphabet.size:
            raise ValueError("alphabet mismatch")
        u, v = _canonical_uv(preperiod.data, period.data)
        alphabet = period.alphabet
        self.preperiod = FiniteWord(u, alphabet)
        self.period = FiniteWord(v, alphabet)
        label_u = self.preperiod.as_str()
        label_v = self.period.as_str()
        recipe = f"{label_u}|{label_v}" if label_u else f"({label_v})^w"
        super().__init__(iter(()), alphabet, recipe)

    @classmethod
    def purely_periodic(cls, period: FiniteWord) -> "UltimatelyPeriodicWord":
        return cls(FiniteWord(b"", period.alphabet), period)

    @property
    def is_purely_periodic(self) -> bool:
        return len(self.preperiod) == 0

    def _fill(self, n: int) -> None:
        if n > MAX_PREFIX:
            raise ValueError(f"prefix request {n} exceeds cap {MAX_PREFIX} (STURMLEX_MAX_LEN)")
        with self._lock:
            if len(self._buf) < n:
                u, v = self.preperiod.data, self.period.data
                reps = (n - len(u)) // len(v) + 1
                self._buf = bytearray((u + v * max(reps, 1))[:n])

    def shifted(self, k: int) -> "UltimatelyPeriodicWord":
        if k < 0:
            raise ValueError("shift must be non-negative")
        u, v = self.preperiod.data, self.period.data
        if k <= len(u):
            return UltimatelyPeriodicWord(self.preperiod[k:], self.period)
        j = (k - len(u)) % len(v)
        return UltimatelyPeriodicWord(
            FiniteWord(b"", self.alphabet),
            FiniteWord(v[j:] + v[:j], self.alphabet),
        )

    def __eq__(self, other):
        return (
            isinstance(other, UltimatelyPeriodicWord)
            and self.preperiod == other.preperiod
            and self.period == other.period
        )

    def __hash__(self):
        return hash((self.preperiod, self.period))


def _canonical_uv(u: bytes, v: bytes) -> tuple[bytes, bytes]:
    p = _smallest_period(v)
    if p < len(v) and len(v) % p == 0:
        v = v[:p]
    while u and u[-1] == v[-1]:
        u, v = u[:-1], v[-1:] + v[:-1]
    return u, v


# ---------------------------------------------------------------------------
# lexicographic orders and comparison outcomes


@dataclass(frozen=True)
class LexOrder:
    """A total order on an alphabet, given as letters from smallest to largest."""

    by_rank: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.by_rank) != list(range(len(self.by_rank))):
            raise ValueError("order must be a permutation of 0..size-1")

    @staticmethod
    def natural(size: int) -> "LexOrder":
        return LexOrder(tuple(range(size)))

    @staticmethod
    def from_text(text: str, alphabet: Alphabet) -> "LexOrder":
        letters = [alphabet.index(name) for name in text.split("<")]
        if sorted(letters) != list(range(alphabet.size)):
            raise ValueError(f"order {text!r} must list every letter exactly once")
        return LexOrder(tuple(letters))

    @property
    def size(self) -> int:
        return len(self.by_rank)

    @property
    def min_letter(self) -> int:
        return self.by_rank[0]

    @property
    def max_letter(self) -> int:
        return self.by_rank[-1]

    def rank(self, letter: int) -> int:
        return self.by_rank.index(letter)

    @property
    def table(self) -> bytes:
        """256-byte translation table mapping letters to their ranks."""
        return _rank_table(self.by_rank)

    def text(self, alphabet: Alphabet) -> str:
        return "<".join(alphabet.names[c] for c in self.by_rank)

    def __repr__(self):
        return f"LexOrder({'<'.join(map(str, self.by_rank))})"


@lru_cache(maxsize=None)
def _rank_table(by_rank: tuple[int, ...]) -> bytes:
    table = bytearray(range(256))
    for rank, letter in enumerate(by_rank):
        table[letter] = rank
    return bytes(table)


class Relation(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL_THROUGH_DEPTH = "equal-through-depth"


@dataclass(frozen=True)
class ComparisonOutcome:
    """Result of a depth-bounded lexicographic comparison.

    ``depth`` is the index of the first difference for a decided outcome, or
    the examined depth when the prefixes agree throughout.
    """

    relation: Relation
    depth: int

    @property
    def decided(self) -> bool:
        return self.relation is not Relation.EQUAL_THROUGH_DEPTH

    @property
    def may_be_le(self) -> bool:
        """True unless the comparison decided strictly-greater."""
        return self.relation is not Relation.GREATER

    @property
    def may_be_ge(self) -> bool:
        return self.relation is not Relation.LESS


def _compare_ranked(x: bytes, y: bytes) -> ComparisonOutcome:
    n = min(len(x), len(y))
    a, b = x[:n], y[:n]
    if a == b:
        return ComparisonOutcome(Relation.EQUAL_THROUGH_DEPTH, n)
    i = next(i for i in range(n) if a[i] != b[i])
    rel = Relation.LESS if a[i] < b[i] else Relation.GREATER
    return ComparisonOutcome(rel, i)


def _material(w: FiniteWord | InfiniteWord, prefix_length: int | None) -> bytes:
    if isinstance(w, FiniteWord):
        return w.data if prefix_length is None else w.data[:prefix_length]
    if prefix_length is None:
        raise ValueError("infinite word: a prefix length is required")
    return w.prefix_bytes(prefix_length)


# ---------------------------------------------------------------------------
# basic operations


def shift(w: FiniteWord | InfiniteWord, k: int = 1):
    """Shift map: drops k letters of an infinite word; circular shift of a finite one."""
    if k < 0:
        raise ValueError("shift count must be non-negative")
    if isinstance(w, InfiniteWord):
        return w.shifted(k)
    if len(w) == 0:
        raise ValueError("circular shift of the empty word is undefined")
    j = k % len(w)
    return FiniteWord(w.data[j:] + w.data[:j], w.alphabet)


def reversal(w: FiniteWord) -> FiniteWord:
    return w.reversal()


def is_palindrome(w: FiniteWord) -> bool:
    return w.is_palindrome()


def complement(w: FiniteWord | InfiniteWord):
    """Exchange the two letters of a binary word."""
    if w.alphabet.size != 2:
        raise ValueError("complement requires a binary alphabet")
    swap = bytes([1, 0]) + bytes(range(2, 256))
    if isinstance(w, FiniteWord):
        return FiniteWord(w.data.translate(swap), w.alphabet)
    if isinstance(w, UltimatelyPeriodicWord):
        return UltimatelyPeriodicWord(complement(w.preperiod), complement(w.period))
    parent = w

    def stream():
        i = 0
        while True:
            yield 1 - parent.letter(i)
            i += 1

    return InfiniteWord(stream(), w.alphabet, f"complement({w.recipe})")


def prepend(head: FiniteWord, tail: InfiniteWord) -> InfiniteWord:
    """The infinite word head . tail (alphabet sizes must agree)."""
    if head.alphabet.size != tail.alphabet.size:
        raise ValueError("alphabet mismatch")
    if isinstance(tail, UltimatelyPeriodicWord):
        return UltimatelyPeriodicWord(head + tail.preperiod, tail.period)
    data = head.data

    def stream():
        yield from data
        i = 0
        while True:
            yield tail.letter(i)
            i += 1

    return InfiniteWord(stream(), tail.alphabet, f"{head.as_str()}.{tail.recipe}")


def factors(w: FiniteWord | InfiniteWord, n: int, prefix_length: int | None = None) -> set[FiniteWord]:
    """The set of distinct length-n factors of the supplied material."""
    if n < 1:
        raise ValueError("factor length must be positive")
    data = _material(w, prefix_length)
    if n > len(data):
        raise ValueError(f"factor length {n} exceeds available material {len(data)}")
    alphabet = w.alphabet
    return {FiniteWord(f, alphabet) for f in _factor_bytes(data, n)}


def _factor_bytes(data: bytes, n: int) -> set[bytes]:
    return {data[i : i + n] for i in range(len(data) - n + 1)}


def complexity(w: FiniteWord | InfiniteWord, k_max: int, prefix_length: int | None = None) -> list[int]:
    """Factor-counting function p(1..k_max) of the supplied material.

    For infinite words this is computed on the prefix of the given length and
    is a lower bound of the true complexity unless the prefix is long enough
    for p(k) to have stabilized.
    """
    data = _material(w, prefix_length)
    if k_max > len(data):
        raise ValueError("k_max exceeds available material")
    return [len(_factor_bytes(data, k)) for k in range(1, k_max + 1)]


def special_factors(
    w: FiniteWord | InfiniteWord,
    n: int,
    side: str = "left",
    prefix_length: int | None = None,
) -> set[FiniteWord]:
    """Length-n factors with >= 2 distinct one-letter extensions on the given side."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    data = _material(w, prefix_length)
    if n + 1 > len(data):
        raise ValueError("material too short to witness extensions")
    ext: dict[bytes, set[int]] = {}
    for f in (data[i : i + n + 1] for i in range(len(data) - n)):
        core = f[1:] if side == "left" else f[:-1]
        letter = f[0] if side == "left" else f[-1]
        ext.setdefault(core, set()).add(letter)
    return {FiniteWord(core, w.alphabet) for core, letters in ext.items() if len(letters) >= 2}


def balance_violation(
    w: FiniteWord | InfiniteWord, prefix_length: int | None = None
) -> tuple[FiniteWord, FiniteWord] | None:
    """A pair of equal-length factors whose 1-counts differ by >= 2, if any."""
    data = _material(w, prefix_length)
    if w.alphabet.size != 2:
        raise ValueError("balance is defined for binary alphabets only")
    n = len(data)
    pre = [0] * (n + 1)
    for i, c in enumerate(data):
        pre[i + 1] = pre[i] + c
    for length in range(1, n + 1):
        counts = [pre[i + length] - pre[i] for i in range(n - length + 1)]
        lo, hi = min(counts), max(counts)
        if hi - lo >= 2:
            i, j = counts.index(lo), counts.index(hi)
            return (
                FiniteWord(data[i : i + length], w.alphabet),
                FiniteWord(data[j : j + length], w.alphabet),
            )
    return None


def is_balanced(w: FiniteWord | InfiniteWord, prefix_length: int | None = None) -> bool:
    return balance_violation(w, prefix_length) is None


def block_condition(w: FiniteWord | InfiniteWord, prefix_length: int | None = None) -> bool:
    """True iff no word u has both 0u0 and 1u1 among the material's factors."""
    return _block_violation(_material(w, prefix_length), w.alphabet) is None


def _block_violation(data: bytes, alphabet: Alphabet) -> bytes | None:
    if alphabet.size != 2:
        raise ValueError("the block condition is defined for binary alphabets only")
    for m in range(2, len(data) + 1):
        facs = _factor_bytes(data, m)
        for f in facs:
            if f[0] == 0 and f[-1] == 0 and b"\x01" + f[1:-1] + b"\x01" in facs:
                return f[1:-1]
    return None


def lex_compare(
    u: FiniteWord | InfiniteWord,
    v: FiniteWord | InfiniteWord,
    order: LexOrder | None = None,
    depth: int | None = None,
) -> ComparisonOutcome:
    """Depth-bounded lexicographic comparison of two words.

    Both words must supply ``depth`` letters (finite words shorter than the
    requested depth are rejected; omit depth to use their common length).
    """
    if depth is None:
        if isinstance(u, InfiniteWord) or isinstance(v, InfiniteWord):
            raise ValueError("a comparison depth is required for infinite words")
        depth = min(len(u), len(v))
    ud = _material(u, depth)
    vd = _material(v, depth)
    if len(ud) < depth or len(vd) < depth:
        raise ValueError("both words must supply prefixes of the requested depth")
    if order is None:
        order = LexOrder.natural(max(u.alphabet.size, v.alphabet.size))
    t = order.table
    return _compare_ranked(ud[:depth].translate(t), vd[:depth].translate(t))


def _smallest_period(data: bytes) -> int:
    """Smallest p with data[i] == data[i+p] for all valid i (KMP border)."""
    n = len(data)
    if n == 0:
        raise ValueError("period of the empty word is undefined")
    pi = [0] * n
    k = 0
    for i in range(1, n):
        while k and data[i] != data[k]:
            k = pi[k - 1]
        if data[i] == data[k]:
            k += 1
        pi[i] = k
    return n - pi[n - 1]


def detect_period(w: FiniteWord) -> int:
    return _smallest_period(w.data)


def classify_eventually_periodic(
    w: FiniteWord | InfiniteWord, prefix_length: int | None = None
) -> UltimatelyPeriodicWord | None:
    """Heuristic certificate that the material is consistent with u v^omega.

    Returns the candidate with minimal period (then minimal preperiod), or
    None.  A candidate requires the periodic tail to cover at least three
    full periods and at least half of the material.  This is a consistency
    claim about the prefix, never a proof of ultimate periodicity: aperiodic
    words contain high powers, so certain prefix lengths admit candidates.
    """
    data = _material(w, prefix_length)
    n = len(data)
    if n == 0:
        raise ValueError("empty material")
    for p in range(1, n // 3 + 1):
        a = 0
        for i in range(n - p - 1, -1, -1):
            if data[i] != data[i + p]:
                a = i + 1
                break
        tail = n - a
        if tail >= 3 * p and 2 * tail >= n:
            alphabet = w.alphabet
            return UltimatelyPeriodicWord(
                FiniteWord(data[:a], alphabet), FiniteWord(data[a : a + p], alphabet)
            )
    return None


# ---------------------------------------------------------------------------
# serialization

def word_to_text(w: FiniteWord | UltimatelyPeriodicWord) -> str:
    """Two-line text form: letter names, then the word body (u|v when periodic)."""
    names = ",".join(w.alphabet.names)
    if isinstance(w, UltimatelyPeriodicWord):
        return f"{names}\n{w.preperiod.as_str()}|{w.period.as_str()}\n"
    if isinstance(w, InfiniteWord):
        raise ValueError("only finite and ultimately periodic words serialize to text")
    return f"{names}\n{w.as_str()}\n"


def word_from_text(text: str) -> FiniteWord | UltimatelyPeriodicWord:
    lines = [line for line in text.splitlines() if line.strip() != ""]
    if len(lines) != 2:
        raise ValueError("expected two lines: alphabet, body")
    alphabet = Alphabet(tuple(name.strip() for name in lines[0].split(",")))
    body = lines[1].strip()
    if "|" in body:
        u_text, v_text = body.split("|", 1)
        return UltimatelyPeriodicWord(
            FiniteWord([alphabet.index(c) for c in u_text], alphabet),
            FiniteWord([alphabet.index(c) for c in v_text], alphabet),
        )
    return FiniteWord([alphabet.index(c) for c in body], alphabet)


def complexity_json(values: list[int]) -> str:
    return json.dumps([{"k": k + 1, "p": p} for k, p in enumerate(values)])


def factors_json(fs: set[FiniteWord]) -> str:
    return json.dumps(sorted(f.as_str() for f in fs))
