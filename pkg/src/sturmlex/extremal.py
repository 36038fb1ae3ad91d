"""Lexicographic extremal machinery: min/max factors and the bounded checks.

Universally quantified statements about infinite words are verified at
explicit bounds: a shift bound K (how many shifts are inspected), a depth
bound L (how deep each comparison goes), and, for min/max words, a material
length (how much prefix the factor scan sees).  Every verdict records its
bounds.  A comparison that stays equal through the horizon is never counted
as a violation, but it is recorded; equality claims are made only when the
extremal factor is attained inside the material.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .generators import characteristic, fibonacci_slope, periodic_balanced
from .surds import QuadraticSurd
from .words import (
    Alphabet,
    FiniteWord,
    InfiniteWord,
    LexOrder,
    Relation,
    UltimatelyPeriodicWord,
    _compare_ranked,
    complement,
    prepend,
)

__all__ = [
    "AcceptablePair",
    "BoundedVerdict",
    "acceptable_pairs",
    "min_factor",
    "max_factor",
    "min_word",
    "max_word",
    "min_finite",
    "max_finite",
    "check_sturmian_extremal",
    "characteristic_check",
    "PairInequality",
    "EpistandardReport",
    "check_epistandard_ineq",
    "finite_episturmian_test",
    "not_balanced_witness",
    "fine_test",
    "local_balance_check",
    "gamma_membership",
    "allowed_pair_check",
    "sigma_xy_member",
    "gan_phi_approx",
    "GanCandidate",
    "default_material",
]

MAX_ORDER_ALPHABET = 8


def default_material(k: int) -> int:
    """Material length used for length-k extremal factors when none is given."""
    return 8 * k + 256


@dataclass(frozen=True)
class AcceptablePair:
    """A total order together with its minimum letter."""

    letter: int
    order: LexOrder

    def text(self, alphabet: Alphabet) -> str:
        return f"({alphabet.names[self.letter]}, {self.order.text(alphabet)})"


def acceptable_pairs(alphabet: Alphabet) -> list[AcceptablePair]:
    """All |A|! acceptable pairs of an alphabet (capped at size 8)."""
    if alphabet.size > MAX_ORDER_ALPHABET:
        raise ValueError(f"order enumeration capped at alphabet size {MAX_ORDER_ALPHABET}")
    return [
        AcceptablePair(perm[0], LexOrder(perm))
        for perm in itertools.permutations(range(alphabet.size))
    ]


@dataclass
class BoundedVerdict:
    """Outcome of a bounded check: holds, or fails with a reproducible witness.

    ``undecided`` counts comparisons that stayed equal through the depth
    horizon (treated as non-violations).
    """

    holds: bool
    shift_bound: int | None = None
    depth_bound: int | None = None
    witness: dict | None = None
    undecided: int = 0
    detail: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "holds" if self.holds else "fails"

    def to_obj(self) -> dict:
        obj = {"status": self.status, "K": self.shift_bound, "L": self.depth_bound}
        if self.undecided:
            obj["undecided"] = self.undecided
        if self.witness is not None:
            obj["witness"] = self.witness
        if self.detail:
            obj["detail"] = self.detail
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_obj())


# ---------------------------------------------------------------------------
# extremal factors


def _scan_extremal(data: bytes, k: int, order: LexOrder, want_max: bool) -> tuple[bytes, int]:
    if k < 1:
        raise ValueError("factor length must be positive")
    if k > len(data):
        raise ValueError(f"factor length {k} exceeds available material {len(data)}")
    ranked = data.translate(order.table)
    best = None
    pos = 0
    for i in range(len(data) - k + 1):
        cand = ranked[i : i + k]
        if best is None or (cand > best if want_max else cand < best):
            best, pos = cand, i
    return data[pos : pos + k], pos


def _factor_material(w: FiniteWord | InfiniteWord, k: int, prefix_length: int | None) -> bytes:
    if isinstance(w, FiniteWord):
        return w.data
    if prefix_length is None:
        if isinstance(w, UltimatelyPeriodicWord):
            # every factor of u v^w occurs inside u v . first k-1 letters of v^w
            prefix_length = len(w.preperiod) + len(w.period) + k - 1
        else:
            prefix_length = default_material(k)
    return w.prefix_bytes(prefix_length)


def min_factor(
    w: FiniteWord | InfiniteWord,
    k: int,
    order: LexOrder | None = None,
    prefix_length: int | None = None,
) -> FiniteWord:
    """Lexicographically smallest length-k factor of the material."""
    order = order or LexOrder.natural(w.alphabet.size)
    data = _factor_material(w, k, prefix_length)
    best, _ = _scan_extremal(data, k, order, want_max=False)
    return FiniteWord(best, w.alphabet)


def max_factor(
    w: FiniteWord | InfiniteWord,
    k: int,
    order: LexOrder | None = None,
    prefix_length: int | None = None,
) -> FiniteWord:
    """Lexicographically greatest length-k factor of the material."""
    order = order or LexOrder.natural(w.alphabet.size)
    data = _factor_material(w, k, prefix_length)
    best, _ = _scan_extremal(data, k, order, want_max=True)
    return FiniteWord(best, w.alphabet)


def min_word(
    w: InfiniteWord, depth: int, order: LexOrder | None = None, prefix_length: int | None = None
) -> FiniteWord:
    """Length-``depth`` prefix of the limit min-word, computed from the material."""
    return min_factor(w, depth, order, prefix_length)


def max_word(
    w: InfiniteWord, depth: int, order: LexOrder | None = None, prefix_length: int | None = None
) -> FiniteWord:
    return max_factor(w, depth, order, prefix_length)


def min_finite(w: FiniteWord, order: LexOrder | None = None) -> FiniteWord:
    """min(w) for finite w: min(w|k) for the largest k keeping the chain of prefixes."""
    if len(w) == 0:
        raise ValueError("min of the empty word is undefined")
    order = order or LexOrder.natural(w.alphabet.size)
    prev, _ = _scan_extremal(w.data, 1, order, want_max=False)
    k = 1
    while k < len(w):
        nxt, _ = _scan_extremal(w.data, k + 1, order, want_max=False)
        if nxt[:k] != prev:
            break
        prev = nxt
        k += 1
    return FiniteWord(prev, w.alphabet)


def max_finite(w: FiniteWord, order: LexOrder | None = None) -> FiniteWord:
    """max(w) for finite binary w, dual to min_finite."""
    if w.alphabet.size != 2:
        raise ValueError("finite max is defined for binary alphabets only")
    if len(w) == 0:
        raise ValueError("max of the empty word is undefined")
    order = order or LexOrder.natural(2)
    prev, _ = _scan_extremal(w.data, 1, order, want_max=True)
    k = 1
    while k < len(w):
        nxt, _ = _scan_extremal(w.data, k + 1, order, want_max=True)
        if nxt[:k] != prev:
            break
        prev = nxt
        k += 1
    return FiniteWord(prev, w.alphabet)


# ---------------------------------------------------------------------------
# shift-inequality checks


def _names(alphabet: Alphabet, data: bytes) -> str:
    return "".join(alphabet.names[c] for c in data)


def _shift_chain_check(
    s: InfiniteWord,
    lower: bytes | None,
    upper: bytes | None,
    K: int,
    L: int,
    order: LexOrder,
) -> BoundedVerdict:
    """Verify lower <= T^k(s) <= upper for all k <= K at comparison depth L."""
    if K < 0 or L < 1:
        raise ValueError("bounds must be positive (K >= 0 shifts, L >= 1 depth)")
    data = s.prefix_bytes(K + L)
    table = order.table
    lo = lower.translate(table) if lower is not None else None
    hi = upper.translate(table) if upper is not None else None
    undecided = 0
    for k in range(K + 1):
        seg = data[k : k + L].translate(table)
        for bound, name, want in ((lo, "lower", Relation.LESS), (hi, "upper", Relation.GREATER)):
            if bound is None:
                continue
            out = _compare_ranked(seg, bound)
            if out.relation is want:
                raw = lower if name == "lower" else upper
                return BoundedVerdict(
                    False,
                    K,
                    L,
                    witness={
                        "shift": k,
                        "bound": name,
                        "depth": out.depth,
                        "expected": _names(s.alphabet, raw[: out.depth + 1]),
                        "found": _names(s.alphabet, data[k : k + out.depth + 1]),
                    },
                )
            if not out.decided:
                undecided += 1
    return BoundedVerdict(True, K, L, undecided=undecided)


def check_sturmian_extremal(s: InfiniteWord, u: InfiniteWord, K: int, L: int) -> BoundedVerdict:
    """Bounded check of 0u <= T^k(s) <= 1u for all k <= K at depth L (binary)."""
    if s.alphabet.size != 2 or u.alphabet.size != 2:
        raise ValueError("binary words required")
    up = u.prefix_bytes(L - 1)
    lower = bytes([0]) + up
    upper = bytes([1]) + up
    return _shift_chain_check(s, lower, upper, K, L, LexOrder.natural(2))


def characteristic_check(s: InfiniteWord, K: int, L: int) -> BoundedVerdict:
    """Bounded check of a.s <= T^k(s) <= b.s for all k <= K at depth L (binary)."""
    if s.alphabet.size != 2:
        raise ValueError("binary word required")
    sp = s.prefix_bytes(L - 1)
    return _shift_chain_check(s, bytes([0]) + sp, bytes([1]) + sp, K, L, LexOrder.natural(2))


@dataclass
class PairInequality:
    pair: AcceptablePair
    verdict: BoundedVerdict
    equality: bool

    def to_obj(self, alphabet: Alphabet) -> dict:
        obj = {"pair": self.pair.text(alphabet), "equality": self.equality}
        obj.update(self.verdict.to_obj())
        return obj


@dataclass
class EpistandardReport:
    """Per-pair verdicts on a.s <= min(s), with equality-attainment flags.

    ``strict`` is True when equality is attained for every pair inside the
    material, the observable trace of a strict (Arnoux-Rauzy) standard word.
    """

    holds: bool
    strict: bool
    pairs: list[PairInequality]
    shift_bound: int
    depth_bound: int
    material: int

    def to_obj(self, alphabet: Alphabet) -> dict:
        return {
            "status": "holds" if self.holds else "fails",
            "strict": self.strict,
            "K": self.shift_bound,
            "L": self.depth_bound,
            "material": self.material,
            "pairs": [p.to_obj(alphabet) for p in self.pairs],
        }


def check_epistandard_ineq(
    s: InfiniteWord, K: int, L: int, material: int | None = None
) -> EpistandardReport:
    """Bounded check of a.s <= T^k(s) for every acceptable pair (a, <).

    The inequality itself is verified shift by shift (k <= K, depth L).  The
    equality flag per pair reports whether the minimal length-K factor seen in
    the material equals (a.s) truncated to K letters, i.e. whether the
    infimum is attained by the material.
    """
    material = material if material is not None else default_material(K)
    data = s.prefix_bytes(max(material, K + L))
    results = []
    for pair in acceptable_pairs(s.alphabet):
        prefixed = bytes([pair.letter]) + data[: max(L, K) - 1]
        verdict = _shift_chain_check(s, prefixed[:L], None, K, L, pair.order)
        m, _ = _scan_extremal(data[:material], K, pair.order, want_max=False)
        results.append(PairInequality(pair, verdict, equality=(m == prefixed[:K])))
    return EpistandardReport(
        holds=all(r.verdict.holds for r in results),
        strict=all(r.equality for r in results),
        pairs=results,
        shift_bound=K,
        depth_bound=L,
        material=material,
    )


# ---------------------------------------------------------------------------
# finite-word characterizations


def finite_episturmian_test(w: FiniteWord) -> tuple[bool, FiniteWord | None]:
    """Decide whether some word u satisfies a.u_{|m|-1} <= m for every acceptable pair.

    Here m = min(w) under the pair's order.  The certificate u is built by
    backtracking letter by letter, consuming one <=-constraint per order;
    letters are tried in canonical order.  Returns (True, u) or (False, None).
    """
    if len(w) == 0:
        return True, FiniteWord(b"", w.alphabet)
    if w.alphabet.size > 4:
        raise ValueError("certificate search supported for alphabets of size <= 4")
    pairs = acceptable_pairs(w.alphabet)
    constraints = []  # (ranked target m[1:], that is, the part u must stay <= to)
    for pair in pairs:
        m = min_finite(w, pair.order)
        constraints.append(m.data[1:].translate(pair.order.table))
    size = w.alphabet.size
    length = max((len(c) for c in constraints), default=0)
    # state per constraint: position while tight; SAT once strictly below or fully matched
    SAT = -1

    def extend(u: list[int], states: list[int]) -> list[int] | None:
        if len(u) == length:
            return u
        i = len(u)
        for letter in range(size):
            nxt = []
            ok = True
            for c, (pair, target) in zip(states, zip(pairs, constraints)):
                if c == SAT or i >= len(target):
                    nxt.append(SAT)
                    continue
                rank = pair.order.rank(letter)
                if rank < target[i]:
                    nxt.append(SAT)
                elif rank == target[i]:
                    nxt.append(c + 1)
                else:
                    ok = False
                    break
            if ok:
                result = extend(u + [letter], nxt)
                if result is not None:
                    return result
        return None

    found = extend([], [0] * len(constraints))
    if found is None:
        return False, None
    return True, FiniteWord(found, w.alphabet)


def not_balanced_witness(w: FiniteWord) -> FiniteWord | None:
    """The word u with aua a prefix of min(w) and bub a prefix of max(w), if any."""
    if w.alphabet.size != 2:
        raise ValueError("binary alphabet required")
    if len(w) == 0:
        return None
    m = min_finite(w).data
    x = max_finite(w).data
    top = min(len(m), len(x)) - 2
    for ell in range(0, top + 1):
        if (
            m[0] == 0
            and m[ell + 1] == 0
            and x[0] == 1
            and x[ell + 1] == 1
            and m[1 : ell + 1] == x[1 : ell + 1]
        ):
            return FiniteWord(m[1 : ell + 1], w.alphabet)
    return None


# ---------------------------------------------------------------------------
# fine words and local balance


def fine_test(t: InfiniteWord, K: int, material: int | None = None) -> BoundedVerdict:
    """Check that the min-words of all acceptable pairs agree after their first letter.

    Min-words are length-K extremal factors of the material.  A disagreement
    inside the horizon is a definitive failure; agreement holds at the
    recorded bounds.
    """
    material = material if material is not None else default_material(K)
    data = t.prefix_bytes(material)
    pairs = acceptable_pairs(t.alphabet)
    mins = [(pair, _scan_extremal(data, K, pair.order, want_max=False)[0]) for pair in pairs]
    base_pair, base = mins[0]
    for pair, m in mins[1:]:
        if m[1:] != base[1:]:
            i = next(i for i in range(1, K) if m[i] != base[i])
            return BoundedVerdict(
                False,
                None,
                K,
                witness={
                    "pair_a": base_pair.text(t.alphabet),
                    "pair_b": pair.text(t.alphabet),
                    "depth": i,
                    "expected": _names(t.alphabet, base[: i + 1]),
                    "found": _names(t.alphabet, m[: i + 1]),
                },
                detail={"material": material},
            )
    return BoundedVerdict(
        True,
        None,
        K,
        detail={"material": material, "common_tail": _names(t.alphabet, base[1:21])},
    )


def local_balance_check(
    t: InfiniteWord | FiniteWord, n_max: int, prefix_length: int | None = None
) -> BoundedVerdict:
    """Check that each factor u (|u| <= n_max) admits a letter a with AuA ⊆ auA ∪ Aua.

    Also records whether the weaker palindromic-factors-only variant holds.
    """
    if isinstance(t, FiniteWord):
        data = t.data
    else:
        data = t.prefix_bytes(prefix_length if prefix_length is not None else 2000)
    if len(data) < n_max + 2:
        raise ValueError("material too short for the requested factor length")
    size = t.alphabet.size
    palindromic_ok = True
    verdict = None
    for m in range(0, n_max + 1):
        ext: dict[bytes, set[tuple[int, int]]] = {}
        for i in range(len(data) - m - 1):
            window = data[i : i + m + 2]
            ext.setdefault(window[1:-1], set()).add((window[0], window[-1]))
        for u, sides in sorted(ext.items()):
            if not any(all(x == a or y == a for x, y in sides) for a in range(size)):
                if verdict is None:
                    verdict = BoundedVerdict(
                        False,
                        None,
                        None,
                        witness={
                            "factor": _names(t.alphabet, u),
                            "extensions": sorted(
                                _names(t.alphabet, bytes([x])) + "_" + _names(t.alphabet, bytes([y]))
                                for x, y in sides
                            ),
                        },
                        detail={"n_max": n_max, "material": len(data)},
                    )
                if u == u[::-1]:
                    palindromic_ok = False
    if verdict is None:
        verdict = BoundedVerdict(True, None, None, detail={"n_max": n_max, "material": len(data)})
    verdict.detail["palindromic_variant_holds"] = palindromic_ok
    return verdict


# ---------------------------------------------------------------------------
# Gamma, allowed pairs, and the lexicographic world


def gamma_membership(u: InfiniteWord, K: int, L: int) -> BoundedVerdict:
    """Bounded check of complement(u) <= T^k(u) <= u for all k <= K at depth L."""
    if u.alphabet.size != 2:
        raise ValueError("binary word required")
    data = u.prefix_bytes(L)
    comp = complement(u).prefix_bytes(L)
    return _shift_chain_check(u, comp, data, K, L, LexOrder.natural(2))


def allowed_pair_check(r: InfiniteWord, s: InfiniteWord, K: int, L: int) -> BoundedVerdict:
    """Bounded check of r <= T^i(r) < s and r < T^i(s) <= s for all i <= K."""
    if r.alphabet.size != 2 or s.alphabet.size != 2:
        raise ValueError("binary words required")
    rp = r.prefix_bytes(L)
    sp = s.prefix_bytes(L)
    if rp == sp:
        raise ValueError("allowed pairs must be distinct (equal through the depth bound)")
    undecided = 0
    for source, lower, upper, lower_strict, upper_strict in (
        (r, rp, sp, False, True),
        (s, rp, sp, True, False),
    ):
        data = source.prefix_bytes(K + L)
        for i in range(K + 1):
            seg = data[i : i + L]
            lo = _compare_ranked(seg, lower)
            hi = _compare_ranked(seg, upper)
            bad = None
            if lo.relation is Relation.LESS:
                bad = ("lower", lo)
            elif lower_strict and not lo.decided:
                bad = ("lower-strict", lo)
            elif hi.relation is Relation.GREATER:
                bad = ("upper", hi)
            elif upper_strict and not hi.decided:
                bad = ("upper-strict", hi)
            if bad is not None:
                name, out = bad
                return BoundedVerdict(
                    False,
                    K,
                    L,
                    witness={
                        "word": source.recipe,
                        "shift": i,
                        "bound": name,
                        "depth": out.depth,
                    },
                )
            undecided += (not lo.decided) + (not hi.decided)
    return BoundedVerdict(True, K, L, undecided=undecided)


def sigma_xy_member(
    s: InfiniteWord, x: InfiniteWord, y: InfiniteWord, K: int, L: int
) -> BoundedVerdict:
    """Bounded membership of s in the set of words with x <= T^i(s) <= y for all i."""
    if s.alphabet.size != 2:
        raise ValueError("binary words required")
    return _shift_chain_check(s, x.prefix_bytes(L), y.prefix_bytes(L), K, L, LexOrder.natural(2))


@dataclass
class GanCandidate:
    """Result of the bounded search for the least upper companion of x."""

    word: InfiniteWord | None
    label: str
    searched: int

    def to_obj(self) -> dict:
        return {
            "candidate": None if self.word is None else self.word.recipe,
            "label": self.label,
            "searched": self.searched,
        }


def _default_characteristic_roster() -> list[InfiniteWord]:
    slopes = [
        fibonacci_slope(),                 # (3-sqrt(5))/2
        QuadraticSurd(-1, 1, 5, 2),        # (sqrt(5)-1)/2
        QuadraticSurd(2, -1, 2, 2),        # (2-sqrt(2))/2
        QuadraticSurd(-1, 1, 2, 1),        # sqrt(2)-1
        QuadraticSurd(-1, 1, 3, 2),        # (sqrt(3)-1)/2
        QuadraticSurd(2, -1, 3, 1),        # 2-sqrt(3)
    ]
    return [characteristic(a) for a in slopes]


def _max_rotation(v: bytes) -> bytes:
    return max(v[i:] + v[:i] for i in range(len(v)))


def gan_phi_approx(
    x: InfiniteWord,
    P: int,
    K: int,
    L: int,
    characteristic_roster: list[InfiniteWord] | None = None,
) -> GanCandidate:
    """Bounded search for the least shift-maximal companion word of x.

    When x begins with 1 the answer is 1^w.  Otherwise, writing x = 0u, the
    candidates are 1.c for the roster of characteristic words together with
    the shift-maximal rotations of the periodic balanced words (Pal(v)xy)^w
    with |v| <= P; the lexicographically least candidate satisfying
    x <= T^i(s) <= 1u and T^i(s) <= s at the bounds is returned.  This is a
    candidate at bounds (P, K, L), never an exact infimum.
    """
    if x.alphabet.size != 2:
        raise ValueError("binary word required")
    label = f"candidate at bounds (P={P}, K={K}, L={L})"
    if x.letter(0) == 1:
        ones = UltimatelyPeriodicWord.purely_periodic(FiniteWord(b"\x01", x.alphabet))
        return GanCandidate(ones, label, searched=0)
    u = x.shifted(1)
    upper = bytes([1]) + u.prefix_bytes(L - 1)
    lower = x.prefix_bytes(L)

    candidates: list[InfiniteWord] = []
    seen: set[bytes] = set()
    for c in characteristic_roster if characteristic_roster is not None else _default_characteristic_roster():
        w = prepend(FiniteWord(b"\x01", x.alphabet), c)
        key = w.prefix_bytes(L)
        if key not in seen:
            seen.add(key)
            candidates.append(w)
    alphabet = x.alphabet
    for n in range(0, P + 1):
        for bits in itertools.product((0, 1), repeat=n):
            v = FiniteWord(bits, alphabet)
            for a, b in ((0, 1), (1, 0)):
                z = periodic_balanced(v, a, b)
                rot = _max_rotation(z.period.data)
                w = UltimatelyPeriodicWord.purely_periodic(FiniteWord(rot, alphabet))
                key = w.prefix_bytes(L)
                if key not in seen:
                    seen.add(key)
                    candidates.append(w)

    candidates.sort(key=lambda w: w.prefix_bytes(L))
    for w in candidates:
        inside = _shift_chain_check(w, lower, upper, K, L, LexOrder.natural(2))
        if not inside.holds:
            continue
        maximal = _shift_chain_check(w, None, w.prefix_bytes(L), K, L, LexOrder.natural(2))
        if maximal.holds:
            return GanCandidate(w, label, searched=len(candidates))
    return GanCandidate(None, label, searched=len(candidates))
