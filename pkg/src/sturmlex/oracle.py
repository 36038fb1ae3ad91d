"""Brute-force ground truth: exhaustive enumerations and naive recomputations.

These routines deliberately avoid the analysis code paths they are used to
check.  Balance is tested straight from the definition (all pairs of
equal-length factors), extremal factors by sorting the full factor list, and
the episturmian corpus by collecting factors of explicitly generated words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .generators import DirectiveWord, epistandard, kbonacci
from .words import Alphabet, FiniteWord, InfiniteWord, LexOrder

__all__ = [
    "enumerate_balanced",
    "balanced_by_definition",
    "OracleCorpus",
    "episturmian_factor_corpus",
    "default_roster",
    "naive_min_max",
]

MAX_ENUM_LENGTH = 16


def balanced_by_definition(data: bytes) -> bool:
    """Balance tested literally: every pair of equal-length windows, counted."""
    n = len(data)
    for length in range(1, n + 1):
        counts = {data[i : i + length].count(1) for i in range(n - length + 1)}
        if max(counts) - min(counts) >= 2:
            return False
    return True


def enumerate_balanced(n: int) -> set[FiniteWord]:
    """All balanced binary words of length n, by testing every word."""
    if not 1 <= n <= MAX_ENUM_LENGTH:
        raise ValueError(f"enumeration supported for lengths 1..{MAX_ENUM_LENGTH}")
    alphabet = Alphabet(("0", "1"))
    out = set()
    for bits in itertools.product((0, 1), repeat=n):
        data = bytes(bits)
        if balanced_by_definition(data):
            out.add(FiniteWord(data, alphabet))
    return out


def default_roster() -> list[InfiniteWord]:
    """Epistandard words used as the corpus generators: k-bonacci plus sampled directives."""
    roster: list[InfiniteWord] = [kbonacci(2), kbonacci(3), kbonacci(4)]
    for text in ("aab*", "abb*", "ab|ba", "abcb*", "a|ab"):
        roster.append(epistandard(DirectiveWord.from_text(text)))
    return roster


@dataclass
class OracleCorpus:
    """A deterministic, labelled subset of the finite episturmian words."""

    n_max: int
    prefix_budget: int
    generators: tuple[str, ...]
    words: set[FiniteWord]
    label: str = "subset of finite episturmian words"

    def count(self) -> int:
        return len(self.words)

    def dump(self) -> str:
        lines = [
            f"# corpus: {self.label}",
            f"# n_max={self.n_max} prefix_budget={self.prefix_budget} count={self.count()}",
            f"# generators: {'; '.join(self.generators)}",
        ]
        lines.extend(sorted(w.as_str() for w in self.words))
        return "\n".join(lines) + "\n"


def episturmian_factor_corpus(
    roster: list[InfiniteWord] | None = None,
    n_max: int = 8,
    prefix_budget: int = 600,
) -> OracleCorpus:
    """Union of the length <= n_max factors of the roster's prefixes.

    Sound but deliberately incomplete beyond two letters: no exhaustive
    enumeration of episturmian factors exists at desk scale.
    """
    roster = roster if roster is not None else default_roster()
    words: set[FiniteWord] = set()
    for w in roster:
        data = w.prefix_bytes(prefix_budget)
        for n in range(1, n_max + 1):
            for i in range(len(data) - n + 1):
                words.add(FiniteWord(data[i : i + n], w.alphabet))
    return OracleCorpus(
        n_max, prefix_budget, tuple(w.recipe for w in roster), words
    )


def naive_min_max(
    w: FiniteWord | InfiniteWord,
    k: int,
    order: LexOrder | None = None,
    prefix_length: int | None = None,
) -> tuple[FiniteWord, FiniteWord]:
    """Extremal length-k factors recomputed by sorting the full factor list."""
    if isinstance(w, FiniteWord):
        data = w.data
    else:
        if prefix_length is None:
            raise ValueError("infinite word: a prefix length is required")
        data = w.prefix_bytes(prefix_length)
    if k < 1 or k > len(data):
        raise ValueError("factor length out of range")
    order = order or LexOrder.natural(w.alphabet.size)
    table = order.table
    ranked = sorted(
        (data[i : i + k].translate(table), data[i : i + k])
        for i in range(len(data) - k + 1)
    )
    return (
        FiniteWord(ranked[0][1], w.alphabet),
        FiniteWord(ranked[-1][1], w.alphabet),
    )
