"""Constructions of the classical word families, all from exact data.

Mechanical words are produced letter by letter from exact surd floors;
epistandard words by iterated palindromic closure of a directive word;
morphic images by letterwise substitution.  Everything irrational is a
quadratic surd, so no floating point enters any construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surds import QuadraticSurd
from .words import (
    BINARY,
    Alphabet,
    FiniteWord,
    InfiniteWord,
    UltimatelyPeriodicWord,
)

__all__ = [
    "DirectiveWord",
    "Morphism",
    "pal_closure",
    "iterated_pal",
    "epistandard",
    "kbonacci",
    "mechanical_lower",
    "mechanical_upper",
    "characteristic",
    "thue_morse",
    "skew_word",
    "periodic_balanced",
    "fibonacci_slope",
]


def fibonacci_slope() -> QuadraticSurd:
    """(3 - sqrt(5))/2, the slope whose characteristic word starts 01001010."""
    return QuadraticSurd(3, -1, 5, 2)


# ---------------------------------------------------------------------------
# directive words

@dataclass(frozen=True)
class DirectiveWord:
    """A finite directive word, or an eventually periodic one (preperiod + cycle)."""

    preperiod: FiniteWord
    cycle: FiniteWord | None = None

    def __post_init__(self):
        if self.cycle is not None and len(self.cycle) == 0:
            raise ValueError("directive cycle must be non-empty")
        if self.cycle is not None and self.cycle.alphabet.size != self.preperiod.alphabet.size:
            raise ValueError("alphabet mismatch")

    @staticmethod
    def finite(w: FiniteWord) -> "DirectiveWord":
        return DirectiveWord(w, None)

    @staticmethod
    def from_text(text: str, alphabet: Alphabet | None = None) -> "DirectiveWord":
        """Parse "abc" (finite), "abc*" for (abc)^w, or "ab|cd" for ab(cd)^w."""
        text = text.strip()
        cycle_text = None
        if "|" in text:
            pre_text, cycle_text = text.split("|", 1)
            cycle_text = cycle_text.rstrip("*")
        elif text.endswith("*"):
            pre_text, cycle_text = "", text[:-1]
        else:
            pre_text = text
        if alphabet is None:
            seen = sorted(set(pre_text + (cycle_text or "")))
            if all(c in "abcdefgh" for c in seen):
                hi = max(("abcdefgh".index(c) for c in seen), default=0)
                alphabet = Alphabet.of_size(max(hi + 1, 2))
            else:
                alphabet = BINARY
        pre = FiniteWord([alphabet.index(c) for c in pre_text], alphabet)
        if cycle_text is None:
            return DirectiveWord(pre, None)
        cyc = FiniteWord([alphabet.index(c) for c in cycle_text], alphabet)
        return DirectiveWord(pre, cyc)

    @property
    def alphabet(self) -> Alphabet:
        return self.preperiod.alphabet

    @property
    def is_finite(self) -> bool:
        return self.cycle is None

    def letter(self, i: int) -> int:
        if i < len(self.preperiod):
            return self.preperiod[i]
        if self.cycle is None:
            raise IndexError("finite directive word exhausted")
        return self.cycle[(i - len(self.preperiod)) % len(self.cycle)]

    def text(self) -> str:
        pre = self.preperiod.as_str()
        if self.cycle is None:
            return pre
        cyc = self.cycle.as_str()
        return f"{pre}|{cyc}" if pre else f"{cyc}*"


# ---------------------------------------------------------------------------
# palindromic closure

def _pal_closure_bytes(data: bytes) -> bytes:
    # scan for the longest palindromic suffix, longest first
    for start in range(len(data)):
        suf = data[start:]
        if suf == suf[::-1]:
            return data + data[:start][::-1]
    return data  # empty


def pal_closure(w: FiniteWord) -> FiniteWord:
    """The shortest palindrome having w as a prefix."""
    return FiniteWord(_pal_closure_bytes(w.data), w.alphabet)


def iterated_pal(directive: FiniteWord) -> FiniteWord:
    """Iterated palindromic closure of a finite directive word."""
    pal = b""
    for x in directive.data:
        pal = _pal_closure_bytes(pal + bytes([x]))
    return FiniteWord(pal, directive.alphabet)


def epistandard(delta: DirectiveWord) -> InfiniteWord:
    """The standard word directed by delta: the limit of its iterated closures.

    With a finite directive the word is only defined up to the final closure;
    prefix requests past that point raise ValueError.
    """

    def stream():
        pal = b""
        emitted = 0
        i = 0
        while True:
            try:
                x = delta.letter(i)
            except IndexError:
                return
            pal = _pal_closure_bytes(pal + bytes([x]))
            yield from pal[emitted:]
            emitted = len(pal)
            i += 1

    return InfiniteWord(stream(), delta.alphabet, f"epistandard({delta.text()})")


def kbonacci(k: int) -> InfiniteWord:
    """The k-bonacci word: the standard word cyclically directed by all k letters."""
    if not 2 <= k <= 8:
        raise ValueError("k must be between 2 and 8")
    alphabet = Alphabet.of_size(k)
    cycle = FiniteWord(range(k), alphabet)
    return epistandard(DirectiveWord(FiniteWord(b"", alphabet), cycle))


# ---------------------------------------------------------------------------
# mechanical words

def _as_surd(x) -> QuadraticSurd:
    if isinstance(x, QuadraticSurd):
        return x
    return QuadraticSurd.from_fraction(x)


def _mechanical(alpha, rho, use_ceiling: bool, alphabet: Alphabet, kind: str) -> InfiniteWord:
    alpha = _as_surd(alpha)
    rho = _as_surd(rho)
    if alpha.compare(0) <= 0:
        raise ValueError("slope must be positive")
    floor_alpha = alpha.floor()

    def value(x: QuadraticSurd) -> int:
        return x.ceil() if use_ceiling else x.floor()

    def stream():
        acc = rho
        prev = value(acc)
        while True:
            acc2 = acc + alpha
            cur = value(acc2)
            yield 0 if cur - prev == floor_alpha else 1
            acc, prev = acc2, cur

    if alpha.is_rational:
        # slope p/q: the letter sequence repeats with period q from the start
        q = alpha.as_fraction().denominator
        period = bytes(letter for letter, _ in zip(stream(), range(q)))
        return UltimatelyPeriodicWord.purely_periodic(FiniteWord(period, alphabet))
    return InfiniteWord(stream(), alphabet, f"{kind}({alpha!r},{rho!r})")


def mechanical_lower(alpha, rho, alphabet: Alphabet = BINARY) -> InfiniteWord:
    """Letters from floor differences of n*alpha + rho; Sturmian when alpha is irrational."""
    return _mechanical(alpha, rho, False, alphabet, "mechanical_lower")


def mechanical_upper(alpha, rho, alphabet: Alphabet = BINARY) -> InfiniteWord:
    """Ceiling-difference variant of the mechanical construction."""
    return _mechanical(alpha, rho, True, alphabet, "mechanical_upper")


def characteristic(alpha, alphabet: Alphabet = BINARY) -> InfiniteWord:
    """The mechanical word with intercept equal to its slope.

    Irrational slopes give characteristic Sturmian words; rational slopes are
    routed to the periodic constructor and come back as purely periodic
    characteristic balanced words.
    """
    return mechanical_lower(alpha, alpha, alphabet)


# ---------------------------------------------------------------------------
# morphisms

@dataclass(frozen=True)
class Morphism:
    """A letter-to-word substitution over a fixed alphabet."""

    alphabet: Alphabet
    images: tuple[FiniteWord, ...]

    def __post_init__(self):
        if len(self.images) != self.alphabet.size:
            raise ValueError("one image per letter required")
        if any(im.alphabet.size != self.alphabet.size for im in self.images):
            raise ValueError("images must live over the same alphabet")

    @property
    def is_erasing(self) -> bool:
        return any(len(im) == 0 for im in self.images)

    @staticmethod
    def identity(alphabet: Alphabet) -> "Morphism":
        return Morphism(alphabet, tuple(FiniteWord([c], alphabet) for c in range(alphabet.size)))

    @staticmethod
    def psi(letter: int, alphabet: Alphabet) -> "Morphism":
        """letter -> letter, x -> letter.x for every other letter x."""
        images = tuple(
            FiniteWord([c] if c == letter else [letter, c], alphabet)
            for c in range(alphabet.size)
        )
        return Morphism(alphabet, images)

    @staticmethod
    def psi_bar(letter: int, alphabet: Alphabet) -> "Morphism":
        """letter -> letter, x -> x.letter for every other letter x."""
        images = tuple(
            FiniteWord([c] if c == letter else [c, letter], alphabet)
            for c in range(alphabet.size)
        )
        return Morphism(alphabet, images)

    @staticmethod
    def exchange(a: int, b: int, alphabet: Alphabet) -> "Morphism":
        perm = list(range(alphabet.size))
        perm[a], perm[b] = perm[b], perm[a]
        return Morphism(alphabet, tuple(FiniteWord([c], alphabet) for c in perm))

    @staticmethod
    def from_text(text: str, alphabet: Alphabet) -> "Morphism":
        """Parse a literal like "a>ab,b>a"; unlisted letters map to themselves."""
        images = [FiniteWord([c], alphabet) for c in range(alphabet.size)]
        for rule in text.split(","):
            src, _, dst = rule.partition(">")
            images[alphabet.index(src.strip())] = FiniteWord(
                [alphabet.index(c) for c in dst.strip()], alphabet
            )
        return Morphism(alphabet, tuple(images))

    def apply(self, w: FiniteWord | InfiniteWord):
        if w.alphabet.size != self.alphabet.size:
            raise ValueError("alphabet mismatch")
        if isinstance(w, FiniteWord):
            return FiniteWord(
                b"".join(self.images[c].data for c in w.data), self.alphabet
            )
        if self.is_erasing:
            raise ValueError("cannot apply an erasing morphism to an infinite word")
        if isinstance(w, UltimatelyPeriodicWord):
            return UltimatelyPeriodicWord(self.apply(w.preperiod), self.apply(w.period))
        parent = w

        def stream():
            i = 0
            while True:
                yield from self.images[parent.letter(i)].data
                i += 1

        return InfiniteWord(stream(), self.alphabet, f"image({w.recipe})")

    def __call__(self, w):
        return self.apply(w)

    def compose(self, inner: "Morphism") -> "Morphism":
        """self after inner: apply(compose(m1, m2), w) == apply(m1, apply(m2, w))."""
        if inner.alphabet.size != self.alphabet.size:
            raise ValueError("alphabet mismatch")
        return Morphism(self.alphabet, tuple(self.apply(im) for im in inner.images))

    def text(self) -> str:
        names = self.alphabet.names
        return ",".join(f"{names[c]}>{im.as_str()}" for c, im in enumerate(self.images))


# ---------------------------------------------------------------------------
# named families

def thue_morse(alphabet: Alphabet = BINARY) -> InfiniteWord:
    """Fixed point starting with 0 of 0 -> 01, 1 -> 10: bit-parity of the index."""
    if alphabet.size != 2:
        raise ValueError("binary alphabet required")

    def stream():
        n = 0
        while True:
            yield bin(n).count("1") & 1
            n += 1

    return InfiniteWord(stream(), alphabet, "thue_morse", letter_fn=lambda n: bin(n).count("1") & 1)


def skew_word(mu: Morphism, x: int, y: int, ell: int) -> UltimatelyPeriodicWord:
    """mu(x^ell y x^omega): ultimately periodic, non-periodic, with balanced factors."""
    alphabet = mu.alphabet
    if alphabet.size != 2 or {x, y} != {0, 1}:
        raise ValueError("x, y must be the two letters of a binary alphabet")
    if mu.is_erasing:
        raise ValueError("erasing morphism")
    head = mu.apply(FiniteWord([x] * ell + [y], alphabet))
    period = mu.apply(FiniteWord([x], alphabet))
    word = UltimatelyPeriodicWord(head, period)
    if word.is_purely_periodic:
        raise ValueError("degenerate morphism: image collapsed to a periodic word")
    return word


def periodic_balanced(v: FiniteWord, x: int, y: int) -> UltimatelyPeriodicWord:
    """The purely periodic word (Pal(v) x y)^omega."""
    alphabet = v.alphabet
    if alphabet.size != 2 or x == y or not {x, y} <= {0, 1}:
        raise ValueError("x, y must be the two distinct letters of a binary alphabet")
    period = iterated_pal(v) + FiniteWord([x, y], alphabet)
    return UltimatelyPeriodicWord.purely_periodic(period)
