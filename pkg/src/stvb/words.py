"""Generator alphabets, words and the token syntax.

Braid-side letters are ``s<i>`` (sigma), ``S<i>`` (sigma inverse), ``r<i>``
(virtual crossing rho), ``t<i>`` (singular crossing tau), ``T<i>`` (tau bar,
group context only) and ``g<i>`` (twist bar gamma).  Submonoid letters carry
two indices, ``l<i>,<j>`` / ``L<i>,<j>`` (lambda and its inverse),
``y<i>,<j>``, ``x<i>,<j>`` / ``X<i>,<j>`` and ``z<i>,<j>``; gamma keeps the
one-index token ``g<j>``.

Words never simplify themselves: ``r1 r1`` stays a word of length two.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator


class Kind(str, Enum):
    SIGMA = "s"
    SIGMA_INV = "S"
    RHO = "r"
    TAU = "t"
    TAU_BAR = "T"
    GAMMA = "g"
    LAM = "l"
    LAM_INV = "L"
    Y = "y"
    Y_INV = "Y"
    X = "x"
    X_INV = "X"
    Z = "z"

    def __str__(self) -> str:
        return self.value


class Alphabet(str, Enum):
    BRAID = "braid"
    BRAID_GROUP = "braid-group"
    SUB_P = "sub-p"
    SUB_H = "sub-h"
    SUB_M = "sub-m"
    SUB_PG = "sub-pg"

    def __str__(self) -> str:
        return self.value


CROSSING_KINDS = frozenset({Kind.SIGMA, Kind.SIGMA_INV, Kind.RHO, Kind.TAU, Kind.TAU_BAR})
TWO_INDEX_KINDS = frozenset(
    {Kind.LAM, Kind.LAM_INV, Kind.Y, Kind.Y_INV, Kind.X, Kind.X_INV, Kind.Z}
)

ALPHABET_KINDS: dict[Alphabet, frozenset[Kind]] = {
    Alphabet.BRAID: frozenset({Kind.SIGMA, Kind.SIGMA_INV, Kind.RHO, Kind.TAU, Kind.GAMMA}),
    Alphabet.BRAID_GROUP: frozenset(
        {Kind.SIGMA, Kind.SIGMA_INV, Kind.RHO, Kind.TAU, Kind.TAU_BAR, Kind.GAMMA}
    ),
    Alphabet.SUB_P: frozenset({Kind.LAM, Kind.LAM_INV, Kind.Y, Kind.GAMMA}),
    Alphabet.SUB_H: frozenset({Kind.X, Kind.X_INV, Kind.Z, Kind.GAMMA}),
    Alphabet.SUB_M: frozenset({Kind.LAM, Kind.LAM_INV, Kind.Z, Kind.GAMMA}),
    Alphabet.SUB_PG: frozenset({Kind.LAM, Kind.LAM_INV, Kind.Y, Kind.Y_INV, Kind.GAMMA}),
}

BRAID_SIDE = frozenset({Alphabet.BRAID, Alphabet.BRAID_GROUP})
GROUP_TAGS = frozenset({Alphabet.BRAID_GROUP, Alphabet.SUB_PG})

_INVERSE_KIND = {
    Kind.SIGMA: Kind.SIGMA_INV,
    Kind.SIGMA_INV: Kind.SIGMA,
    Kind.RHO: Kind.RHO,
    Kind.GAMMA: Kind.GAMMA,
    Kind.TAU: Kind.TAU_BAR,
    Kind.TAU_BAR: Kind.TAU,
    Kind.LAM: Kind.LAM_INV,
    Kind.LAM_INV: Kind.LAM,
    Kind.X: Kind.X_INV,
    Kind.X_INV: Kind.X,
    Kind.Y: Kind.Y_INV,
    Kind.Y_INV: Kind.Y,
}


class WordError(ValueError):
    """Raised for malformed tokens, bad indices or alphabet mismatches."""


@dataclass(frozen=True, order=True)
class Letter:
    """One generator.  ``j`` is 0 for one-index kinds."""

    kind: Kind
    i: int
    j: int = 0

    def check(self, n: int) -> None:
        k = self.kind
        if k in CROSSING_KINDS:
            if not 1 <= self.i <= n - 1 or self.j:
                raise WordError(f"{self.token()}: index must lie in 1..{n - 1}")
        elif k is Kind.GAMMA:
            if not 1 <= self.i <= n or self.j:
                raise WordError(f"{self.token()}: index must lie in 1..{n}")
        else:
            if not (1 <= self.i <= n and 1 <= self.j <= n) or self.i == self.j:
                raise WordError(f"{self.token()}: need distinct indices in 1..{n}")

    def token(self) -> str:
        if self.kind in TWO_INDEX_KINDS:
            return f"{self.kind.value}{self.i},{self.j}"
        return f"{self.kind.value}{self.i}"

    def __str__(self) -> str:
        return self.token()


@dataclass(frozen=True)
class Word:
    """Immutable word over one alphabet on ``n`` strands."""

    tag: Alphabet
    n: int
    letters: tuple[Letter, ...] = field(default=())

    def __post_init__(self):
        if self.n < 2:
            raise WordError("strand count must be at least 2")
        allowed = ALPHABET_KINDS[self.tag]
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for a in letters:
            if a.kind not in allowed:
                if a.kind is Kind.TAU_BAR:
                    raise WordError("tau bar letters need a group alphabet")
                raise WordError(f"letter {a} not in alphabet {self.tag}")
            a.check(self.n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.tag, self.n, self.letters[item])
        return self.letters[item]

    def __add__(self, other: Word) -> Word:
        return concat(self, other)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({self.tag.value}, n={self.n}, {format_word(self)!r})"

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def kinds(self) -> set[Kind]:
        return {a.kind for a in self.letters}

    def retag(self, tag: Alphabet) -> Word:
        return Word(tag, self.n, self.letters)


def identity(tag: Alphabet, n: int) -> Word:
    return Word(tag, n, ())


_TOKEN = re.compile(r"^([sSrtTglLyYxXz])(\d+)(?:,(\d+))?$")


def parse_letter(token: str, tag: Alphabet) -> Letter:
    m = _TOKEN.match(token)
    if not m:
        raise WordError(f"unknown token {token!r}")
    kind = Kind(m.group(1))
    i = int(m.group(2))
    second = m.group(3)
    if kind in TWO_INDEX_KINDS:
        if second is None:
            raise WordError(f"token {token!r} needs two indices")
        return Letter(kind, i, int(second))
    if second is not None:
        raise WordError(f"token {token!r} takes one index")
    if kind is Kind.TAU_BAR and tag not in GROUP_TAGS:
        raise WordError(f"token {token!r} needs a group alphabet")
    return Letter(kind, i)


def parse_word(text: str, tag: Alphabet | str = Alphabet.BRAID, n: int = 3) -> Word:
    """Parse whitespace-separated tokens; the empty string is the identity."""
    tag = Alphabet(tag)
    return Word(tag, n, tuple(parse_letter(tok, tag) for tok in text.split()))


def format_word(w: Word) -> str:
    return " ".join(a.token() for a in w.letters)


def word(text: str, n: int, tag: Alphabet | str = Alphabet.BRAID) -> Word:
    """Shorthand for :func:`parse_word` with ``n`` before the tag."""
    return parse_word(text, tag, n)


def concat(u: Word, v: Word) -> Word:
    if u.tag is not v.tag or u.n != v.n:
        raise WordError(f"cannot concatenate {u.tag}/{u.n} with {v.tag}/{v.n}")
    return Word(u.tag, u.n, u.letters + v.letters)


def product(words: Iterable[Word], tag: Alphabet, n: int) -> Word:
    letters: list[Letter] = []
    for w in words:
        if w.tag is not tag or w.n != n:
            raise WordError(f"cannot concatenate {w.tag}/{w.n} into {tag}/{n}")
        letters.extend(w.letters)
    return Word(tag, n, tuple(letters))


def inverse_letter(a: Letter, tag: Alphabet) -> Letter:
    k = a.kind
    if k in (Kind.TAU, Kind.TAU_BAR, Kind.Y, Kind.Y_INV) and tag not in GROUP_TAGS:
        raise WordError(f"{a} has no inverse in the monoid alphabet {tag}")
    if k not in _INVERSE_KIND:
        raise WordError(f"{a} has no inverse")
    return Letter(_INVERSE_KIND[k], a.i, a.j)


def formal_inverse(w: Word) -> Word:
    """Reverse the word and invert every letter."""
    return Word(w.tag, w.n, tuple(inverse_letter(a, w.tag) for a in reversed(w.letters)))


# -- submonoid generator expansion -------------------------------------------

def _rho_run(start: int, stop: int) -> list[Letter]:
    """rho_start rho_(start+-1) ... rho_stop, stepping toward ``stop``."""
    step = 1 if stop >= start else -1
    return [Letter(Kind.RHO, k) for k in range(start, stop + step, step)]


_BASE_CORE = {
    # core word of the adjacent generator (i, i+1)
    Kind.LAM: lambda i: [Letter(Kind.RHO, i), Letter(Kind.SIGMA_INV, i)],
    Kind.Y: lambda i: [Letter(Kind.TAU, i), Letter(Kind.RHO, i)],
    Kind.X: lambda i: [Letter(Kind.SIGMA, i)],
    Kind.Z: lambda i: [Letter(Kind.TAU, i)],
}

_POSITIVE = {Kind.LAM_INV: Kind.LAM, Kind.X_INV: Kind.X, Kind.Y_INV: Kind.Y}

EXPANSION_TAG = {
    Alphabet.SUB_P: Alphabet.BRAID,
    Alphabet.SUB_H: Alphabet.BRAID,
    Alphabet.SUB_M: Alphabet.BRAID,
    Alphabet.SUB_PG: Alphabet.BRAID_GROUP,
}


def _expand_positive(kind: Kind, i: int, j: int) -> list[Letter]:
    lo, hi = min(i, j), max(i, j)
    core = _BASE_CORE[kind](lo)
    if i > j:
        # g_(lo+1, lo) = rho_lo g_(lo, lo+1) rho_lo
        core = [Letter(Kind.RHO, lo), *core, Letter(Kind.RHO, lo)]
    if hi - lo > 1:
        core = _rho_run(hi - 1, lo + 1) + core + _rho_run(lo + 1, hi - 1)
    return core


def expand_letter(a: Letter, n: int) -> list[Letter]:
    """Braid-alphabet letters of one submonoid generator."""
    if a.kind is Kind.GAMMA:
        return [a]
    if a.kind in _POSITIVE:
        pos = _expand_positive(_POSITIVE[a.kind], a.i, a.j)
        return [inverse_letter(b, Alphabet.BRAID_GROUP) for b in reversed(pos)]
    if a.kind in _BASE_CORE:
        return _expand_positive(a.kind, a.i, a.j)
    raise WordError(f"{a} is not a submonoid generator")


def expand_subgenerator(g: Letter, n: int, tag: Alphabet = Alphabet.SUB_P) -> Word:
    """Expand one submonoid generator into the braid alphabet.

    ``tag`` is the submonoid alphabet ``g`` belongs to; it decides whether the
    result is a monoid word or a group word (``y`` inverses need tau bar).
    """
    g.check(n)
    if g.kind not in ALPHABET_KINDS[tag]:
        raise WordError(f"{g} is not a generator of {tag}")
    return Word(EXPANSION_TAG[tag], n, tuple(expand_letter(g, n)))


def expand_word(w: Word) -> Word:
    """Expand every letter of a submonoid word."""
    if w.tag in BRAID_SIDE:
        return w
    out: list[Letter] = []
    for a in w.letters:
        out.extend(expand_letter(a, w.n))
    return Word(EXPANSION_TAG[w.tag], w.n, tuple(out))
