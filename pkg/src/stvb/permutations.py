"""Symmetric group arithmetic and the epimorphisms onto S_n.

Permutations act on the right: ``compose(p, q)`` applies ``p`` first and then
``q``, so evaluating a word left to right is a plain fold of ``compose``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations as _all_tuples
from typing import Iterator

from .words import Alphabet, Kind, Word


class PermutationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection of {1..n} stored as its one-line image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise PermutationError(f"{imgs} is not a permutation of 1..{len(imgs)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(p == k for k, p in enumerate(self.images, 1))

    def oneline(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __str__(self) -> str:
        return self.cycle_notation()


def _trusted(images: tuple[int, ...]) -> Permutation:
    # skips the bijection check; callers guarantee validity
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", images)
    return p


def identity(n: int) -> Permutation:
    return _identity(n)


@lru_cache(maxsize=None)
def _identity(n: int) -> Permutation:
    if n < 1:
        raise PermutationError("n must be positive")
    return Permutation(tuple(range(1, n + 1)))


def transposition(n: int, i: int, j: int | None = None) -> Permutation:
    """The transposition (i, j); ``j`` defaults to ``i + 1``."""
    if j is None:
        j = i + 1
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise PermutationError(f"bad transposition ({i} {j}) in S_{n}")
    imgs = list(range(1, n + 1))
    imgs[i - 1], imgs[j - 1] = j, i
    return Permutation(tuple(imgs))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    if p.n != q.n:
        raise PermutationError(f"size mismatch {p.n} vs {q.n}")
    qi = q.images
    return _trusted(tuple(qi[k - 1] for k in p.images))


def invert(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for k, img in enumerate(p.images, 1):
        inv[img - 1] = k
    return _trusted(tuple(inv))


def all_permutations(n: int) -> Iterator[Permutation]:
    for t in _all_tuples(range(1, n + 1)):
        yield Permutation(t)


# -- homomorphisms onto S_n ---------------------------------------------------

class Rule(Enum):
    SWAP = "swap"  # letter of index i goes to (i, i+1)
    ID = "id"


class PermHom(str, Enum):
    PHI1 = "phi1"
    PHI2 = "phi2"
    PHI3 = "phi3"
    PI = "pi"
    BAR = "bar"

    def __str__(self) -> str:
        return self.value


_S, _I = Rule.SWAP, Rule.ID

HOM_RULES: dict[PermHom, dict[Kind, Rule]] = {
    PermHom.PHI1: {Kind.SIGMA: _S, Kind.SIGMA_INV: _S, Kind.TAU: _S, Kind.RHO: _S, Kind.GAMMA: _I},
    PermHom.PHI2: {Kind.SIGMA: _I, Kind.SIGMA_INV: _I, Kind.TAU: _I, Kind.RHO: _S, Kind.GAMMA: _I},
    PermHom.PHI3: {Kind.SIGMA: _S, Kind.SIGMA_INV: _S, Kind.TAU: _I, Kind.RHO: _S, Kind.GAMMA: _I},
    PermHom.PI: {
        Kind.SIGMA: _S, Kind.SIGMA_INV: _S, Kind.TAU: _S, Kind.TAU_BAR: _S,
        Kind.RHO: _S, Kind.GAMMA: _I,
    },
    PermHom.BAR: {Kind.RHO: _S},
}

# Group-word extensions used by the invariant vector only: tau bar must go
# where tau goes, since the image of tau is an involution or trivial.
GROUP_EXTENSION: dict[PermHom, dict[Kind, Rule]] = {
    h: {**rules, Kind.TAU_BAR: rules[Kind.TAU]}
    for h, rules in HOM_RULES.items()
    if Kind.TAU in rules
}

#: submonoid alphabet whose generators the kernel of each hom is written in
KERNEL_ALPHABET = {
    PermHom.PHI1: Alphabet.SUB_P,
    PermHom.PHI2: Alphabet.SUB_H,
    PermHom.PHI3: Alphabet.SUB_M,
}
HOM_FOR_ALPHABET = {v: k for k, v in KERNEL_ALPHABET.items()}


class HomDomainError(PermutationError):
    pass


def eval_rules(w: Word, rules: dict[Kind, Rule], name: str = "hom") -> Permutation:
    n = w.n
    imgs = list(range(1, n + 1))
    for a in w.letters:
        rule = rules.get(a.kind)
        if rule is None:
            raise HomDomainError(f"{name} is not defined on letter {a}")
        if rule is Rule.SWAP:
            # right multiplication by (i, i+1) relabels the values i and i+1
            i = a.i
            for k in range(n):
                v = imgs[k]
                if v == i:
                    imgs[k] = i + 1
                elif v == i + 1:
                    imgs[k] = i
    return _trusted(tuple(imgs))


def eval_hom(w: Word, h: PermHom | str) -> Permutation:
    """Image of ``w`` in S_n, multiplying letter images left to right."""
    h = PermHom(h)
    if w.tag not in (Alphabet.BRAID, Alphabet.BRAID_GROUP):
        raise HomDomainError(f"{h} is defined on braid-side words, not {w.tag}")
    return eval_rules(w, HOM_RULES[h], h.value)


def is_in_kernel(w: Word, h: PermHom | str) -> bool:
    return eval_hom(w, h).is_identity()


def applicable_homs(tag: Alphabet) -> list[PermHom]:
    if tag is Alphabet.BRAID:
        return [PermHom.PHI1, PermHom.PHI2, PermHom.PHI3, PermHom.PI]
    if tag is Alphabet.BRAID_GROUP:
        return [PermHom.PI]
    raise HomDomainError(f"no homomorphism to S_n is defined on {tag}")
