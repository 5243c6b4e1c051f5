"""Schreier transversal, Schreier generators and the rewriting process f.

The coset representatives are the rho-words ``m_(2,j2) m_(3,j3) ... m_(n,jn)``
with ``m_(k,l) = rho_(k-1) rho_(k-2) ... rho_l`` (empty when ``l = k``).  Since
rho generates a copy of S_n, a representative is looked up through its
permutation image instead of searching words.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .permutations import (
    HOM_RULES,
    KERNEL_ALPHABET,
    PermHom,
    Permutation,
    Rule,
    compose,
    eval_hom,
    identity,
    invert,
    transposition,
)
from .words import Alphabet, Kind, Letter, Word, WordError

MAX_TRANSVERSAL_N = 8


class SchreierError(ValueError):
    pass


@dataclass(frozen=True)
class TransversalElement:
    n: int
    choice: tuple[int, ...]  # (j_2, ..., j_n)
    word: Word
    perm: Permutation

    def __str__(self) -> str:
        return str(self.word) or "e"


def m_word(k: int, l: int) -> list[Letter]:
    """rho_(k-1) ... rho_l, or nothing when l == k."""
    return [Letter(Kind.RHO, q) for q in range(k - 1, l - 1, -1)]


def _element(n: int, choice: tuple[int, ...]) -> TransversalElement:
    letters: list[Letter] = []
    for k, jk in zip(range(2, n + 1), choice):
        letters.extend(m_word(k, jk))
    w = Word(Alphabet.BRAID, n, tuple(letters))
    return TransversalElement(n, choice, w, eval_hom(w, PermHom.BAR))


@lru_cache(maxsize=None)
def _transversal(n: int) -> tuple[TransversalElement, ...]:
    ranges = [range(1, k + 1) for k in range(2, n + 1)]
    return tuple(_element(n, c) for c in product(*ranges))


@lru_cache(maxsize=None)
def _by_perm(n: int) -> dict[Permutation, TransversalElement]:
    return {el.perm: el for el in _transversal(n)}


def build_transversal(n: int) -> list[TransversalElement]:
    """All n! coset representatives, lexicographic in (j_2, ..., j_n)."""
    if not 2 <= n <= MAX_TRANSVERSAL_N:
        raise SchreierError(f"transversal supported for 2 <= n <= {MAX_TRANSVERSAL_N}")
    return list(_transversal(n))


def element_for(perm: Permutation) -> TransversalElement:
    if not 2 <= perm.n <= MAX_TRANSVERSAL_N:
        raise SchreierError(f"transversal supported for 2 <= n <= {MAX_TRANSVERSAL_N}")
    return _by_perm(perm.n)[perm]


def _kernel_hom(h) -> PermHom:
    h = PermHom(h)
    if h not in KERNEL_ALPHABET:
        raise SchreierError(f"no Schreier rewriting for {h}")
    return h


def representative(w: Word, h: PermHom | str) -> TransversalElement:
    h = _kernel_hom(h)
    return element_for(eval_hom(w, h))


# -- generators ---------------------------------------------------------------

def relabel(g: Letter, perm: Permutation) -> Letter:
    """Move the indices of a submonoid generator along ``perm``."""
    if g.kind in (Kind.GAMMA,):
        return Letter(g.kind, perm(g.i))
    if g.kind in (Kind.LAM, Kind.LAM_INV, Kind.Y, Kind.Y_INV, Kind.X, Kind.X_INV, Kind.Z):
        return Letter(g.kind, perm(g.i), perm(g.j))
    raise SchreierError(f"{g} is not a submonoid generator")


def conjugate_subgenerator(g: Letter, a: Word) -> Letter:
    """The generator equal to ``a^-1 g a`` for a rho-only word ``a``."""
    if any(letter.kind is not Kind.RHO for letter in a.letters):
        raise SchreierError("conjugating word must consist of rho letters only")
    return relabel(g, eval_hom(a, PermHom.BAR))


def base_generator(a: Letter, h: PermHom) -> Letter | None:
    """s_(e, a): the generator contributed by ``a`` read from the trivial coset."""
    k, i = a.kind, a.i
    if k is Kind.RHO:
        return None
    if k is Kind.GAMMA:
        return a
    sigma_like_lambda = h in (PermHom.PHI1, PermHom.PHI3)
    tau_like_y = h is PermHom.PHI1
    if k is Kind.SIGMA:
        return Letter(Kind.LAM_INV, i, i + 1) if sigma_like_lambda else Letter(Kind.X, i, i + 1)
    if k is Kind.SIGMA_INV:
        return Letter(Kind.LAM, i + 1, i) if sigma_like_lambda else Letter(Kind.X_INV, i, i + 1)
    if k is Kind.TAU:
        return Letter(Kind.Y, i, i + 1) if tau_like_y else Letter(Kind.Z, i, i + 1)
    raise SchreierError(f"letter {a} is outside the monoid alphabet")


def _generator_at(coset: Permutation, a: Letter, h: PermHom) -> Letter | None:
    base = base_generator(a, h)
    if base is None:
        return None
    # lam * s * lam^-1 moves indices along the inverse of lam's image
    return relabel(base, invert(coset))


def schreier_generator(lam: TransversalElement, a: Letter, h: PermHom | str) -> Word:
    """s_(lam, a) as a word of length 0 or 1 over the kernel alphabet."""
    h = _kernel_hom(h)
    if a.kind not in HOM_RULES[h]:
        raise SchreierError(f"letter {a} is outside the domain of {h}")
    gen = _generator_at(lam.perm, a, h)
    letters = () if gen is None else (gen,)
    return Word(KERNEL_ALPHABET[h], lam.n, letters)


def rewrite_f(w: Word, h: PermHom | str, closed: bool = True) -> Word:
    """Rewrite a braid word into the kernel generators of ``h``.

    With ``closed=True`` the word must lie in the kernel.  With
    ``closed=False`` any word is accepted and the trailing coset
    representative is dropped, which is how relation sides that are not
    themselves kernel elements get rewritten.
    """
    h = _kernel_hom(h)
    if w.tag is not Alphabet.BRAID:
        raise SchreierError("rewriting needs a word over the braid monoid alphabet")
    rules = HOM_RULES[h]
    n = w.n
    coset = identity(n)
    out: list[Letter] = []
    for a in w.letters:
        gen = _generator_at(coset, a, h)
        if gen is not None:
            out.append(gen)
        if rules[a.kind] is Rule.SWAP:
            coset = compose(coset, transposition(n, a.i))
    if closed and not coset.is_identity():
        raise SchreierError(f"word {w} is not in the kernel of {h}")
    return Word(KERNEL_ALPHABET[h], n, tuple(out))


def rewrite_from(lam: TransversalElement, w: Word, h: PermHom | str) -> Word:
    """f applied to ``lam * w`` with the coset residue dropped."""
    return rewrite_f(lam.word + w, h, closed=False)


__all__ = [
    "TransversalElement",
    "build_transversal",
    "representative",
    "schreier_generator",
    "rewrite_f",
    "rewrite_from",
    "conjugate_subgenerator",
    "relabel",
    "base_generator",
    "m_word",
    "SchreierError",
    "WordError",
]
