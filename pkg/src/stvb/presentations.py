"""Fully instantiated relation lists for every presentation family.

Labels are the equation numbers of the source text, e.g. ``"(13)"``.  Relations
obtained by barring tau carry ``"R'1"``/``"R'2"``/``"R'3"`` prefixes, and the
two-sided inverse laws added in group contexts are labelled ``"(14')"`` and
``"inv"``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Callable, Iterable, Sequence

from .words import Alphabet, Kind, Letter, Word, WordError, parse_word


class Family(str, Enum):
    STVB_FULL = "stvb"
    STVB_REDUCED = "stvb-reduced"
    TVB = "tvb"
    STVG = "stvg"
    STVP = "stvp"
    STVH = "stvh"
    M = "m"
    STVPG = "stvpg"

    def __str__(self) -> str:
        return self.value


FAMILY_TAG = {
    Family.STVB_FULL: Alphabet.BRAID,
    Family.STVB_REDUCED: Alphabet.BRAID,
    Family.TVB: Alphabet.BRAID,
    Family.STVG: Alphabet.BRAID_GROUP,
    Family.STVP: Alphabet.SUB_P,
    Family.STVH: Alphabet.SUB_H,
    Family.M: Alphabet.SUB_M,
    Family.STVPG: Alphabet.SUB_PG,
}

BRAID_FAMILIES = (Family.STVB_FULL, Family.STVB_REDUCED, Family.TVB, Family.STVG)
SUBMONOID_FAMILIES = (Family.STVP, Family.STVH, Family.M, Family.STVPG)

MIN_N = {f: 2 for f in Family}
MIN_N[Family.STVB_REDUCED] = 4

#: literal reading of the (69) index pattern is used; the alternative binds l
FLAG_69 = "(69): l taken distinct from i, j, k; reading l in {i, j} not instantiated"


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    label: str
    left: Word
    right: Word
    indices: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.left.tag is not self.right.tag or self.left.n != self.right.n:
            raise PresentationError(f"{self.label}: sides differ in alphabet or n")

    def binding(self) -> dict[str, int]:
        return dict(self.indices)

    def key(self) -> tuple:
        """Orientation-free identity of the instance."""
        a, b = self.left.letters, self.right.letters
        return (self.label,) + ((a, b) if a <= b else (b, a))

    def to_line(self) -> str:
        return f"{self.label} | {self.left} = {self.right}"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "indices": self.binding(),
            "left": str(self.left),
            "right": str(self.right),
        }


@dataclass(frozen=True)
class Presentation:
    family: Family
    n: int
    tag: Alphabet
    relations: tuple[Relation, ...]
    notes: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def labels(self) -> list[str]:
        seen: dict[str, None] = {}
        for r in self.relations:
            seen.setdefault(r.label, None)
        return list(seen)

    def by_label(self, label: str) -> list[Relation]:
        return [r for r in self.relations if r.label == label]

    def to_text(self) -> str:
        return "\n".join(r.to_line() for r in self.relations)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.relations]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def count_relations(p: Presentation) -> int:
    return len(p.relations)


# -- instantiation helpers ----------------------------------------------------

class _Builder:
    def __init__(self, tag: Alphabet, n: int):
        self.tag = tag
        self.n = n
        self.out: list[Relation] = []
        self._seen: set = set()

    def w(self, *letters: Letter) -> Word:
        return Word(self.tag, self.n, letters)

    def add(self, label: str, left: Sequence[Letter], right: Sequence[Letter], **idx: int):
        rel = Relation(label, self.w(*left), self.w(*right), tuple(idx.items()))
        k = rel.key()
        if k in self._seen:
            return
        self._seen.add(k)
        self.out.append(rel)

    def distinct(self, label: str, names: str, fn: Callable[..., tuple]):
        """Instantiate over ordered tuples of pairwise-distinct indices."""
        for combo in permutations(range(1, self.n + 1), len(names)):
            left, right = fn(*combo)
            self.add(label, left, right, **dict(zip(names, combo)))


def s(i):
    return Letter(Kind.SIGMA, i)


def S(i):
    return Letter(Kind.SIGMA_INV, i)


def r(i):
    return Letter(Kind.RHO, i)


def t(i):
    return Letter(Kind.TAU, i)


def T(i):
    return Letter(Kind.TAU_BAR, i)


def g(i):
    return Letter(Kind.GAMMA, i)


def lam(i, j):
    return Letter(Kind.LAM, i, j)


def lam_inv(i, j):
    return Letter(Kind.LAM_INV, i, j)


def y(i, j):
    return Letter(Kind.Y, i, j)


def y_inv(i, j):
    return Letter(Kind.Y_INV, i, j)


def x(i, j):
    return Letter(Kind.X, i, j)


def x_inv(i, j):
    return Letter(Kind.X_INV, i, j)


def z(i, j):
    return Letter(Kind.Z, i, j)


def _far_pairs(n: int, ordered: bool):
    """Index pairs of crossing letters with |i - j| > 1."""
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1 and (ordered or i < j):
                yield i, j


# -- braid-side families ------------------------------------------------------

def _gamma_relations(b: _Builder):
    n = b.n
    for i in range(1, n + 1):
        b.add("(8)", [g(i), g(i)], [], i=i)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            b.add("(9)", [g(i), g(j)], [g(j), g(i)], i=i, j=j)


def _tvb_relations(b: _Builder):
    n = b.n
    for i, j in _far_pairs(n, ordered=False):
        b.add("(1)", [s(i), s(j)], [s(j), s(i)], i=i, j=j)
    for i in range(1, n - 1):
        b.add("(2)", [s(i), s(i + 1), s(i)], [s(i + 1), s(i), s(i + 1)], i=i)
    for i in range(1, n):
        b.add("(3)", [r(i), r(i)], [], i=i)
    for i, j in _far_pairs(n, ordered=False):
        b.add("(4)", [r(i), r(j)], [r(j), r(i)], i=i, j=j)
    for i in range(1, n - 1):
        b.add("(5)", [r(i), r(i + 1), r(i)], [r(i + 1), r(i), r(i + 1)], i=i)
    for i, j in _far_pairs(n, ordered=True):
        b.add("(6)", [s(i), r(j)], [r(j), s(i)], i=i, j=j)
    for i in range(1, n - 1):
        b.add("(7)", [r(i), s(i + 1), r(i)], [r(i + 1), s(i), r(i + 1)], i=i)
    _gamma_relations(b)
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                b.add("(10)", [g(j), r(i)], [r(i), g(j)], i=i, j=j)
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                b.add("(11)", [s(i), g(j)], [g(j), s(i)], i=i, j=j)
    for i in range(1, n):
        b.add("(12)", [g(i + 1), r(i)], [r(i), g(i)], i=i)
    for i in range(1, n):
        b.add("(13)", [r(i), s(i), r(i)], [g(i + 1), g(i), s(i), g(i), g(i + 1)], i=i)


def _r3_relations(n: int, tau: Callable[[int], Letter]):
    """Relations with one singular letter per side; ``tau`` picks t or T."""
    out = []
    for i, j in _far_pairs(n, ordered=True):
        out.append(("(20)", [tau(i), r(j)], [r(j), tau(i)], dict(i=i, j=j)))
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                out.append(("(22)", [tau(i), g(j)], [g(j), tau(i)], dict(i=i, j=j)))
    for i in range(1, n):
        out.append(("(17)", [s(i), tau(i)], [tau(i), s(i)], dict(i=i)))
    for i in range(1, n - 1):
        out.append(("(21)", [r(i), tau(i + 1), r(i)], [r(i + 1), tau(i), r(i + 1)], dict(i=i)))
    for i in range(1, n - 1):
        out.append(("(18)", [s(i), s(i + 1), tau(i)], [tau(i + 1), s(i), s(i + 1)], dict(i=i)))
    for i in range(1, n - 1):
        out.append(("(19)", [s(i + 1), s(i), tau(i + 1)], [tau(i), s(i + 1), s(i)], dict(i=i)))
    for i in range(1, n):
        out.append(("(23)", [r(i), tau(i), r(i)],
                    [g(i + 1), g(i), tau(i), g(i), g(i + 1)], dict(i=i)))
    return out


def _singular_relations(b: _Builder):
    n = b.n
    for i in range(1, n):
        b.add("(14)", [s(i), S(i)], [], i=i)
    for i, j in _far_pairs(n, ordered=False):
        b.add("(15)", [t(i), t(j)], [t(j), t(i)], i=i, j=j)
    for i, j in _far_pairs(n, ordered=True):
        b.add("(16)", [s(i), t(j)], [t(j), s(i)], i=i, j=j)
    order = ["(17)", "(18)", "(19)", "(20)", "(21)", "(22)", "(23)"]
    rels = _r3_relations(n, t)
    for label in order:
        for lab, left, right, idx in rels:
            if lab == label:
                b.add(label, left, right, **idx)


def _build_tvb(n: int) -> list[Relation]:
    b = _Builder(Alphabet.BRAID, n)
    _tvb_relations(b)
    return b.out


def _build_full(n: int, tag: Alphabet = Alphabet.BRAID) -> list[Relation]:
    b = _Builder(tag, n)
    _tvb_relations(b)
    _singular_relations(b)
    return b.out


def _build_stvg(n: int) -> list[Relation]:
    b = _Builder(Alphabet.BRAID_GROUP, n)
    _tvb_relations(b)
    _singular_relations(b)
    for i in range(1, n):
        b.add("(14')", [S(i), s(i)], [], i=i)
    for lab, left, right, idx in _r3_relations(n, T):
        b.add("R'1" + lab, left, right, **idx)
    for i in range(1, n):
        b.add("R'2", [T(i), t(i)], [], i=i)
        b.add("R'2", [t(i), T(i)], [], i=i)
    for i, j in _far_pairs(n, ordered=False):
        b.add("R'3", [T(i), T(j)], [T(j), T(i)], i=i, j=j)
    for i, j in _far_pairs(n, ordered=True):
        b.add("R'3", [T(i), t(j)], [t(j), T(i)], i=i, j=j)
    return b.out


def _conj3(core: list[Letter]) -> list[Letter]:
    # rho2 rho3 rho1 rho2 <core> rho2 rho1 rho3 rho2
    return [r(2), r(3), r(1), r(2), *core, r(2), r(1), r(3), r(2)]


def _conj2(core: list[Letter]) -> list[Letter]:
    return [r(1), r(2), *core, r(2), r(1)]


def _build_reduced(n: int) -> list[Relation]:
    b = _Builder(Alphabet.BRAID, n)
    for i in range(1, n):
        b.add("(3)", [r(i), r(i)], [], i=i)
    for i, j in _far_pairs(n, ordered=False):
        b.add("(4)", [r(i), r(j)], [r(j), r(i)], i=i, j=j)
    for i in range(1, n - 1):
        b.add("(5)", [r(i), r(i + 1), r(i)], [r(i + 1), r(i), r(i + 1)], i=i)
    s1, t1, g1 = s(1), t(1), g(1)
    b.add("(27)", [s1, *_conj3([s1])], [*_conj3([s1]), s1])
    a, c = [r(1), s1, r(1)], [r(2), s1, r(2)]
    b.add("(28)", a + c + a, c + a + c)
    for j in range(3, n):
        b.add("(29)", [s1, r(j)], [r(j), s1], j=j)
    b.add("(30)", [g1, g1], [])
    for j in range(2, n):
        b.add("(31)", [g1, r(j)], [r(j), g1], j=j)
    b.add("(32)", [g1, r(1), g1, r(1)], [r(1), g1, r(1), g1])
    b.add("(33)", [g1, *_conj2([s1])], [*_conj2([s1]), g1])
    b.add("(34)", [g1, r(1), g1, s1, g1, r(1), g1], [s1])
    b.add("(35)", [s1, S(1)], [])
    b.add("(36)", [s1, t1], [t1, s1])
    for i in range(3, n):
        b.add("(37)", [t1, r(i)], [r(i), t1], i=i)
    b.add("(38)", [t1, *_conj2([s1]), s1], [*_conj2([s1]), s1, *_conj2([t1])])
    b.add("(39)", [t1, *_conj3([s1])], [*_conj3([s1]), t1])
    b.add("(40)", [t1, *_conj3([t1])], [*_conj3([t1]), t1])
    b.add("(41)", [g1, *_conj2([t1])], [*_conj2([t1]), g1])
    b.add("(42)", [g1, r(1), g1, t1, g1, r(1), g1], [t1])
    return b.out


def reduction_formulas(n: int) -> list[Relation]:
    """The rewrites of sigma_i, tau_i, gamma_i through index-1 letters."""
    b = _Builder(Alphabet.BRAID, n)

    def wrap(i, core):
        left = [r(k) for k in range(i - 1, 0, -1)] + [r(k) for k in range(i, 1, -1)]
        right = [r(k) for k in range(2, i + 1)] + [r(k) for k in range(1, i)]
        return left + core + right

    for i in range(2, n):
        b.add("(24)", [s(i)], wrap(i, [s(1)]), i=i, sign=1)
        b.add("(24)", [S(i)], wrap(i, [S(1)]), i=i, sign=-1)
    for i in range(2, n):
        b.add("(25)", [t(i)], wrap(i, [t(1)]), i=i)
    for i in range(2, n + 1):
        left = [r(k) for k in range(i - 1, 0, -1)]
        b.add("(26)", [g(i)], left + [g(1)] + left[::-1], i=i)
    return b.out


# -- submonoid families -------------------------------------------------------

def _lambda_block(b: _Builder, with_inverse: bool = True):
    if with_inverse:
        b.distinct("(43)", "ij", lambda i, j: ([lam(i, j), lam_inv(i, j)], []))
    b.distinct("(44)", "ijkl", lambda i, j, k, l: (
        [lam(i, j), lam(k, l)], [lam(k, l), lam(i, j)]))
    b.distinct("(45)", "ijk", lambda i, j, k: (
        [lam(k, i), lam(k, j), lam(i, j)], [lam(i, j), lam(k, j), lam(k, i)]))
    b.distinct("(46)", "ijk", lambda i, j, k: ([lam(i, j), g(k)], [g(k), lam(i, j)]))
    b.distinct("(47)", "ij", lambda i, j: (
        [lam(i, j)], [g(i), g(j), lam(j, i), g(j), g(i)]))


def _y_block(b: _Builder):
    b.distinct("(48)", "ijkl", lambda i, j, k, l: ([y(i, j), y(k, l)], [y(k, l), y(i, j)]))
    b.distinct("(49)", "ijkl", lambda i, j, k, l: (
        [lam(i, j), y(k, l)], [y(k, l), lam(i, j)]))
    b.distinct("(50)", "ijk", lambda i, j, k: (
        [lam(k, i), lam(k, j), y(i, j)], [y(i, j), lam(k, j), lam(k, i)]))
    b.distinct("(51)", "kl", lambda k, l: ([lam(l, k), y(k, l)], [lam(k, l), y(l, k)]))
    b.distinct("(52)", "ijk", lambda i, j, k: (
        [y(k, i), lam(k, j), lam(i, j)], [lam(i, j), lam(k, j), y(k, i)]))
    b.distinct("(53)", "ijk", lambda i, j, k: ([y(i, j), g(k)], [g(k), y(i, j)]))
    b.distinct("(54)", "ij", lambda i, j: ([y(i, j)], [g(i), g(j), y(j, i), g(j), g(i)]))


def _z_block(b: _Builder):
    b.distinct("(64)", "ijkl", lambda i, j, k, l: ([z(i, j), z(k, l)], [z(k, l), z(i, j)]))
    b.distinct("(65)", "ijk", lambda i, j, k: ([z(i, j), g(k)], [g(k), z(i, j)]))
    b.distinct("(66)", "ij", lambda i, j: ([z(i, j)], [g(i), g(j), z(j, i), g(j), g(i)]))


def _build_stvp(n: int) -> list[Relation]:
    b = _Builder(Alphabet.SUB_P, n)
    _gamma_relations(b)
    _lambda_block(b)
    _y_block(b)
    return b.out


def _build_stvh(n: int) -> list[Relation]:
    b = _Builder(Alphabet.SUB_H, n)
    _gamma_relations(b)
    b.distinct("(55)", "ij", lambda i, j: ([x(i, j), x_inv(i, j)], []))
    b.distinct("(56)", "ijkl", lambda i, j, k, l: ([x(i, j), x(k, l)], [x(k, l), x(i, j)]))
    b.distinct("(57)", "ijk", lambda i, j, k: (
        [x(i, k), x(k, j), x(i, k)], [x(k, j), x(i, k), x(k, j)]))
    b.distinct("(58)", "ijk", lambda i, j, k: ([x(i, j), g(k)], [g(k), x(i, j)]))
    b.distinct("(59)", "ij", lambda i, j: ([x(i, j)], [g(i), g(j), x(j, i), g(j), g(i)]))
    b.distinct("(60)", "ijkl", lambda i, j, k, l: ([x(i, j), z(k, l)], [z(k, l), x(i, j)]))
    b.distinct("(61)", "ijk", lambda i, j, k: (
        [x(i, k), x(k, j), z(i, k)], [z(k, j), x(i, k), x(k, j)]))
    b.distinct("(62)", "ijk", lambda i, j, k: (
        [z(i, k), x(k, j), x(i, k)], [x(k, j), x(i, k), z(k, j)]))
    b.distinct("(63)", "ij", lambda i, j: ([x(i, j), z(i, j)], [z(i, j), x(i, j)]))
    _z_block(b)
    return b.out


def _build_m(n: int) -> list[Relation]:
    b = _Builder(Alphabet.SUB_M, n)
    _gamma_relations(b)
    _lambda_block(b)
    _z_block(b)
    b.distinct("(67)", "ijkl", lambda i, j, k, l: ([lam(i, j), z(k, l)], [z(k, l), lam(i, j)]))
    b.distinct("(68)", "ijk", lambda i, j, k: (
        [lam(i, k), lam(j, k), z(j, i)], [z(j, i), lam(i, k), lam(j, k)]))
    b.distinct("(69)", "ijkl", lambda i, j, k, l: (
        [lam(i, k), lam(i, j), z(k, l)], [z(k, l), lam(i, k), lam(i, j)]))
    b.distinct("(70)", "ij", lambda i, j: ([lam(i, j), z(j, i)], [z(i, j), lam(i, j)]))
    return b.out


def _build_stvpg(n: int) -> list[Relation]:
    b = _Builder(Alphabet.SUB_PG, n)
    _gamma_relations(b)
    _lambda_block(b, with_inverse=False)
    _y_block(b)
    b.distinct("inv", "ij", lambda i, j: ([lam(i, j), lam_inv(i, j)], []))
    b.distinct("inv", "ij", lambda i, j: ([lam_inv(i, j), lam(i, j)], []))
    b.distinct("inv", "ij", lambda i, j: ([y(i, j), y_inv(i, j)], []))
    b.distinct("inv", "ij", lambda i, j: ([y_inv(i, j), y(i, j)], []))
    return b.out


_BUILDERS: dict[Family, Callable[[int], list[Relation]]] = {
    Family.TVB: _build_tvb,
    Family.STVB_FULL: _build_full,
    Family.STVB_REDUCED: _build_reduced,
    Family.STVG: _build_stvg,
    Family.STVP: _build_stvp,
    Family.STVH: _build_stvh,
    Family.M: _build_m,
    Family.STVPG: _build_stvpg,
}


def build_presentation(family: Family | str, n: int) -> Presentation:
    family = Family(family)
    if n < MIN_N[family]:
        raise PresentationError(f"{family} needs n >= {MIN_N[family]}, got {n}")
    try:
        rels = _BUILDERS[family](n)
    except WordError as exc:  # pragma: no cover - indicates a builder bug
        raise PresentationError(str(exc)) from exc
    notes = (FLAG_69,) if family is Family.M else ()
    return Presentation(family, n, FAMILY_TAG[family], tuple(rels), notes)


def mutate(p: Presentation, rel: Relation) -> Presentation:
    """Copy of ``p`` with one extra (possibly bogus) relation appended."""
    return Presentation(p.family, p.n, p.tag, p.relations + (rel,), p.notes)


def relation_from_text(label: str, left: str, right: str, tag: Alphabet, n: int) -> Relation:
    return Relation(label, parse_word(left, tag, n), parse_word(right, tag, n))


def all_labels(presentations: Iterable[Presentation]) -> set[str]:
    out: set[str] = set()
    for p in presentations:
        out.update(p.labels())
    return out
