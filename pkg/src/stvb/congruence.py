"""Congruence invariants and bounded equality search.

Two words are *refuted* when some invariant differs, *equivalent* when a
chain of relation applications is found, and *unknown* otherwise.
"""
from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass
from typing import Sequence

from .permutations import (
    GROUP_EXTENSION,
    HOM_RULES,
    PermHom,
    Permutation,
    eval_rules,
    invert,
)
from .presentations import Presentation, Relation
from .schreier import element_for
from .words import (
    ALPHABET_KINDS,
    Alphabet,
    Kind,
    Letter,
    Word,
    WordError,
    inverse_letter,
)
from . import _search_py

try:
    if os.environ.get("STVB_PURE_PYTHON"):
        raise ImportError("pure Python backend requested")
    from . import _search_ext as _kernel
    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on the build
    _kernel = _search_py
    BACKEND = "python"

INVARIANT_COMPONENTS = (
    "phi1", "phi2", "phi3", "sigma_exponent", "tau_count", "rho_parity", "gamma_parity",
)


@dataclass(frozen=True)
class InvariantVector:
    phi1: Permutation
    phi2: Permutation
    phi3: Permutation
    sigma_exponent: int
    tau_count: int
    rho_parity: int
    gamma_parity: int

    def differing(self, other: InvariantVector) -> list[str]:
        return [c for c in INVARIANT_COMPONENTS if getattr(self, c) != getattr(other, c)]

    def to_json(self) -> dict:
        return {
            "phi1": list(self.phi1.images),
            "phi2": list(self.phi2.images),
            "phi3": list(self.phi3.images),
            "sigma_exponent": self.sigma_exponent,
            "tau_count": self.tau_count,
            "rho_parity": self.rho_parity,
            "gamma_parity": self.gamma_parity,
        }


def invariant_vector(w: Word) -> InvariantVector:
    if w.tag is Alphabet.BRAID:
        tables = HOM_RULES
    elif w.tag is Alphabet.BRAID_GROUP:
        tables = GROUP_EXTENSION
    else:
        raise WordError(f"invariants are defined on braid-side words, not {w.tag}")
    sig = tau = rho = gam = 0
    for a in w.letters:
        k = a.kind
        if k is Kind.SIGMA:
            sig += 1
        elif k is Kind.SIGMA_INV:
            sig -= 1
        elif k is Kind.TAU:
            tau += 1
        elif k is Kind.TAU_BAR:
            tau -= 1
        elif k is Kind.RHO:
            rho ^= 1
        elif k is Kind.GAMMA:
            gam ^= 1
    return InvariantVector(
        eval_rules(w, tables[PermHom.PHI1], "phi1"),
        eval_rules(w, tables[PermHom.PHI2], "phi2"),
        eval_rules(w, tables[PermHom.PHI3], "phi3"),
        sig, tau, rho, gam,
    )


@dataclass(frozen=True)
class InvarianceItem:
    relation: Relation
    differing: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.differing


@dataclass(frozen=True)
class InvarianceReport:
    family: str
    n: int
    items: tuple[InvarianceItem, ...]

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.items)

    @property
    def disabled(self) -> set[str]:
        """Components that are not invariants of this presentation."""
        out: set[str] = set()
        for item in self.items:
            out.update(item.differing)
        return out


def check_relation_invariance(p: Presentation) -> InvarianceReport:
    items = []
    for rel in p.relations:
        diff = invariant_vector(rel.left).differing(invariant_vector(rel.right))
        items.append(InvarianceItem(rel, tuple(diff)))
    return InvarianceReport(p.family.value, p.n, tuple(items))


# -- derivations ----------------------------------------------------------------

@dataclass(frozen=True)
class Step:
    pos: int
    label: str
    direction: str  # "fwd" replaces left by right, "rev" the converse
    relation: int  # index into the presentation's relation list

    def to_json(self) -> dict:
        return {"pos": self.pos, "label": self.label, "dir": self.direction,
                "rel": self.relation}


class DerivationError(ValueError):
    pass


def apply_step(w: Word, rel: Relation, pos: int, direction: str) -> Word:
    src, dst = (rel.left, rel.right) if direction == "fwd" else (rel.right, rel.left)
    m = len(src)
    if w.letters[pos:pos + m] != src.letters or pos > len(w):
        raise DerivationError(f"{rel.label} ({direction}) does not match at {pos} in {w}")
    return Word(w.tag, w.n, w.letters[:pos] + dst.letters + w.letters[pos + m:])


@dataclass(frozen=True)
class Derivation:
    source: Word
    steps: tuple[Step, ...]
    words: tuple[Word, ...]

    @property
    def target(self) -> Word:
        return self.words[-1]

    def __len__(self) -> int:
        return len(self.steps)

    def replay(self, p: Presentation) -> Word:
        """Re-apply every step from scratch against ``p``; returns the end word."""
        w = self.source
        for st in self.steps:
            rel = p.relations[st.relation]
            if rel.label != st.label:
                raise DerivationError(f"step cites {st.label} but relation is {rel.label}")
            w = apply_step(w, rel, st.pos, st.direction)
        return w

    def to_json(self) -> dict:
        return {
            "steps": [s.to_json() for s in self.steps],
            "words": [str(w) for w in self.words],
        }


@dataclass(frozen=True)
class EqualityResult:
    status: str  # "equivalent" | "unknown" | "refuted"
    derivation: Derivation | None = None
    refuted_by: tuple[str, ...] = ()
    states: int = 0

    @property
    def equivalent(self) -> bool:
        return self.status == "equivalent"

    def to_json(self) -> dict:
        out: dict = {"status": self.status, "states": self.states}
        if self.derivation is not None:
            out["derivation"] = self.derivation.to_json()
        if self.refuted_by:
            out["refuted_by"] = list(self.refuted_by)
        return out


class _Codec:
    """One byte per letter; built from the letters the search can meet."""

    def __init__(self, letters: Sequence[Letter]):
        ordered = sorted(set(letters))
        if len(ordered) > 255:
            raise ValueError("alphabet too large for byte encoding")
        self.code = {a: i + 1 for i, a in enumerate(ordered)}
        self.letter = {i + 1: a for i, a in enumerate(ordered)}

    def encode(self, w: Word) -> bytes:
        return bytes(self.code[a] for a in w.letters)


def _braid_side(p: Presentation) -> bool:
    return p.tag in (Alphabet.BRAID, Alphabet.BRAID_GROUP)


def default_maxlen(u: Word, v: Word) -> int:
    return max(len(u), len(v)) + 8


def bfs_equal(p: Presentation, u: Word, v: Word, budget: int = 10**6,
              maxlen: int | None = None, bidirectional: bool = True,
              restrict: bool = True, backend=None) -> EqualityResult:
    """Bounded search for a derivation of ``u = v`` from the relations of ``p``.

    Every relation may be used in either direction at any position.  States
    longer than ``maxlen`` are pruned and the search stops after ``budget``
    distinct words.  With ``restrict`` the relations whose letters all occur
    in ``u`` or ``v`` are searched first; the two passes share the budget.
    """
    for w in (u, v):
        if w.tag is not p.tag or w.n != p.n:
            raise WordError(f"word {w!r} is not over the alphabet of {p.family}/{p.n}")
    if _braid_side(p):
        diff = invariant_vector(u).differing(invariant_vector(v))
        if diff:
            return EqualityResult("refuted", refuted_by=tuple(diff))
    if maxlen is None:
        maxlen = default_maxlen(u, v)
    kernel = backend or _kernel
    indices = list(range(len(p.relations)))
    states = 0
    found, path = False, None
    if restrict:
        # relations over the letters of u and v (then also their inverse
        # letters); a derivation found here is a derivation in p as well
        support = set(u.letters) | set(v.letters)
        closed = support | {b for a in support if (b := _inverse_or_none(a, p.tag))}
        tried: set[tuple[int, ...]] = set()
        for letters in (support, closed):
            sub = tuple(k for k in indices
                        if set(p.relations[k].left.letters) <= letters
                        and set(p.relations[k].right.letters) <= letters)
            if len(sub) == len(indices) or sub in tried:
                continue
            tried.add(sub)
            found, path, more = _run(kernel, p, sub, u, v, budget - states, maxlen,
                                     bidirectional)
            states += more
            if found:
                return _result(p, sub, u, v, path, states)
            if states >= budget:
                return EqualityResult("unknown", states=states)
    remaining = budget - states
    if remaining > 0:
        found, path, more = _run(kernel, p, indices, u, v, remaining, maxlen, bidirectional)
        states += more
        if found:
            return _result(p, indices, u, v, path, states)
    return EqualityResult("unknown", states=states)


def _inverse_or_none(a: Letter, tag: Alphabet) -> Letter | None:
    try:
        return inverse_letter(a, tag)
    except WordError:
        return None


def _run(kernel, p, indices, u, v, budget, maxlen, bidirectional):
    rels = [p.relations[k] for k in indices]
    letters = [a for rel in rels for a in (*rel.left.letters, *rel.right.letters)]
    codec = _Codec(letters + list(u.letters) + list(v.letters))
    rules = []
    for rel in rels:
        left, right = codec.encode(rel.left), codec.encode(rel.right)
        rules.append((left, right))
        rules.append((right, left))
    return kernel.search(codec.encode(u), codec.encode(v), rules, budget, maxlen, bidirectional)


def _result(p, indices, u, v, path, states) -> EqualityResult:
    steps, words = [], [u]
    w = u
    for pos, idx in path:
        local, flip = divmod(idx, 2)
        rel_index = indices[local]
        rel = p.relations[rel_index]
        direction = "rev" if flip else "fwd"
        w = apply_step(w, rel, pos, direction)
        steps.append(Step(pos, rel.label, direction, rel_index))
        words.append(w)
    if w != v:  # pragma: no cover - would be a kernel bug
        raise DerivationError("search path does not end at the target word")
    return EqualityResult("equivalent", Derivation(u, tuple(steps), tuple(words)), states=states)


# -- random words ------------------------------------------------------------------

_RANDOM_KINDS = {
    Alphabet.BRAID: (Kind.SIGMA, Kind.SIGMA_INV, Kind.RHO, Kind.TAU, Kind.GAMMA),
    Alphabet.BRAID_GROUP: (Kind.SIGMA, Kind.SIGMA_INV, Kind.RHO, Kind.TAU, Kind.TAU_BAR, Kind.GAMMA),
}


def _random_letter(rng: random.Random, kind: Kind, n: int) -> Letter:
    if kind is Kind.GAMMA:
        return Letter(kind, rng.randint(1, n))
    if kind in (Kind.SIGMA, Kind.SIGMA_INV, Kind.RHO, Kind.TAU, Kind.TAU_BAR):
        return Letter(kind, rng.randint(1, n - 1))
    i, j = rng.sample(range(1, n + 1), 2)
    return Letter(kind, i, j)


def random_word(n: int, length: int, tag: Alphabet | str = Alphabet.BRAID, seed: int = 0,
                constraint: str | PermHom = "any", rng: random.Random | None = None) -> Word:
    """Seeded random word.

    ``constraint`` is ``"any"`` or the name of a hom; for a hom a rho-only
    tail is appended that cancels the image of the random prefix, so the
    result lies in the kernel.  The tail does not count toward ``length``.
    """
    tag = Alphabet(tag)
    rng = rng or random.Random(seed)
    kinds = _RANDOM_KINDS.get(tag) or tuple(sorted(ALPHABET_KINDS[tag]))
    letters = [_random_letter(rng, rng.choice(kinds), n) for _ in range(length)]
    w = Word(tag, n, tuple(letters))
    if constraint == "any":
        return w
    h = PermHom(constraint)
    tables = HOM_RULES if tag is Alphabet.BRAID else GROUP_EXTENSION
    image = eval_rules(w, tables[h], h.value)
    tail = element_for(invert(image)).word
    return Word(tag, n, w.letters + tail.letters)


def dumps(result: EqualityResult) -> str:
    return json.dumps(result.to_json(), indent=2)
