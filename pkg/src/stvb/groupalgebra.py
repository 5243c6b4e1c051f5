"""Group algebra Q[a, b, c][S_n] and the representation that sends tau_i to
``a*phi(sigma_i) + b*phi(sigma_i^-1) + c*e``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .permutations import Permutation, compose, identity, invert, transposition
from .presentations import Relation, build_presentation, Family
from .words import Alphabet, Kind, Word

Exponent = tuple[int, int, int]
_VARS = ("a", "b", "c")


class AlgebraError(ValueError):
    pass


class PolyABC:
    """Sparse polynomial in a, b, c with exact rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Fraction | int] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(e)] = c
        self.terms: dict[Exponent, Fraction] = clean
        self._hash = None

    @classmethod
    def const(cls, c) -> PolyABC:
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> PolyABC:
        e = [0, 0, 0]
        e[_VARS.index(name)] = 1
        return cls({tuple(e): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyABC.const(other)
        return isinstance(other, PolyABC) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other: PolyABC) -> PolyABC:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return PolyABC(out)

    def __neg__(self) -> PolyABC:
        return PolyABC({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: PolyABC) -> PolyABC:
        return self + (-other)

    def __mul__(self, other: PolyABC) -> PolyABC:
        out: dict[Exponent, Fraction] = {}
        for (a1, b1, c1), x in self.terms.items():
            for (a2, b2, c2), y in other.terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, 0) + x * y
        return PolyABC(out)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def evaluate(self, a, b, c):
        total = Fraction(0)
        for (ea, eb, ec), coef in self.terms.items():
            total += coef * Fraction(a) ** ea * Fraction(b) ** eb * Fraction(c) ** ec
        return total

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(_VARS, e) if k
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"PolyABC({self})"

    def to_json(self) -> list[list[int]]:
        return [[*e, c.numerator, c.denominator] for e, c in self.sorted_terms()]


ONE = PolyABC.const(1)


class AlgebraElement:
    """Finite Q[a, b, c]-combination of permutations of S_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Permutation, PolyABC] | None = None):
        self.n = n
        clean = {}
        for p, c in (coeffs or {}).items():
            if p.n != n:
                raise AlgebraError(f"permutation of size {p.n} in element of S_{n}")
            if c:
                clean[p] = c
        self.coeffs: dict[Permutation, PolyABC] = clean

    @classmethod
    def basis(cls, p: Permutation, coeff: PolyABC = ONE) -> AlgebraElement:
        return cls(p.n, {p: coeff})

    @classmethod
    def unit(cls, n: int) -> AlgebraElement:
        return cls.basis(identity(n))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return algebra_add(self, other)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return algebra_mul(self, other)

    def __len__(self) -> int:
        return len(self.coeffs)

    def sorted_items(self) -> list[tuple[Permutation, PolyABC]]:
        return sorted(self.coeffs.items(), key=lambda t: t[0].images)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c}) * [{p.cycle_notation()}]" for p, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {self})"

    def max_degree(self) -> int:
        return max((c.degree() for c in self.coeffs.values()), default=0)

    def to_json(self) -> list[dict]:
        return [{"perm": list(p.images), "poly": c.to_json()} for p, c in self.sorted_items()]


def _check(x: AlgebraElement, y: AlgebraElement):
    if x.n != y.n:
        raise AlgebraError(f"size mismatch {x.n} vs {y.n}")


def algebra_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _check(x, y)
    out = dict(x.coeffs)
    for p, c in y.coeffs.items():
        out[p] = out[p] + c if p in out else c
    return AlgebraElement(x.n, out)


def algebra_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Convolution; the left factor's permutation acts first."""
    _check(x, y)
    out: dict[Permutation, PolyABC] = {}
    for p, c in x.coeffs.items():
        for q, d in y.coeffs.items():
            g = compose(p, q)
            prod = c * d
            out[g] = out[g] + prod if g in out else prod
    return AlgebraElement(x.n, out)


def algebra_scale(poly: PolyABC, x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(x.n, {p: poly * c for p, c in x.coeffs.items()})


def _right_translate(x: AlgebraElement, q: Permutation) -> AlgebraElement:
    return AlgebraElement(x.n, {compose(p, q): c for p, c in x.coeffs.items()})


# -- representations ----------------------------------------------------------

@dataclass(frozen=True)
class RepSpec:
    """Images in S_n of sigma_i, rho_i (i < n) and gamma_i (i <= n)."""

    n: int
    sigma: tuple[Permutation, ...]
    rho: tuple[Permutation, ...]
    gamma: tuple[Permutation, ...]

    def __post_init__(self):
        n = self.n
        if len(self.sigma) != n - 1 or len(self.rho) != n - 1 or len(self.gamma) != n:
            raise AlgebraError("RepSpec needs n-1 sigma, n-1 rho and n gamma images")
        for p in (*self.sigma, *self.rho, *self.gamma):
            if p.n != n:
                raise AlgebraError(f"image {p} is not in S_{n}")

    def image(self, kind: Kind, i: int) -> Permutation:
        if kind is Kind.SIGMA:
            return self.sigma[i - 1]
        if kind is Kind.SIGMA_INV:
            return invert(self.sigma[i - 1])
        if kind is Kind.RHO:
            return self.rho[i - 1]
        if kind is Kind.GAMMA:
            return self.gamma[i - 1]
        raise AlgebraError(f"no group image for letter kind {kind}")

    def replace(self, kind: Kind, i: int, p: Permutation) -> RepSpec:
        fields = {"sigma": list(self.sigma), "rho": list(self.rho), "gamma": list(self.gamma)}
        key = {Kind.SIGMA: "sigma", Kind.RHO: "rho", Kind.GAMMA: "gamma"}[kind]
        fields[key][i - 1] = p
        return RepSpec(self.n, *(tuple(fields[k]) for k in ("sigma", "rho", "gamma")))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sigma": [list(p.images) for p in self.sigma],
            "rho": [list(p.images) for p in self.rho],
            "gamma": [list(p.images) for p in self.gamma],
        }

    @classmethod
    def from_json(cls, data: dict) -> RepSpec:
        n = int(data["n"])
        conv = lambda rows: tuple(Permutation(tuple(r)) for r in rows)  # noqa: E731
        return cls(n, conv(data["sigma"]), conv(data["rho"]), conv(data["gamma"]))


@dataclass(frozen=True)
class RepCheck:
    relation: Relation
    left: Permutation
    right: Permutation

    @property
    def ok(self) -> bool:
        return self.left == self.right


@dataclass(frozen=True)
class RepValidation:
    spec: RepSpec
    checks: tuple[RepCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[RepCheck]:
        return [c for c in self.checks if not c.ok]


def group_image(w: Word, spec: RepSpec) -> Permutation:
    p = identity(spec.n)
    for a in w.letters:
        p = compose(p, spec.image(a.kind, a.i))
    return p


def validate_rep(spec: RepSpec) -> RepValidation:
    """Evaluate every twisted virtual braid relation under ``spec``."""
    checks = tuple(
        RepCheck(rel, group_image(rel.left, spec), group_image(rel.right, spec))
        for rel in build_presentation(Family.TVB, spec.n)
    )
    return RepValidation(spec, checks)


def make_rep(n: int, sigma: Sequence[Permutation], rho: Sequence[Permutation],
             gamma: Sequence[Permutation]) -> RepSpec:
    """Build and validate a representation; raises if any relation fails."""
    spec = RepSpec(n, tuple(sigma), tuple(rho), tuple(gamma))
    report = validate_rep(spec)
    if not report.ok:
        bad = report.failures[0].relation
        raise AlgebraError(f"representation violates {bad.label}: {bad.to_line()}")
    return spec


def make_canonical_rep(n: int) -> RepSpec:
    """sigma_i, rho_i -> (i, i+1); gamma_i -> identity."""
    if n < 2:
        raise AlgebraError("n must be at least 2")
    swaps = [transposition(n, i) for i in range(1, n)]
    return make_rep(n, swaps, swaps, [identity(n)] * n)


def make_flat_rep(n: int) -> RepSpec:
    """sigma_i -> identity, rho_i -> (i, i+1), gamma_i -> identity."""
    swaps = [transposition(n, i) for i in range(1, n)]
    return make_rep(n, [identity(n)] * (n - 1), swaps, [identity(n)] * n)


def tau_image(spec: RepSpec, i: int) -> AlgebraElement:
    n = spec.n
    s = spec.image(Kind.SIGMA, i)
    s_inv = invert(s)
    return algebra_add(
        algebra_add(AlgebraElement.basis(s, PolyABC.var("a")),
                    AlgebraElement.basis(s_inv, PolyABC.var("b"))),
        AlgebraElement.basis(identity(n), PolyABC.var("c")),
    )


def phi_eval(w: Word, spec: RepSpec) -> AlgebraElement:
    """Image of a braid word in Q[a, b, c][S_n]."""
    if w.tag is not Alphabet.BRAID:
        if w.kinds() & {Kind.TAU_BAR}:
            raise AlgebraError("tau bar has no image: the representation is defined on the monoid")
        if w.tag is not Alphabet.BRAID_GROUP:
            raise AlgebraError(f"phi_eval needs a braid word, got {w.tag}")
    if w.n != spec.n:
        raise AlgebraError(f"word on {w.n} strands, representation on {spec.n}")
    acc = AlgebraElement.unit(spec.n)
    pending = identity(spec.n)
    for a in w.letters:
        if a.kind is Kind.TAU:
            acc = algebra_mul(_right_translate(acc, pending), tau_image(spec, a.i))
            pending = identity(spec.n)
        else:
            pending = compose(pending, spec.image(a.kind, a.i))
    return _right_translate(acc, pending)


def sum_elements(elements: Iterable[AlgebraElement], n: int) -> AlgebraElement:
    acc = AlgebraElement(n)
    for e in elements:
        acc = algebra_add(acc, e)
    return acc


def dumps(x: AlgebraElement) -> str:
    return json.dumps(x.to_json())
