import pytest
from hypothesis import given, strategies as st
from sympy.combinatorics import Permutation as SymPerm

from stvb.permutations import (
    HomDomainError,
    PermHom,
    Permutation,
    PermutationError,
    all_permutations,
    applicable_homs,
    compose,
    eval_hom,
    identity,
    invert,
    is_in_kernel,
    transposition,
)
from stvb.words import Alphabet, parse_word


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(lambda t: Permutation(tuple(t)))


def to_sympy(p):
    return SymPerm([k - 1 for k in p.images])


@given(perms(5), perms(5))
def test_compose_matches_sympy(p, q):
    # sympy's p*q also applies p first
    expected = to_sympy(p) * to_sympy(q)
    assert [k - 1 for k in compose(p, q).images] == expected.array_form


@given(perms(6))
def test_inverse(p):
    assert compose(p, invert(p)).is_identity()
    assert invert(invert(p)) == p


def test_cycles():
    p = Permutation((2, 3, 1, 5, 4))
    assert p.cycle_notation() == "(1 2 3)(4 5)"
    assert p.oneline() == "[2 3 1 5 4]"
    assert identity(3).cycle_notation() == "()"


def test_bad_permutations():
    with pytest.raises(PermutationError):
        Permutation((1, 1, 2))
    with pytest.raises(PermutationError):
        transposition(3, 3)
    with pytest.raises(PermutationError):
        compose(identity(2), identity(3))


def test_all_permutations_count():
    assert len(set(all_permutations(4))) == 24


def _naive_image(w, swapping_kinds):
    # independent fold: multiply transpositions left to right
    p = identity(w.n)
    for a in w:
        if a.kind.value in swapping_kinds:
            p = compose(p, transposition(w.n, a.i))
    return p


@pytest.mark.parametrize("hom,swapping", [
    (PermHom.PHI1, "sSrt"),
    (PermHom.PHI2, "r"),
    (PermHom.PHI3, "sSr"),
    (PermHom.PI, "sSrt"),
])
def test_homs_against_naive_fold(hom, swapping):
    w = parse_word("s1 r2 t1 g3 S2 r1 t2 g1", Alphabet.BRAID, 3)
    assert eval_hom(w, hom) == _naive_image(w, swapping)


def test_sigma_rho_product_lies_in_phi1_kernel():
    w = parse_word("s1 r1", Alphabet.BRAID, 3)
    assert is_in_kernel(w, PermHom.PHI1)
    assert not is_in_kernel(w, PermHom.PHI2)


def test_domains():
    g = parse_word("T1", Alphabet.BRAID_GROUP, 3)
    assert eval_hom(g, PermHom.PI) == transposition(3, 1)
    with pytest.raises(HomDomainError):
        eval_hom(g, PermHom.PHI1)
    with pytest.raises(HomDomainError):
        eval_hom(parse_word("s1", Alphabet.BRAID, 3), PermHom.BAR)
    with pytest.raises(HomDomainError):
        eval_hom(parse_word("l1,2", Alphabet.SUB_P, 3), PermHom.PHI1)
    assert applicable_homs(Alphabet.BRAID_GROUP) == [PermHom.PI]
    with pytest.raises(HomDomainError):
        applicable_homs(Alphabet.SUB_P)
