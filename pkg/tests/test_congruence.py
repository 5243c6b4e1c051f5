import pytest
from hypothesis import given, settings, strategies as st

from stvb import _search_py
from stvb.congruence import (
    BACKEND,
    Derivation,
    DerivationError,
    Step,
    apply_step,
    bfs_equal,
    check_relation_invariance,
    default_maxlen,
    invariant_vector,
    random_word,
)
from stvb.permutations import PermHom, eval_hom, is_in_kernel
from stvb.presentations import Family, build_presentation, mutate, relation_from_text
from stvb.words import Alphabet, Kind, WordError, parse_word

try:
    from stvb import _search_ext
except ImportError:  # pragma: no cover
    _search_ext = None

B, G = Alphabet.BRAID, Alphabet.BRAID_GROUP


def bw(text, n, tag=B):
    return parse_word(text, tag, n)


def test_invariant_vector_components():
    v = invariant_vector(bw("s1 S2 s2 t1 r2 g3", 3))
    assert (v.sigma_exponent, v.tau_count, v.rho_parity, v.gamma_parity) == (1, 1, 1, 1)
    gv = invariant_vector(bw("T1 t2 T2", 3, G))
    assert gv.tau_count == -1
    with pytest.raises(WordError):
        invariant_vector(parse_word("l1,2", Alphabet.SUB_P, 3))


@pytest.mark.parametrize("family", [f for f in Family if f in
                                    (Family.STVB_FULL, Family.TVB, Family.STVG)])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_relations_preserve_invariants(family, n):
    report = check_relation_invariance(build_presentation(family, n))
    assert report.ok and not report.disabled


def test_invariance_report_flags_bad_relation():
    p = build_presentation("tvb", 3)
    bad = mutate(p, relation_from_text("bad", "s1", "r1", B, 3))
    report = check_relation_invariance(bad)
    assert not report.ok
    assert "sigma_exponent" in report.disabled and "rho_parity" in report.disabled


def test_bfs_equal_gamma_conjugation():
    p = build_presentation("stvb", 3)
    res = bfs_equal(p, bw("g2", 3), bw("r1 g1 r1", 3), budget=10_000)
    assert res.status == "equivalent"
    assert [s.label for s in res.derivation.steps] == ["(3)", "(12)"]
    assert res.derivation.replay(p) == bw("r1 g1 r1", 3)


def test_bfs_equal_identical_words():
    p = build_presentation("stvb", 3)
    res = bfs_equal(p, bw("s1", 3), bw("s1", 3))
    assert res.equivalent and len(res.derivation) == 0


def test_bfs_refutes_by_invariants():
    p = build_presentation("stvb", 3)
    res = bfs_equal(p, bw("s1", 3), bw("r1", 3))
    assert res.status == "refuted"
    assert "sigma_exponent" in res.refuted_by and "rho_parity" in res.refuted_by


def test_bfs_unknown_on_budget():
    p = build_presentation("stvb", 3)
    res = bfs_equal(p, bw("g1", 3), bw("g2", 3), budget=500)
    assert res.status == "unknown" and res.states >= 500


def test_bfs_rejects_foreign_words():
    p = build_presentation("stvb", 3)
    with pytest.raises(WordError):
        bfs_equal(p, bw("s1", 4), bw("s1", 4))


def test_default_maxlen():
    assert default_maxlen(bw("s1", 3), bw("s1 s2 s1", 3)) == 11


def test_derivation_replay_detects_tampering():
    p = build_presentation("stvb", 3)
    res = bfs_equal(p, bw("g2", 3), bw("r1 g1 r1", 3))
    d = res.derivation
    first = d.steps[0]
    bad = Derivation(d.source, (Step(first.pos + 5, first.label, first.direction,
                                     first.relation),) + d.steps[1:], d.words)
    with pytest.raises(DerivationError):
        bad.replay(p)
    wrong_label = Derivation(d.source, (Step(first.pos, "(99)", first.direction,
                                             first.relation),), d.words)
    with pytest.raises(DerivationError):
        wrong_label.replay(p)


def test_apply_step():
    p = build_presentation("stvb", 2)
    rel = p.by_label("(3)")[0]
    assert apply_step(bw("s1 r1 r1", 2), rel, 1, "fwd") == bw("s1", 2)
    assert apply_step(bw("s1", 2), rel, 1, "rev") == bw("s1 r1 r1", 2)


# -- both kernels agree ---------------------------------------------------------------

CASES = [
    ("stvb", 3, "g2", "r1 g1 r1"),
    ("stvb", 4, "t1 r1", "g1 g2 r1 t1 r1 r1 g2 g1"),
    ("stvg", 4, "S2", "r1 r2 S1 r2 r1"),
    ("stvb", 4, "t2", "r1 r2 t1 r2 r1"),
]


@pytest.mark.skipif(_search_ext is None, reason="compiled kernel not built")
@pytest.mark.parametrize("family,n,u,v", CASES)
def test_backends_agree(family, n, u, v):
    p = build_presentation(family, n)
    uw, vw = bw(u, n, p.tag), bw(v, n, p.tag)
    r_py = bfs_equal(p, uw, vw, backend=_search_py)
    r_c = bfs_equal(p, uw, vw, backend=_search_ext)
    assert r_py.status == r_c.status == "equivalent"
    assert r_py.states == r_c.states
    assert r_py.derivation.steps == r_c.derivation.steps


@pytest.mark.skipif(_search_ext is None, reason="compiled kernel not built")
@settings(max_examples=50, deadline=None)
@given(st.binary(min_size=0, max_size=8).map(lambda b: bytes(x % 4 + 1 for x in b)))
def test_neighbours_agree(word):
    rules = [(b"\x01\x01", b""), (b"", b"\x01\x01"), (b"\x02\x03", b"\x03\x02"),
             (b"\x03\x02", b"\x02\x03"), (b"\x04", b"\x02\x04\x02"), (b"\x02\x04\x02", b"\x04")]
    py = sorted(_search_py.neighbours(word, rules, 10))
    cy = sorted(_search_ext.neighbours(word, rules, 10))
    assert py == cy


def test_unidirectional_search_matches():
    p = build_presentation("stvb", 3)
    res = bfs_equal(p, bw("g2", 3), bw("r1 g1 r1", 3), bidirectional=False, restrict=False)
    assert res.equivalent and res.derivation.replay(p) == bw("r1 g1 r1", 3)


def test_backend_reported():
    assert BACKEND in ("cython", "python")


# -- sigma inverse on the left: not a consequence of the monoid relations --------------

class _Model:
    """Maps on the naturals, composed left to right.

    sigma_i -> x |-> 2x, sigma_i^-1 -> a left inverse of it that depends on the
    parity of i, every other letter -> identity.  sigma_i sigma_i^-1 = e holds,
    the other order does not.
    """

    @staticmethod
    def act(letter, x):
        if letter.kind is Kind.SIGMA:
            return 2 * x
        if letter.kind is Kind.SIGMA_INV:
            return (x + (letter.i - 1) % 2) // 2
        return x

    def run(self, w, x):
        for a in w:
            x = self.act(a, x)
        return x

    def equal(self, u, v, points=range(40)):
        return all(self.run(u, x) == self.run(v, x) for x in points)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_countermodel_satisfies_monoid_relations(n):
    m = _Model()
    for rel in build_presentation("stvb", n):
        assert m.equal(rel.left, rel.right), rel.to_line()


def test_countermodel_separates_left_inverse_and_reduction():
    m = _Model()
    assert not m.equal(bw("S1 s1", 2), bw("", 2))
    assert not m.equal(bw("S2", 4), bw("r1 r2 S1 r2 r1", 4))


def test_group_completion_derives_left_inverse():
    p = build_presentation("stvg", 4)
    res = bfs_equal(p, bw("S2", 4, G), bw("r1 r2 S1 r2 r1", 4, G))
    assert res.equivalent and "(14')" in {s.label for s in res.derivation.steps}


# -- random words --------------------------------------------------------------------

def test_random_word_deterministic():
    assert random_word(3, 10, seed=5) == random_word(3, 10, seed=5)
    assert random_word(3, 10, seed=5) != random_word(3, 10, seed=6)


@pytest.mark.parametrize("hom", ["phi1", "phi2", "phi3"])
def test_random_kernel_words(hom):
    for seed in range(30):
        w = random_word(4, 12, seed=seed, constraint=hom)
        assert is_in_kernel(w, hom)


def test_random_group_word():
    w = random_word(3, 30, G, seed=1, constraint="pi")
    assert w.tag is G and eval_hom(w, PermHom.PI).is_identity()


def test_pure_python_fallback_selected_by_environment():
    import os
    import subprocess
    import sys
    env = dict(os.environ, STVB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import stvb; print(stvb.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
