import json
from collections import Counter

import pytest

from stvb.presentations import (
    FLAG_69,
    Family,
    PresentationError,
    all_labels,
    build_presentation,
    count_relations,
    mutate,
    reduction_formulas,
    relation_from_text,
)
from stvb.words import Alphabet


def far(n):
    """Unordered pairs i < j <= n - 1 with j - i > 1."""
    return max(0, (n - 2) * (n - 3) // 2)


def tvb_count(n):
    f = far(n)
    return (f + (n - 2) + (n - 1) + f + (n - 2) + 2 * f + (n - 2) + n + n * (n - 1) // 2
            + 2 * (n - 1) * (n - 2) + 2 * (n - 1))


def singular_count(n):
    f = far(n)
    return ((n - 1) + f + 2 * f + (n - 1) + 3 * (n - 2) + 2 * f
            + (n - 1) * (n - 2) + (n - 1))


def r3_count(n):
    return 2 * far(n) + (n - 1) * (n - 2) + 2 * (n - 1) + 3 * (n - 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_braid_family_counts_match_index_formulas(n):
    assert count_relations(build_presentation("tvb", n)) == tvb_count(n)
    assert count_relations(build_presentation("stvb", n)) == tvb_count(n) + singular_count(n)
    stvg_extra = (n - 1) + r3_count(n) + 2 * (n - 1) + 3 * far(n)
    assert len(build_presentation("stvg", n)) == tvb_count(n) + singular_count(n) + stvg_extra


def test_stvp_label_counts_n4():
    # ordered tuples of distinct indices; symmetric commutations counted once
    expected = {
        "(8)": 4, "(9)": 6, "(43)": 12, "(44)": 12, "(45)": 24, "(46)": 24, "(47)": 12,
        "(48)": 12, "(49)": 24, "(50)": 24, "(51)": 6, "(52)": 24, "(53)": 24, "(54)": 12,
    }
    got = Counter(r.label for r in build_presentation("stvp", 4))
    assert dict(got) == expected


def test_known_counts():
    table = {
        "stvp": [10, 57, 220], "stvh": [11, 60, 226], "m": [11, 54, 226],
        "stvpg": [16, 75, 256],
    }
    for fam, counts in table.items():
        assert [len(build_presentation(fam, n)) for n in (2, 3, 4)] == counts


def test_twist_relation_instance():
    p = build_presentation("stvb", 2)
    lines = {r.to_line() for r in p}
    assert "(23) | r1 t1 r1 = g2 g1 t1 g1 g2" in lines
    assert "(13) | r1 s1 r1 = g2 g1 s1 g1 g2" in lines
    assert "(14) | s1 S1 = " in lines


def test_stvg_contains_group_relations():
    p = build_presentation("stvg", 4)
    assert p.tag is Alphabet.BRAID_GROUP
    labels = set(p.labels())
    assert {"(14')", "R'2", "R'3", "R'1(23)", "R'1(17)"} <= labels
    lines = {r.to_line() for r in p}
    assert "R'2 | T1 t1 = " in lines and "R'2 | t1 T1 = " in lines


def test_stvpg_has_two_sided_inverses():
    p = build_presentation("stvpg", 2)
    lines = {r.to_line() for r in p.by_label("inv")}
    assert lines == {
        "inv | l1,2 L1,2 = ", "inv | L1,2 l1,2 = ", "inv | l2,1 L2,1 = ", "inv | L2,1 l2,1 = ",
        "inv | y1,2 Y1,2 = ", "inv | Y1,2 y1,2 = ", "inv | y2,1 Y2,1 = ", "inv | Y2,1 y2,1 = ",
    }


def test_reduced_presentation():
    p = build_presentation("stvb-reduced", 5)
    assert {f"({k})" for k in range(27, 43)} <= set(p.labels())
    with pytest.raises(PresentationError):
        build_presentation("stvb-reduced", 3)


def test_reduction_formulas():
    rels = reduction_formulas(4)
    lines = {r.to_line() for r in rels}
    assert "(24) | s2 = r1 r2 s1 r2 r1" in lines
    assert "(24) | S3 = r2 r1 r3 r2 S1 r2 r3 r1 r2" in lines
    assert "(26) | g3 = r2 r1 g1 r1 r2" in lines


def test_m_presentation_notes_flag():
    p = build_presentation("m", 4)
    assert FLAG_69 in p.notes
    assert p.by_label("(69)")


def test_json_and_text():
    p = build_presentation("tvb", 3)
    data = json.loads(p.dumps())
    assert data[0].keys() == {"label", "indices", "left", "right"}
    assert p.to_text().count("\n") == len(p) - 1


def test_mutate_and_labels():
    p = build_presentation("tvb", 3)
    bad = relation_from_text("bogus", "s1", "r1", Alphabet.BRAID, 3)
    q = mutate(p, bad)
    assert len(q) == len(p) + 1 and q.relations[-1] is bad
    assert "bogus" in all_labels([q])


def test_unknown_family():
    with pytest.raises(ValueError):
        build_presentation("nope", 3)
    with pytest.raises(PresentationError):
        build_presentation(Family.TVB, 1)
