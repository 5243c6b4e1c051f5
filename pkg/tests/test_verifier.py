import json

import pytest

from stvb.groupalgebra import make_canonical_rep, make_flat_rep
from stvb.permutations import transposition
from stvb.presentations import (
    BRAID_FAMILIES,
    SUBMONOID_FAMILIES,
    Family,
    all_labels,
    build_presentation,
    mutate,
    reduction_formulas,
    relation_from_text,
)
from stvb.verifier import (
    RepRejected,
    ReportItem,
    VerificationError,
    curated_derivations,
    derivation_from_witness,
    detected,
    fuzz_roundtrip,
    golden_words,
    merge_reports,
    replay_witness,
    verify_lemma_action,
    verify_phi_abc,
    verify_presentation_under_images,
    verify_reduction_formulas,
    verify_schreier_golden,
    verify_submonoid_presentation,
)
from stvb.words import Alphabet, Kind

B = Alphabet.BRAID


def test_report_summary_and_schema():
    r = verify_presentation_under_images("stvb", 3)
    data = r.to_json()
    assert set(data) == {"suite", "family", "n", "items", "summary"}
    assert data["summary"] == {"pass": len(r.items), "fail": 0, "unknown": 0}
    item = data["items"][0]
    assert {"label", "indices", "model", "verdict"} <= set(item)
    keys = [it.sort_key() for it in r.items]
    assert keys == sorted(keys)


def test_fail_items_need_witness():
    with pytest.raises(VerificationError):
        ReportItem("(1)", (), "phi1", "fail")
    with pytest.raises(VerificationError):
        ReportItem("(1)", (), "phi1", "maybe")


def test_label_order_is_numeric():
    r = verify_presentation_under_images("tvb", 4)
    labels = []
    for it in r.items:
        if not labels or labels[-1] != it.label:
            labels.append(it.label)
    assert labels[:4] == ["(1)", "(2)", "(3)", "(4)"]
    assert labels.index("(9)") < labels.index("(10)")


def test_reports_are_byte_stable():
    a = verify_submonoid_presentation("stvp", 3).dumps()
    b = verify_submonoid_presentation("stvp", 3).dumps()
    assert a == b
    f1 = fuzz_roundtrip(3, 50, 20, seed=4).dumps()
    assert f1 == fuzz_roundtrip(3, 50, 20, seed=4).dumps()
    assert f1 != fuzz_roundtrip(3, 50, 20, seed=5).dumps()


def test_image_suite_rejects_submonoid_family():
    with pytest.raises(VerificationError):
        verify_presentation_under_images("stvp", 3)
    with pytest.raises(VerificationError):
        verify_submonoid_presentation("stvb", 3)


# -- negative controls ---------------------------------------------------------------

@pytest.mark.parametrize("left,right", [
    ("s1", "r1"),                        # corrupted relation
    ("r1 s1 r1", "g2 g1 t1 g1 g2"),      # sigma replaced by tau on one side
    ("r1 s2 r1", "r2 s1 r1"),            # wrong index
    ("g2 r1", "r1"),                     # gamma dropped
])
def test_mutated_relation_detected_with_witness(left, right):
    p = build_presentation("stvb", 3)
    bad = mutate(p, relation_from_text("mut", left, right, B, 3))
    report = verify_presentation_under_images("stvb", 3, bad)
    fails = [it for it in report.failures() if it.label == "mut"]
    assert fails and all(replay_witness(it.witness) for it in fails)
    assert detected(report)


def test_gamma_relabelling_is_invisible_to_these_models():
    # every S_n representation here sends gamma to the identity, so moving a
    # gamma without relabelling it is a known blind spot of the image checks
    p = build_presentation("stvb", 3)
    bad = mutate(p, relation_from_text("mut", "g2 r1", "r1 g2", B, 3))
    assert verify_presentation_under_images("stvb", 3, bad).ok


def test_sigma_tau_swap_caught_by_algebra():
    p = build_presentation("stvb", 3)
    bad = mutate(p, relation_from_text("(18)", "t1 t2 s1", "s2 t1 t2", B, 3))
    report = verify_phi_abc(3, presentation=bad)
    assert report.summary["fail"] == 1
    assert detected(report)


def test_corrupted_repspec_fails_fast():
    bad = make_canonical_rep(3).replace(Kind.GAMMA, 1, transposition(3, 1))
    with pytest.raises(RepRejected) as exc:
        verify_phi_abc(3, bad)
    w = exc.value.witness()
    assert w["left_image"] != w["right_image"]
    assert replay_witness(w)


def test_flat_rep_passes_phi_abc():
    assert verify_phi_abc(3, make_flat_rep(3)).ok


def test_witness_replay_rejects_forgery():
    p = build_presentation("stvb", 3)
    bad = mutate(p, relation_from_text("mut", "s1", "r1", B, 3))
    item = next(it for it in verify_presentation_under_images("stvb", 3, bad).failures()
                if it.model == "phi2")
    forged = dict(item.witness, left_image=item.witness["right_image"])
    assert replay_witness(item.witness) and not replay_witness(forged)
    with pytest.raises(VerificationError):
        replay_witness({"kind": "nonsense"})


# -- suites --------------------------------------------------------------------------

def test_phi_abc_items_labelled():
    r = verify_phi_abc(4)
    assert r.ok
    assert {it.item for it in r.items if it.item} == {"i", "ii", "iii", "iv"}
    assert {it.label for it in r.items if it.item == "iv"} == {"(23)"}


def test_curated_derivations_replay():
    r = verify_submonoid_presentation("stvp", 3)
    bfs = [it for it in r.items if it.model.startswith("bfs")]
    assert {it.label for it in bfs} == {"(43)", "(54)", "def:l", "def:y"}
    for it in bfs:
        assert it.verdict == "pass" and replay_witness(it.witness)
        d = derivation_from_witness(it.witness)
        assert str(d.target) == it.witness["right"]


def test_curated_list_models():
    entries = curated_derivations("stvp", 2)
    fams = {label: fam for label, _, fam, _, _ in entries}
    assert fams["(43)"] is Family.STVG and fams["(54)"] is Family.STVB_FULL


def test_reduction_suite():
    r = verify_reduction_formulas(4)
    assert r.ok
    bfs = {(it.label, dict(it.indices).get("sign")): it.model
           for it in r.items if it.model.startswith("bfs")}
    assert bfs == {("(24)", 1): "bfs:stvb", ("(24)", -1): "bfs:stvg",
                   ("(25)", None): "bfs:stvb", ("(26)", None): "bfs:stvb"}


def test_schreier_golden_and_sweep():
    r = verify_schreier_golden(3)
    assert r.ok
    assert {it.model for it in r.items} == {"rewrite", "sweep"}
    # each crossing index has one gamma outside {i, i+1} at n = 3; two sides per case
    assert len(golden_words(3)) == 2 * 2 + 2 * 2


def test_lemma_action_small():
    assert verify_lemma_action(3).ok


def test_fuzz_validation():
    with pytest.raises(VerificationError):
        fuzz_roundtrip(3, 1, 2, hom="phi1")
    with pytest.raises(VerificationError):
        fuzz_roundtrip(3, 1, 20, hom="pi")


def test_merge_reports():
    a = verify_presentation_under_images("tvb", 2)
    b = verify_reduction_formulas(3)
    m = merge_reports("all", [a, b])
    assert len(m.items) == len(a.items) + len(b.items)
    assert json.loads(m.dumps())["suite"] == "all"
    assert "pass=" in m.to_text()


def test_text_lists_failures():
    p = build_presentation("tvb", 3)
    bad = mutate(p, relation_from_text("mut", "s1", "r1", B, 3))
    text = verify_presentation_under_images("tvb", 3, bad).to_text()
    assert "fail" in text and "mut" in text


# -- coverage manifest ---------------------------------------------------------------

def test_suites_cover_every_relation_label():
    expected = all_labels(build_presentation(f, n) for f in BRAID_FAMILIES for n in (4, 5))
    expected |= all_labels(build_presentation(f, 4) for f in SUBMONOID_FAMILIES)
    expected |= {r.label for r in reduction_formulas(4)}
    logged: set[str] = set()
    for f in (Family.STVB_FULL, Family.TVB, Family.STVG):
        logged |= verify_presentation_under_images(f, 5).labels()
    logged |= verify_presentation_under_images(Family.STVB_REDUCED, 5).labels()
    logged |= verify_reduction_formulas(4).labels()
    logged |= verify_phi_abc(3).labels()
    for f in SUBMONOID_FAMILIES:
        logged |= verify_submonoid_presentation(f, 4, curated=False).labels()
    missing = expected - logged
    assert not missing
    numbered = {f"({k})" for k in range(1, 71)}
    assert numbered <= logged
