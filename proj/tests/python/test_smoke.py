import pathlib

import pytest

import spinetorsion as st

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
SLIDING = FIXTURES / "sliding_move.spine"


def test_one_vertex_census():
    r = st.census(1)
    assert r["count"] == 4
    assert r["rigid"] == 4
    assert sorted(s["boundary_spheres"] for s in r["spines"]) == [1, 1, 2, 2]


def test_census_round_trips():
    for s in st.census(2)["spines"]:
        assert st.normalize(s["spine"]) == s["spine"]


def test_sliding_move_table_is_null():
    r = st.hcheck(SLIDING, face=0, variant=0)
    assert len(r["rows"]) == 21
    assert r["null"] and r["total"] == {}
    assert "".join(row["end1"] for row in r["rows"]) == "ccccdccdccdccddcddcdd"


def test_summary_identity():
    s = st.summary(SLIDING)
    assert s["chi_complex"] == 1 - s["chi_spine"]


def test_move_and_inverse():
    text = SLIDING.read_text()
    m = st.move(text, face=0, variant=0)["moves"][0]
    assert m["tets_after"] == 3
    after = m["spine"]
    back = None
    for e in range(st.summary(after)["E"]):
        try:
            back = st.move(after, edge=e)["moves"][0]["spine"]
        except st.SpineError:
            continue
        if st.summary(back)["canonical_form"] == st.summary(text)["canonical_form"]:
            break
    assert back is not None
    assert st.summary(back)["canonical_form"] == st.summary(text)["canonical_form"]


def test_zero_walk_keeps_torsion():
    text = (FIXTURES / "census2_5.spine").read_text()
    w = st.walk(text, steps=0, seed=1)
    assert w["spine"] == text
    a = st.torsion(text, rep="free-abelian", homology_basis="auto")
    b = st.torsion(w["spine"], rep="free-abelian", homology_basis="auto")
    assert a == b


def test_walk_replays_bit_exactly():
    text = (FIXTURES / "census2_5.spine").read_text()
    w = st.walk(text, steps=6, seed=3, h_null_only=True)
    assert all(w["h_null"])
    assert st.walk(text, steps=6, seed=3, h_null_only=True) == w
    assert st.replay(text, w["log"])["spine"] == w["spine"]


def test_invariance_walk():
    r = st.invariance(FIXTURES / "census2_5.spine", steps=4, seed=2)
    assert r["all_equal"]
    assert len(r["steps"]) == 4


def test_errors_carry_the_code():
    with pytest.raises(st.SpineError, match="NotAcyclicNoBasis"):
        st.torsion(FIXTURES / "census1_0.spine")
    with pytest.raises(st.SpineError, match="line 3"):
        st.validate("branched-spine 1\ntets 1\nglue 0.0 -> 0.1 : 0x2\n")


def test_euler_report_shape():
    r = st.euler(SLIDING)
    assert all(n % 2 == 0 for n in r["tangency"])
    assert r["chain_class"] == r["cochain_class"]
