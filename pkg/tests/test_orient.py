import pytest
from hypothesis import given, settings, strategies as st

from lagmat.errors import DomainError
from lagmat.ground import parse_transversal
from lagmat.matroid import BasisSystem, enumerate_lagrangian_matroids, height, is_even
from lagmat.orient import (RelativeSigns, SignTable, are_isomorphic, brute_force_orientations,
                           canonical_even_orientation, change_fundamental, cocycle_defects, enumerate_orientations,
                           extend_signs, is_orientation, relative_signs_from, validate_orientation)
from lagmat.represent import representation_sign_table

FIG3 = ["1*23", "12*3", "123*", "123"]
FIG2 = ["1*2*3*", "123*", "12*3", "1*23"]


def t(x, n=3):
    return parse_transversal(x, n)


def test_validate_examples():
    m = BasisSystem.from_labels(FIG3, 3)
    ok = relative_signs_from({b: 1 for b in FIG3}, "123", 3)
    assert validate_orientation(m, ok) == []
    bad = relative_signs_from({"1*23": -1, "12*3": 1, "123*": 1, "123": 1}, "123", 3)
    assert {v.axiom for v in validate_orientation(m, bad)} == {"horizontal"}
    m2 = BasisSystem.from_labels(FIG2, 3)
    rs = relative_signs_from({"1*2*3*": 1, "123*": -1, "12*3": -1, "1*23": -1}, "1*2*3*", 3)
    assert validate_orientation(m2, rs) == []


def test_validate_rejects_malformed():
    m = BasisSystem.from_labels(FIG3, 3)
    with pytest.raises(DomainError):
        validate_orientation(m, relative_signs_from({"123": 1}, "123", 3))
    with pytest.raises(DomainError):
        validate_orientation(m, relative_signs_from({b: 1 for b in FIG3}, "1*2*3*", 3))
    neg = relative_signs_from({b: (-1 if b == "123" else 1) for b in FIG3}, "123", 3)
    assert {v.axiom for v in validate_orientation(m, neg)} >= {"fundamental"}


def test_extend_examples(reps, mats):
    m = mats["fig1"]
    f = t("1*2*3*")
    st_ = extend_signs(m, RelativeSigns(f, {b: 1 for b in m.bases}))
    assert st_(t("12*3*"), t("123*")) == 1
    assert st_.row(f) == RelativeSigns(f, {b: 1 for b in m.bases})
    assert st_(t("12*3"), t("1*2*3")) * st_(t("1*2*3"), t("12*3")) == -1
    assert st_(t("123"), f) == 0


def test_change_fundamental_example(reps):
    st_ = representation_sign_table(reps["fig3_right"])
    row = change_fundamental(st_, t("1*23")).signs
    assert [row[t(x)] for x in ("123", "12*3", "123*")] == [-1, -1, -1]


@pytest.mark.parametrize("labels,n,count", [(FIG3, 3, 2), (FIG2, 3, 1), (["1", "1*"], 1, 2)])
def test_enumerate_examples(labels, n, count):
    m = BasisSystem.from_labels(labels, n)
    assert len(enumerate_orientations(m)) == count


def test_enumeration_matches_brute_force_and_seed():
    for n in (1, 2, 3):
        for m in enumerate_lagrangian_matroids(n):
            found = enumerate_orientations(m)
            assert found == brute_force_orientations(m)
            last = m.sorted_bases()[-1]
            assert found == enumerate_orientations(m, last)
            for st_ in found:
                assert is_orientation(m, st_)


def test_canonical_even_examples():
    m = BasisSystem.from_labels(FIG2, 3)
    row = canonical_even_orientation(m, t("1*2*3*")).row(t("1*2*3*")).signs
    assert [row[t(x)] for x in ("123*", "12*3", "1*23")] == [-1, -1, -1]
    m2 = BasisSystem.from_labels(["12", "1*2*"], 2)
    assert canonical_even_orientation(m2, t("1*2*", 2))(t("1*2*", 2), t("12", 2)) == -1
    single = BasisSystem.from_labels(["12*"], 2)
    st_ = canonical_even_orientation(single)
    assert st_.values == {(t("12*", 2), t("12*", 2)): 1}
    with pytest.raises(DomainError):
        canonical_even_orientation(BasisSystem.from_labels(FIG3, 3))


def test_even_change_of_fundamental():
    for m in enumerate_lagrangian_matroids(3):
        if is_even(m):
            base = canonical_even_orientation(m)
            for g in m.bases:
                assert canonical_even_orientation(m, g) == base
                assert change_fundamental(base, g).signs == {
                    a: (-1) ** (height(a, g) // 2) for a in m.bases}


def test_isomorphism_examples(reps, mats):
    m = mats["fig3_left"]
    sl, sr = representation_sign_table(reps["fig3_left"]), representation_sign_table(reps["fig3_right"])
    w = are_isomorphic(m, sl, m, sl)
    assert w is not None and str(w) == "1->1 2->2 3->3"
    assert are_isomorphic(m, None, mats["fig3_right"], None) is not None
    assert are_isomorphic(m, sl, mats["fig3_right"], sr) is None
    with pytest.raises(ValueError):
        are_isomorphic(m, sl, m, None)


def test_cocycle_on_census():
    for n in (1, 2, 3):
        for m in enumerate_lagrangian_matroids(n):
            for st_ in enumerate_orientations(m):
                assert cocycle_defects(st_) == []


def test_cocycle_detects_tampering(mats):
    m = mats["fig1"]
    st_ = enumerate_orientations(m)[0]
    vals = dict(st_.values)
    a, b = m.sorted_bases()[:2]
    vals[a, b] = -vals[a, b]
    assert cocycle_defects(SignTable(3, vals))


def test_json_shape(reps):
    st_ = representation_sign_table(reps["fig3_right"])
    d = st_.to_dict(t("123"), full=True)
    assert d["fundamental"] == "123"
    assert d["signs"] == {"1*23": 1, "12*3": 1, "123": 1, "123*": 1}
    assert d["table"]["1*23"]["123"] == -1


census3 = list(enumerate_lagrangian_matroids(3))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, len(census3) - 1), st.data())
def test_random_assignment_valid_iff_enumerated(k, data):
    m = census3[k]
    f = m.sorted_bases()[0]
    signs = {b: (1 if b == f else data.draw(st.sampled_from([1, -1]))) for b in m.sorted_bases()}
    rs = RelativeSigns(f, signs)
    valid = not validate_orientation(m, rs)
    tables = enumerate_orientations(m)
    assert valid == any(tb.row(f) == rs for tb in tables)
