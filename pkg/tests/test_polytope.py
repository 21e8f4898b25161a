import numpy as np
import pytest

from lagmat.errors import DomainError
from lagmat.ground import parse_transversal
from lagmat.matroid import BasisSystem, enumerate_lagrangian_matroids
from lagmat.orient import RelativeSigns, enumerate_orientations, extend_signs
from lagmat.polytope import (LONG, SHORT, OrientedSkeleton, PropagationError, affine_dimension, check_balance,
                             compute_edges, embed_vertex, hull_edges, is_inducing, orient_skeleton, polytope,
                             signs_from_skeleton, to_dict, to_dot)
from lagmat.represent import representation_sign_table


def t(x, n=3):
    return parse_transversal(x, n)


def test_embed_vertex():
    assert embed_vertex(t("123")) == (1, 1, 1)
    assert embed_vertex(t("1*2*3*")) == (-1, -1, -1)
    assert embed_vertex(t("12*3")) == (1, -1, 1)


def test_figure1_edges(mats):
    sk = compute_edges(mats["fig1"])
    assert sk.edge(t("12*3"), t("1*2*3")).kind == SHORT
    assert sk.edge(t("12*3"), t("123*")).kind == LONG


def test_figure2_tetrahedron(mats):
    sk = polytope(mats["fig2_gf2"])
    assert len(sk.edges) == 6 and {e.kind for e in sk.edges} == {LONG}
    assert [f.kind for f in sk.faces] == ["eqTri"] * 4


def test_full_square_has_no_diagonals():
    m = BasisSystem.from_labels(["12", "1*2", "12*", "1*2*"], 2)
    sk = polytope(m)
    assert len(sk.edges) == 4 and {e.kind for e in sk.edges} == {SHORT}
    assert [f.kind for f in sk.faces] == ["sSquare"]


def test_figure1_faces(mats):
    kinds = [f.kind for f in polytope(mats["fig1"]).faces]
    assert {"sSquare", "nsRect", "iTri"} <= set(kinds)
    # the short-edged square lies in the face 2* of the cube
    sq = next(f for f in polytope(mats["fig1"]).faces if f.kind == "sSquare")
    assert all(v.signs[1] == -1 for v in sq.members)


def test_lsquare(mats):
    sk = polytope(mats["lsquare"])
    assert [f.kind for f in sk.faces] == ["lSquare"]
    cyc = sk.faces[0].labels
    want = ["1*2*3*4*", "123*4*", "1234", "1*2*34"]
    i = cyc.index(want[0])
    rot = cyc[i:] + cyc[:i]
    assert rot in (want, [want[0]] + want[:0:-1])


def test_edges_match_hull_oracle():
    for n in (2, 3):
        for m in enumerate_lagrangian_matroids(n):
            ours = {frozenset((e.a, e.b)) for e in compute_edges(m).edges}
            assert ours == {frozenset(p) for p in hull_edges(list(m.bases))}


def test_every_face_is_two_dimensional():
    for m in enumerate_lagrangian_matroids(3):
        sk = polytope(m)
        for f in sk.faces:
            pts = np.array([embed_vertex(v) for v in f.members])
            assert np.linalg.matrix_rank(pts[1:] - pts[0]) == 2 == affine_dimension(f.members)
            for a, b in f.boundary():
                assert sk.edge(a, b) is not None


def test_non_matroid_rejected():
    with pytest.raises(DomainError):
        compute_edges(BasisSystem.from_labels(["123", "1*2*3*"], 3))


def test_orient_examples(reps, mats):
    m = mats["fig3_right"]
    f = t("123")
    right = orient_skeleton(m, representation_sign_table(reps["fig3_right"]))
    left = orient_skeleton(m, representation_sign_table(reps["fig3_left"]))
    for e, (tail, head) in right.direction.items():
        assert tail == f
    for e, (tail, head) in left.direction.items():
        assert head == f
    assert check_balance(right) == [] and check_balance(left) == []


def test_intro_convention():
    # C = B plus {i}: same sign relative to the all-starred basis means B -> C
    m = BasisSystem.from_labels(["1*2*", "12*"], 2)
    f = t("1*2*", 2)
    st_ = extend_signs(m, RelativeSigns(f, {f: 1, t("12*", 2): 1}))
    os = orient_skeleton(m, st_)
    assert list(os.direction.values()) == [(f, t("12*", 2))]


def test_reversed_arrow_breaks_balance(reps, mats):
    m = mats["fig3_right"]
    os = orient_skeleton(m, representation_sign_table(reps["fig3_right"]))
    e = os.base.edge(t("123"), t("1*23"))
    flipped = dict(os.direction)
    flipped[e] = flipped[e][::-1]
    bad = check_balance(OrientedSkeleton(os.base, flipped))
    assert bad and all(t("123") in f.members and t("1*23") in f.members for f in bad)
    with pytest.raises(PropagationError):
        signs_from_skeleton(OrientedSkeleton(os.base, flipped), t("123"))


def test_no_short_edges_balanced(mats):
    st_ = enumerate_orientations(mats["fig2_gf2"])[0]
    assert check_balance(orient_skeleton(mats["fig2_gf2"], st_)) == []


def test_propagation_examples(reps, mats):
    m = mats["fig3_right"]
    os = orient_skeleton(m, representation_sign_table(reps["fig3_right"]))
    assert set(signs_from_skeleton(os, t("123")).signs.values()) == {1}
    s = signs_from_skeleton(os, t("1*23")).signs
    assert [s[t(x)] for x in ("123", "12*3", "123*")] == [-1, -1, -1]


def test_round_trip_census():
    for n in (1, 2, 3):
        for m in enumerate_lagrangian_matroids(n):
            sk = polytope(m)
            for st_ in enumerate_orientations(m):
                os = orient_skeleton(m, st_, sk)
                for f in m.bases:
                    assert signs_from_skeleton(os, f) == st_.row(f)


def test_inducing(reps, mats):
    m = mats["fig2_gf2"]
    os = orient_skeleton(m, enumerate_orientations(m)[0])
    f = t("1*2*3*")
    kinds = sorted(is_inducing(os, e, f) for e in os.base.edges)
    assert kinds == [False] * 3 + [True] * 3


def test_exports(reps, mats):
    m = mats["fig3_right"]
    st_ = representation_sign_table(reps["fig3_right"])
    os = orient_skeleton(m, st_)
    d = to_dict(os.base, os, st_.row(t("123")))
    assert d["n"] == 3
    assert {v["basis"]: v["sign_rel"] for v in d["vertices"]}["1*23"] == 1
    assert {v["basis"]: v["point"] for v in d["vertices"]}["12*3"] == [1, -1, 1]
    shorts = [e for e in d["edges"] if e["kind"] == "short"]
    assert all(e["direction"][0] == "123" for e in shorts)
    assert {f["kind"] for f in d["faces"]} == {"iTri", "eqTri"}
    dot = to_dot(os.base, os)
    assert dot.startswith("digraph") and '"123" -> "1*23";' in dot and "style=dashed" in dot
    assert to_dot(os.base, os) == dot
