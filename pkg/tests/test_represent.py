
import pytest
from hypothesis import given, settings, strategies as st

from lagmat.errors import DomainError
from lagmat.exactlin import GF2, ExactMatrix, det, matrix
from lagmat.ground import all_transversals, parse_transversal
from lagmat.represent import (Representation, extract_bases, fundamental_reduction, is_basis_by_reduction,
                              relative_signs, representation_sign_table, sign_of_basis)


def labels(m):
    return set(m.labels)


def test_extract_bases_figures(mats):
    assert labels(mats["fig1"]) == {"1*2*3*", "12*3*", "1*23*", "1*2*3", "123*", "12*3"}
    assert labels(mats["fig2_gf2"]) == {"1*2*3*", "123*", "12*3", "1*23"}
    assert labels(mats["lsquare"]) == {"1*2*3*4*", "123*4*", "1*2*34", "1234"}
    assert labels(mats["fig3_left"]) == labels(mats["fig3_right"]) == {"1*23", "12*3", "123*", "123"}


def test_invariants_checked():
    with pytest.raises(DomainError, match="symmetric"):
        Representation(matrix([[1, 2], [3, 4]]), ExactMatrix.identity(2))
    with pytest.raises(DomainError, match="rank"):
        Representation(matrix([[1, 0], [1, 0]]), matrix([[0, 0], [0, 0]]))
    with pytest.raises(DomainError, match="field"):
        Representation(matrix([[1]]), ExactMatrix.identity(1, GF2))


def test_rank_mismatch(reps):
    with pytest.raises(DomainError):
        extract_bases(reps["fig1"], 2)


def test_rank_k_extraction():
    # a 1 x 2 representation: row (1, 0 | 0, 1)
    r = Representation(matrix([[1, 0]]), matrix([[0, 1]]))
    m = extract_bases(r)
    assert m.k == 1 and set(m.labels) == {"1", "2*"}


def test_reduction_examples(reps):
    c = matrix([[1, 2, 0], [2, 0, 1], [0, 1, -1]])
    assert fundamental_reduction(Representation.symmetric(c), parse_transversal("1*2*3*", 3)).cf == c
    right = reps["fig3_right"]
    assert fundamental_reduction(right, parse_transversal("123", 3)).cf == matrix([[1] * 3] * 3)
    assert fundamental_reduction(right, parse_transversal("1*23", 3)).cf == matrix(
        [[-1, -1, -1], [-1, 0, 0], [-1, 0, 0]])
    with pytest.raises(DomainError):
        fundamental_reduction(right, parse_transversal("1*2*3*", 3))


def test_sign_examples(reps):
    f = parse_transversal("123", 3)
    g = parse_transversal("1*23", 3)
    fr = fundamental_reduction(reps["fig3_right"], f)
    assert sign_of_basis(fr, f) == 1
    assert sign_of_basis(fr, g) == 1
    assert sign_of_basis(fundamental_reduction(reps["fig3_left"], f), g) == -1


def test_representation_tables(reps):
    f = parse_transversal("123", 3)
    left = representation_sign_table(reps["fig3_left"]).row(f).signs
    right = representation_sign_table(reps["fig3_right"]).row(f).signs
    assert all(v == -1 for b, v in left.items() if b != f)
    assert all(v == 1 for v in right.values())


def _sym(n, vals):
    rows = [[0] * n for _ in range(n)]
    it = iter(vals)
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = next(it)
    return rows


sym = st.integers(1, 4).flatmap(lambda n: st.lists(st.integers(-3, 3), min_size=n * (n + 1) // 2,
                                                   max_size=n * (n + 1) // 2).map(lambda v: _sym(n, v)))


@settings(max_examples=80, deadline=None)
@given(sym)
def test_bases_are_nonzero_principal_minors(rows):
    # oracle: G is a basis of (S, I) iff the principal minor of S on the unstarred part is non-zero
    s = matrix(rows)
    m = extract_bases(Representation.symmetric(s))
    n = len(rows)
    for t in all_transversals(n):
        idx = [i - 1 for i in range(1, n + 1) if t.signs[i - 1] == 1]
        assert (t in m) == (det(s.principal(idx)) != 0)


@settings(max_examples=60, deadline=None)
@given(sym)
def test_reduction_agrees_with_minors(rows):
    r = Representation.symmetric(matrix(rows))
    m = extract_bases(r)
    for f in m.sorted_bases():
        fr = fundamental_reduction(r, f)
        assert fr.cf.is_symmetric()
        for g in all_transversals(r.n):
            assert is_basis_by_reduction(fr, g) == (g in m)
            assert (sign_of_basis(fr, g) != 0) == (g in m)


@settings(max_examples=40, deadline=None)
@given(sym, st.integers(0, 1000))
def test_row_operations_preserve_everything(rows, seed):
    # multiplying (A, B) on the left by an invertible matrix changes neither bases nor relative signs
    import random
    rng = random.Random(seed)
    n = len(rows)
    while True:
        g = matrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if det(g) != 0:
            break
    r = Representation.symmetric(matrix(rows))
    r2 = Representation(g @ r.left, g @ r.right)
    m = extract_bases(r)
    assert extract_bases(r2) == m
    f = m.sorted_bases()[0]
    assert relative_signs(r, f) == relative_signs(r2, f)
