import pytest

from lagmat.errors import DomainError, NotationError
from lagmat.exactlin import GF2
from lagmat.matfile import FIGURES, figure, figure_text, parse_document


def test_figures_load():
    for name in FIGURES:
        r = figure(name)
        assert r.k == r.n
    assert figure("fig2_gf2").field == GF2


def test_round_trip():
    doc = parse_document(figure_text("fig1"))
    assert parse_document(doc.dumps()) == doc


def test_identity_default_and_fractions():
    doc = parse_document("field Q\nn 2\nleft\n1/2 0\n0 -3\n")
    assert doc.right is None
    r = doc.representation()
    assert str(r.left[0, 0]) == "1/2"


@pytest.mark.parametrize("text,match", [
    ("n 2\nfield Q\nleft\n1 0\n0 1\n", "line 1"),
    ("field R\nn 2\nleft\n1 0\n0 1\n", "line 1"),
    ("field Q\nn x\nleft\n1 0\n0 1\n", "n <positive int>"),
    ("field Q\nn 2\n1 0\n0 1\n", "expected 'left'"),
    ("field Q\nn 2\nleft\n1 0 0\n0 1\n", "expected 2 entries"),
    ("field Q\nn 2\nleft\n1 0.5\n0 1\n", "decimal"),
    ("field GF2\nn 2\nleft\n1 2\n0 1\n", "GF\\(2\\)"),
    ("field Q\nn 2\nright\n1 0\n0 1\n", "missing 'left'"),
    ("field Q\nn 2\nleft\n1 0\nleft\n0 1\n", "duplicate"),
])
def test_parse_errors(text, match):
    with pytest.raises(NotationError, match=match):
        parse_document(text)


def test_non_symmetric_is_domain_error():
    with pytest.raises(DomainError):
        parse_document("field Q\nn 2\nleft\n1 2\n3 4\n").representation()


def test_comments_ignored():
    doc = parse_document("# hi\nfield Q  # tag\nn 1\n\nleft\n5 # entry\n")
    assert doc.left.tolist() == [["5"]]
