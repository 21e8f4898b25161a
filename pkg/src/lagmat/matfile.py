"""Plain-text matrix documents.

    # comment
    field Q            (or GF2)
    n 3
    left
    1 1 1
    ...
    right              (optional, defaults to the identity)
    ...

Entries are exact tokens: integers or p/q over Q, 0/1 over GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import NotationError
from .exactlin import FIELDS, ExactMatrix, matrix
from .represent import Representation

FIGURES = ("fig1", "fig2_gf2", "fig3_left", "fig3_right", "lsquare", "hyperbolic")


@dataclass(frozen=True)
class MatrixDocument:
    field: str
    n: int
    left: ExactMatrix
    right: ExactMatrix | None = None

    def representation(self) -> Representation:
        right = self.right if self.right is not None else ExactMatrix.identity(self.n, self.field)
        return Representation(self.left, right)

    def dumps(self) -> str:
        out = [f"field {self.field}", f"n {self.n}", "left"]
        out += [" ".join(r) for r in self.left.tolist()]
        if self.right is not None:
            out.append("right")
            out += [" ".join(r) for r in self.right.tolist()]
        return "\n".join(out) + "\n"


def _lines(text: str):
    for num, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield num, line


def parse_document(text: str) -> MatrixDocument:
    lines = list(_lines(text))
    if len(lines) < 2:
        raise NotationError("matrix file needs 'field' and 'n' header lines")
    (_, head1), (num2, head2) = lines[0], lines[1]
    parts = head1.split()
    if len(parts) != 2 or parts[0] != "field" or parts[1] not in FIELDS:
        raise NotationError(f"line 1 must be 'field Q' or 'field GF2', got {head1!r}")
    field = parts[1]
    parts = head2.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit() or int(parts[1]) < 1:
        raise NotationError(f"line {num2} must be 'n <positive int>', got {head2!r}")
    n = int(parts[1])

    blocks: dict[str, list] = {}
    current = None
    for num, line in lines[2:]:
        if line in ("left", "right"):
            if line in blocks:
                raise NotationError(f"line {num}: duplicate '{line}' block")
            current = blocks[line] = []
            continue
        if current is None:
            raise NotationError(f"line {num}: expected 'left' before matrix rows")
        row = line.split()
        if len(row) != n:
            raise NotationError(f"line {num}: expected {n} entries, got {len(row)}")
        current.append(row)
    if "left" not in blocks:
        raise NotationError("missing 'left' block")
    mats = {}
    for name, rows in blocks.items():
        if not rows or len(rows) > n:
            raise NotationError(f"'{name}' block needs between 1 and {n} rows, got {len(rows)}")
        mats[name] = matrix(rows, field)
    if "right" in mats and mats["right"].shape != mats["left"].shape:
        raise NotationError("'left' and 'right' blocks must have the same number of rows")
    if "right" not in mats and mats["left"].shape[0] != n:
        raise NotationError("the identity default for 'right' needs a square left block")
    return MatrixDocument(field, n, mats["left"], mats.get("right"))


def load_document(path) -> MatrixDocument:
    return parse_document(Path(path).read_text())


def load_representation(path) -> Representation:
    return load_document(path).representation()


def figure_text(name: str) -> str:
    if name not in FIGURES:
        raise KeyError(f"unknown figure {name!r}; choose from {', '.join(FIGURES)}")
    return resources.files("lagmat").joinpath("data", f"{name}.mat").read_text()


def figure(name: str) -> Representation:
    """One of the bundled example representations."""
    return parse_document(figure_text(name)).representation()
