"""Exact linear algebra over Q (``fractions.Fraction``) and GF(2).

Nothing here ever rounds.  Integer matrices over Q take a fraction-free
(Bareiss) path for determinants; everything else uses Gaussian elimination
with field division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DomainError, NotationError

Q = "Q"
GF2 = "GF2"
FIELDS = (Q, GF2)


class Bit:
    """An element of GF(2)."""

    __slots__ = ("v",)

    def __init__(self, v=0):
        if isinstance(v, Bit):
            v = v.v
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ValueError(f"{v} is not a GF(2) element")
            v = v.numerator
        object.__setattr__(self, "v", int(v) & 1)

    def __setattr__(self, name, value):
        raise AttributeError("Bit is immutable")

    def _coerce(self, other):
        return other if isinstance(other, Bit) else Bit(other)

    def __add__(self, other):
        return Bit(self.v ^ self._coerce(other).v)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        return Bit(self.v & self._coerce(other).v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not self._coerce(other).v:
            raise ZeroDivisionError("division by zero in GF(2)")
        return self

    def __neg__(self):
        return self

    def __bool__(self):
        return bool(self.v)

    def __eq__(self, other):
        if isinstance(other, Bit):
            return self.v == other.v
        if isinstance(other, (int, Fraction)):
            return self.v == (int(other) & 1) if other == int(other) else False
        return NotImplemented

    def __hash__(self):
        return hash(("GF2", self.v))

    def __repr__(self):
        return f"Bit({self.v})"

    def __str__(self):
        return str(self.v)


def scalar(value, field: str = Q):
    """Coerce an int, Fraction or token string ("p/q", "3", "-1") to a field element."""
    if field == Q and type(value) is Fraction:
        return value
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}")
    if isinstance(value, str):
        tok = value.strip()
        try:
            value = Fraction(tok)
        except (ValueError, ZeroDivisionError):
            raise NotationError(f"bad exact token {tok!r}") from None
        if "." in tok or "e" in tok.lower():
            raise NotationError(f"decimal token {tok!r}: use an integer or p/q")
        if field == GF2 and tok not in ("0", "1"):
            raise NotationError(f"GF(2) entries must be 0 or 1, got {tok!r}")
    if field == GF2:
        return Bit(value)
    if isinstance(value, Bit):
        return Fraction(value.v)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass int, Fraction or a token string")
    return Fraction(value)


class ExactMatrix:
    """Immutable dense matrix over Q or GF(2)."""

    __slots__ = ("rows", "field", "shape")

    def __init__(self, rows: Iterable[Iterable], field: str = Q, ncols: int | None = None):
        data = tuple(tuple(scalar(x, field) for x in row) for row in rows)
        widths = {len(r) for r in data}
        if len(widths) > 1:
            raise ValueError("ragged matrix rows")
        width = widths.pop() if widths else (ncols or 0)
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "shape", (len(data), width))

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, n: int, field: str = Q) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], field, ncols=n)

    @classmethod
    def zeros(cls, r: int, c: int, field: str = Q) -> "ExactMatrix":
        return cls([[0] * c for _ in range(r)], field, ncols=c)

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self.rows), self.field, ncols=self.shape[0]) if self.rows else ExactMatrix([], self.field)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape[1] != other.shape[0] or self.field != other.field:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else [() for _ in range(other.shape[1])]
        zero = scalar(0, self.field)
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return ExactMatrix(out, self.field, ncols=other.shape[1])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for j in cols] for i in rows], self.field, ncols=len(cols))

    def principal(self, idx: Sequence[int]) -> "ExactMatrix":
        return self.submatrix(idx, idx)

    def permuted(self, perm: Sequence[int]) -> "ExactMatrix":
        """Rows and columns simultaneously reordered: entry (a, b) is old (perm[a], perm[b])."""
        return self.principal(perm)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape[0] != other.shape[0] or self.field != other.field:
            raise ValueError("hstack needs equal row counts and fields")
        return ExactMatrix([a + b for a, b in zip(self.rows, other.rows)], self.field,
                           ncols=self.shape[1] + other.shape[1])

    def with_columns(self, cols: Sequence[Sequence]) -> "ExactMatrix":
        """Build a matrix from column vectors (same field)."""
        return ExactMatrix(zip(*cols), self.field, ncols=len(cols)) if cols and cols[0] else ExactMatrix([], self.field)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.shape[0]) for j in range(i)
        )

    def is_integral(self) -> bool:
        return self.field == Q and all(x.denominator == 1 for r in self.rows for x in r)

    def tolist(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __repr__(self):
        return f"ExactMatrix({self.tolist()}, field={self.field!r})"


def matrix(rows, field: str = Q) -> ExactMatrix:
    return ExactMatrix(rows, field)


# -- elimination --------------------------------------------------------------

def _bareiss_det(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _echelon(rows: list[list], zero) -> tuple[list[list], list[int], int]:
    """Row echelon form. Returns (rows, pivot columns, swap parity sign)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    sign = 1
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != zero), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            sign = -sign
        piv = m[r][c]
        for i in range(r + 1, nrows):
            if m[i][c] != zero:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots, sign


def det(m: ExactMatrix):
    """Exact determinant; the 0x0 determinant is 1."""
    if not m.is_square:
        raise ValueError(f"determinant of non-square {m.shape} matrix")
    n = m.shape[0]
    one = scalar(1, m.field)
    if n == 0:
        return one
    if m.is_integral():
        return Fraction(_bareiss_det([[x.numerator for x in r] for r in m.rows]))
    zero = scalar(0, m.field)
    ech, pivots, sign = _echelon(list(m.rows), zero)
    if len(pivots) < n:
        return zero
    out = one if sign == 1 else -one
    for i in range(n):
        out = out * ech[i][i]
    return out


def rank(m: ExactMatrix) -> int:
    if not m.rows:
        return 0
    return len(_echelon(list(m.rows), scalar(0, m.field))[1])


def integer_scaled(m: ExactMatrix) -> list[list[int]]:
    """The matrix times the lcm of its denominators (a positive scalar)."""
    d = 1
    for r in m.rows:
        for x in r:
            d = lcm(d, x.denominator)
    return [[int(x * d) for x in r] for r in m.rows]


def sign(x) -> int:
    if isinstance(x, Bit):
        raise DomainError("signs do not exist in GF(2)")
    return (x > 0) - (x < 0)


def solve(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """X with A X = B for invertible square A (Gauss-Jordan)."""
    n = a.shape[0]
    if not a.is_square or b.shape[0] != n or a.field != b.field:
        raise ValueError("solve needs square A and B with matching rows and field")
    zero = scalar(0, a.field)
    aug = [list(ra) + list(rb) for ra, rb in zip(a.rows, b.rows)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != zero), None)
        if p is None:
            raise DomainError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != zero:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return ExactMatrix([r[n:] for r in aug], a.field, ncols=b.shape[1])


def normalize_right_block(left: ExactMatrix, right: ExactMatrix) -> ExactMatrix:
    """R^{-1} L: the left block after row operations turn the right block into I."""
    if not (left.is_square and right.is_square and left.shape == right.shape):
        raise ValueError("blocks must be square of equal size")
    return solve(right, left)


# -- quadratic forms ----------------------------------------------------------

@dataclass(frozen=True)
class InertiaProfile:
    rank: int
    positives: int
    negatives: int

    def __post_init__(self):
        if self.positives + self.negatives != self.rank:
            raise ValueError("positives + negatives must equal rank")

    @property
    def signature(self) -> int:
        return self.positives - self.negatives

    @property
    def index(self) -> int:
        return self.negatives


def _require_rational_symmetric(s: ExactMatrix) -> None:
    if s.field != Q:
        raise DomainError("inertia is only defined over Q (no signs in GF(2))")
    if not s.is_symmetric():
        raise DomainError("quadratic form needs a symmetric matrix")


def congruence_diagonalize(s: ExactMatrix) -> InertiaProfile:
    """Inertia by symmetric row/column elimination to a congruent diagonal matrix.

    When no usable diagonal pivot remains but an off-diagonal entry a_ij is
    non-zero, row/column j is added to row/column i first, which makes the
    new diagonal entry a_ii + 2 a_ij + a_jj = 2 a_ij non-zero.
    """
    _require_rational_symmetric(s)
    a = [list(r) for r in s.rows]
    n = len(a)
    diag = []
    active = list(range(n))
    while active:
        p = next((i for i in active if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            p = i
        piv = a[p][p]
        for i in active:
            if i != p and a[i][p] != 0:
                f = a[i][p] / piv
                for k in range(n):
                    a[i][k] -= f * a[p][k]
                for k in range(n):
                    a[k][i] -= f * a[k][p]
        diag.append(piv)
        active.remove(p)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return InertiaProfile(pos + neg, pos, neg)


def leading_minors(s: ExactMatrix, upto: int | None = None) -> list:
    """P_0 = 1, P_1, ..., P_upto of the leading principal blocks."""
    upto = s.shape[0] if upto is None else upto
    return [det(s.principal(range(i))) for i in range(upto + 1)]


def regular_arrangement(s: ExactMatrix) -> tuple[int, ...]:
    """A 0-based permutation making ``s.permuted(perm)`` regularly arranged.

    Regular means: P_i and P_{i-1} are not both zero for 1 <= i < r, and
    P_r != 0, where r is the exact rank.  Depth-first search, smallest index
    first, with backtracking; unused indices are appended in increasing order.
    """
    _require_rational_symmetric(s)
    n = s.shape[0]
    r = rank(s)
    memo = {}

    def minor(prefix):
        key = tuple(sorted(prefix))
        if key not in memo:
            memo[key] = det(s.principal(prefix))
        return memo[key]

    def search(prefix, prev_zero):
        i = len(prefix)
        if i == r:
            return prefix
        for c in range(n):
            if c in prefix:
                continue
            nxt = prefix + [c]
            p = minor(nxt)
            if i + 1 == r and p == 0:
                continue
            if i + 1 < r and p == 0 and prev_zero:
                continue
            found = search(nxt, p == 0)
            if found is not None:
                return found
        return None

    head = search([], False)
    if head is None:
        raise RuntimeError("no regular arrangement found; one always exists for a symmetric matrix")
    return tuple(head + [c for c in range(n) if c not in head])


def sign_changes(values: Iterable) -> int:
    """Adjacent sign alternations after deleting zero terms."""
    signs = [sign(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def kronecker_index(s: ExactMatrix) -> InertiaProfile:
    """Inertia from sign changes of leading minors of a regular arrangement."""
    _require_rational_symmetric(s)
    r = rank(s)
    arranged = s.permuted(regular_arrangement(s))
    neg = sign_changes(leading_minors(arranged, r))
    return InertiaProfile(r, r - neg, neg)
