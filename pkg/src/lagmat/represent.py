"""Matrix representations (A, B) with A B^t symmetric.

Columns of the left block are labelled 1..n and those of the right block
1*..n*.  A transversal G is a basis when the n x n minor on its columns is
non-zero.  The fundamental reduction at a basis F brings the pair to the form
(C_F, I) with C_F symmetric; the sign of G relative to F is then the sign of
the principal minor of C_F on the underlying indices of G \\ F.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import DomainError
from .exactlin import Q, ExactMatrix, _bareiss_det, det, integer_scaled, normalize_right_block, rank, sign
from .ground import AdmissibleSet, Transversal, admissible, all_transversals
from .matroid import BasisSystem
from .orient import RelativeSigns, SignTable


@dataclass(frozen=True)
class Representation:
    left: ExactMatrix
    right: ExactMatrix

    def __post_init__(self):
        if self.left.field != self.right.field:
            raise DomainError("left and right blocks must share a field")
        k, n = self.left.shape
        if self.right.shape != (k, n):
            raise DomainError(f"block shapes differ: {self.left.shape} vs {self.right.shape}")
        if not 1 <= k <= n:
            raise DomainError(f"need 1 <= rows <= columns, got {k}x{n}")
        if not (self.left @ self.right.transpose()).is_symmetric():
            raise DomainError("left . right^t is not symmetric")
        if rank(self.left.hstack(self.right)) != k:
            raise DomainError(f"the {k}x{2 * n} matrix (left | right) does not have rank {k}")

    @classmethod
    def symmetric(cls, s: ExactMatrix) -> "Representation":
        """(S, I) for a symmetric S."""
        return cls(s, ExactMatrix.identity(s.shape[0], s.field))

    @property
    def n(self) -> int:
        return self.left.shape[1]

    @property
    def k(self) -> int:
        return self.left.shape[0]

    @property
    def field(self) -> str:
        return self.left.field

    def column(self, x) -> tuple:
        block = self.right if x.starred else self.left
        return block.column(x.underlying - 1)

    def minor(self, a: AdmissibleSet):
        cols = [self.column(x) for x in a.members()]
        return det(self.left.with_columns(cols))

    def _minor_test(self):
        """Predicate 'minor on these columns is non-zero', fraction-free over Q."""
        if self.field != Q:
            return lambda a: self.minor(a) != 0
        # scaling rows by positive constants keeps minors non-zero
        rows = integer_scaled(self.left.hstack(self.right))
        n = self.n

        def test(a):
            idx = [x.underlying - 1 + (n if x.starred else 0) for x in a.members()]
            return _bareiss_det([[r[j] for j in idx] for r in rows]) != 0

        return test


def extract_bases(r: Representation, k: int | None = None) -> BasisSystem:
    """All admissible k-sets whose column minor is non-zero."""
    k = r.k if k is None else k
    if k != r.k:
        raise DomainError(f"a {r.k}-row representation only has {r.k}x{r.k} minors, asked for rank {k}")
    n = r.n
    nonzero = r._minor_test()
    found = []
    for support in itertools.combinations(range(n), k):
        for stars in itertools.product((False, True), repeat=k):
            plus = minus = 0
            for i, s in zip(support, stars):
                if s:
                    minus |= 1 << i
                else:
                    plus |= 1 << i
            a = admissible(n, plus, minus)
            if nonzero(a):
                found.append(a)
    if not found:
        raise DomainError("representation has no non-zero maximal minor")
    return BasisSystem(n, k, frozenset(found))


@dataclass(frozen=True)
class FundamentalReduction:
    fundamental: Transversal
    cf: ExactMatrix
    _scaled: tuple = field(default=(), repr=False, compare=False)

    def principal_minor(self, idx) -> object:
        return det(self.cf.principal(idx))

    def minor_sign(self, idx) -> int:
        if self.cf.field != Q:
            raise DomainError("signs of minors need the rational field")
        if not idx:
            return 1
        rows = [[self._scaled[i][j] for j in idx] for i in idx]
        return sign(_bareiss_det(rows))


def fundamental_reduction(r: Representation, f: Transversal) -> FundamentalReduction:
    """Bring (A, B) to (C_F, I) with every column of F on the right.

    For each unstarred i in F, columns i and i* swap places and the column
    arriving on the left is negated.
    """
    if r.k != r.n:
        raise DomainError("the fundamental reduction needs a Lagrangian representation")
    if f.n != r.n:
        raise DomainError("fundamental basis has the wrong ground size")
    lcols, rcols = [], []
    for i in range(r.n):
        a, b = r.left.column(i), r.right.column(i)
        if f.plus >> i & 1:
            lcols.append(tuple(-x for x in b))
            rcols.append(a)
        else:
            lcols.append(a)
            rcols.append(b)
    new_left = r.left.with_columns(lcols)
    new_right = r.left.with_columns(rcols)
    try:
        cf = normalize_right_block(new_left, new_right)
    except DomainError:
        raise DomainError(f"{f} is not a basis of the representation") from None
    if not cf.is_symmetric():
        raise AssertionError("C_F came out non-symmetric; representation invariants are broken")
    scaled = tuple(map(tuple, integer_scaled(cf))) if cf.field == Q else ()
    return FundamentalReduction(f, cf, scaled)


def _g_prime(fr: FundamentalReduction, g: Transversal) -> list[int]:
    return [i - 1 for i in fr.fundamental.differing(g)]


def sign_of_basis(fr: FundamentalReduction, g: Transversal) -> int:
    """Sign of the principal minor of C_F on G \\ F; 0 when G is not a basis."""
    return fr.minor_sign(_g_prime(fr, g))


def is_basis_by_reduction(fr: FundamentalReduction, g: Transversal) -> bool:
    return fr.principal_minor(_g_prime(fr, g)) != 0


def relative_signs(r: Representation, f: Transversal) -> RelativeSigns:
    fr = fundamental_reduction(r, f)
    signs = {}
    for g in all_transversals(r.n):
        s = sign_of_basis(fr, g)
        if s:
            signs[g] = s
    return RelativeSigns(f, signs)


def representation_sign_table(r: Representation) -> SignTable:
    """s(F, G) read off C_F at every basis F independently (no extension formula)."""
    m = extract_bases(r)
    values = {}
    for f in m.sorted_bases():
        row = relative_signs(r, f)
        for g, s in row.signs.items():
            values[f, g] = s
    return SignTable(r.n, values)
