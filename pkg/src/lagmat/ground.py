"""Ground set J = {1..n, 1*..n*}: the involution, admissible sets, and orderings.

Admissible sets are stored as a pair of bitmasks: bit ``i-1`` of ``plus`` is set
when ``i`` is a member and bit ``i-1`` of ``minus`` when ``i*`` is.  A transversal
(admissible n-set) is a vertex of the cube [-1, 1]^n.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GuardExceeded, NotationError

MAX_ORDERING_N = 8


@dataclass(frozen=True, order=True)
class GroundIndex:
    underlying: int
    starred: bool = False

    def __post_init__(self):
        if self.underlying < 1:
            raise ValueError(f"ground index must be >= 1, got {self.underlying}")

    def __str__(self):
        return f"{self.underlying}*" if self.starred else str(self.underlying)


def star(x: GroundIndex) -> GroundIndex:
    return GroundIndex(x.underlying, not x.starred)


def is_admissible(s: Iterable[GroundIndex]) -> bool:
    s = set(s)
    return not any(star(x) in s for x in s)


def popcount(x: int) -> int:
    return bin(x).count("1")


class AdmissibleSet:
    """An admissible subset of J for ground size ``n``.

    Equality and hashing only look at ``(n, plus, minus)``, so a full
    admissible set compares equal to the corresponding :class:`Transversal`.
    Use :func:`admissible` to get the most specific type.
    """

    __slots__ = ("n", "plus", "minus")

    def __init__(self, n: int, plus: int, minus: int):
        full = (1 << n) - 1
        if n < 1:
            raise ValueError("ground size must be positive")
        if plus & ~full or minus & ~full:
            raise ValueError(f"index out of range for n={n}")
        if plus & minus:
            raise ValueError("not admissible: contains both i and i*")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

    def __setattr__(self, name, value):
        raise AttributeError("admissible sets are immutable")

    @classmethod
    def from_members(cls, n: int, members: Iterable[GroundIndex]) -> "AdmissibleSet":
        plus = minus = 0
        for x in members:
            if x.underlying > n:
                raise ValueError(f"index {x} out of range for n={n}")
            if x.starred:
                minus |= 1 << (x.underlying - 1)
            else:
                plus |= 1 << (x.underlying - 1)
        return admissible(n, plus, minus)

    def members(self) -> list[GroundIndex]:
        out = []
        for i in range(1, self.n + 1):
            bit = 1 << (i - 1)
            if self.plus & bit:
                out.append(GroundIndex(i))
            elif self.minus & bit:
                out.append(GroundIndex(i, True))
        return out

    def __len__(self):
        return popcount(self.plus) + popcount(self.minus)

    def __contains__(self, x: GroundIndex):
        if x.underlying > self.n:
            return False
        mask = self.minus if x.starred else self.plus
        return bool(mask >> (x.underlying - 1) & 1)

    def __iter__(self) -> Iterator[GroundIndex]:
        return iter(self.members())

    def __eq__(self, other):
        if not isinstance(other, AdmissibleSet):
            return NotImplemented
        return (self.n, self.plus, self.minus) == (other.n, other.plus, other.minus)

    def __hash__(self):
        return hash((self.n, self.plus, self.minus))

    def __lt__(self, other: "AdmissibleSet"):
        return self.label < other.label

    @property
    def label(self) -> str:
        return format_set(self)

    @property
    def star_count(self) -> int:
        return popcount(self.minus)

    @property
    def is_transversal(self) -> bool:
        return (self.plus | self.minus) == (1 << self.n) - 1

    def __str__(self):
        return self.label

    def __repr__(self):
        return f"{type(self).__name__}({self.label!r}, n={self.n})"


class Transversal(AdmissibleSet):
    """Admissible n-set: exactly one of i, i* for every i."""

    __slots__ = ()

    def __init__(self, n: int, plus: int, minus: int | None = None):
        full = (1 << n) - 1
        if minus is None:
            minus = full & ~plus
        super().__init__(n, plus, minus)
        if (plus | minus) != full:
            raise ValueError("a transversal must contain i or i* for every i")

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "Transversal":
        plus = 0
        for pos, s in enumerate(signs):
            if s not in (1, -1):
                raise ValueError(f"sign vector entries must be +1 or -1, got {s}")
            if s == 1:
                plus |= 1 << pos
        return cls(len(signs), plus)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if self.plus >> i & 1 else -1 for i in range(self.n))

    def flip(self, *indices: int) -> "Transversal":
        """Symmetric difference with {i, i*} for each given underlying index."""
        mask = 0
        for i in indices:
            mask ^= 1 << (i - 1)
        return Transversal(self.n, self.plus ^ mask)

    def differing(self, other: "Transversal") -> list[int]:
        """Underlying indices where the two transversals disagree."""
        diff = self.plus ^ other.plus
        return [i + 1 for i in range(self.n) if diff >> i & 1]


def admissible(n: int, plus: int, minus: int) -> AdmissibleSet:
    if (plus | minus) == (1 << n) - 1:
        return Transversal(n, plus, minus)
    return AdmissibleSet(n, plus, minus)


def all_transversals(n: int) -> list[Transversal]:
    """Every vertex of the n-cube, indexed by the ``plus`` mask."""
    return [Transversal(n, plus) for plus in range(1 << n)]


def overlap(a: AdmissibleSet, b: AdmissibleSet) -> int:
    """|a ∩ b|."""
    return popcount(a.plus & b.plus) + popcount(a.minus & b.minus)


def outside_both(g: AdmissibleSet, f: AdmissibleSet, a: AdmissibleSet) -> int:
    """|g \\ (f ∪ a)|."""
    return popcount(g.plus & ~f.plus & ~a.plus) + popcount(g.minus & ~f.minus & ~a.minus)


# -- notation ---------------------------------------------------------------

_COMPACT_TOKEN = re.compile(r"(\d)(\*?)")
_COMMA_TOKEN = re.compile(r"\s*(\d+)\s*(\*?)\s*$")


def _tokens(text: str, n: int) -> list[GroundIndex]:
    text = text.strip()
    if "," in text or n > 9:
        parts = text.split(",") if text else []
        out = []
        for part in parts:
            m = _COMMA_TOKEN.match(part)
            if not m or int(m.group(1)) == 0:
                raise NotationError(f"bad token {part!r} in {text!r}")
            out.append(GroundIndex(int(m.group(1)), bool(m.group(2))))
        return out
    out = []
    pos = 0
    while pos < len(text):
        m = _COMPACT_TOKEN.match(text, pos)
        if not m:
            raise NotationError(f"bad character {text[pos]!r} in {text!r}")
        if m.group(1) == "0":
            raise NotationError(f"index 0 out of range in {text!r}")
        out.append(GroundIndex(int(m.group(1)), bool(m.group(2))))
        pos = m.end()
    return out


def parse_admissible(text: str, n: int) -> AdmissibleSet:
    toks = _tokens(text, n)
    seen = set()
    for x in toks:
        if x.underlying > n:
            raise NotationError(f"index {x.underlying} out of range 1..{n} in {text!r}")
        if x.underlying in seen:
            raise NotationError(f"index {x.underlying} repeated in {text!r}")
        seen.add(x.underlying)
    return AdmissibleSet.from_members(n, toks)


def parse_transversal(text: str, n: int) -> Transversal:
    a = parse_admissible(text, n)
    if not a.is_transversal:
        missing = [i for i in range(1, n + 1) if not (a.plus | a.minus) >> (i - 1) & 1]
        raise NotationError(f"{text!r} is not a transversal: index {missing[0]} unassigned")
    return a


def format_set(a: AdmissibleSet) -> str:
    toks = [str(x) for x in a.members()]
    return ",".join(toks) if a.n > 9 else "".join(toks)


# -- hyperoctahedral group --------------------------------------------------

class Gale(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class AdmissibleOrdering:
    """A signed permutation w of J, acting as i -> perm[i-1] (starred if flips[i-1]).

    The induced order is x <=^w y iff w^{-1} x <= w^{-1} y in the base order
    n* < ... < 1* < 1 < ... < n.
    """

    perm: tuple[int, ...]
    flips: tuple[bool, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)) or len(self.flips) != n:
            raise ValueError(f"not a signed permutation: {self.perm}, {self.flips}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "AdmissibleOrdering":
        return cls(tuple(range(1, n + 1)), (False,) * n)

    def __call__(self, x: GroundIndex) -> GroundIndex:
        i = x.underlying
        return GroundIndex(self.perm[i - 1], x.starred != self.flips[i - 1])

    def inverse(self, x: GroundIndex) -> GroundIndex:
        i = self.perm.index(x.underlying) + 1
        return GroundIndex(i, x.starred != self.flips[i - 1])

    def position(self, x: GroundIndex) -> int:
        """0-based rank of x in the induced order on J."""
        y = self.inverse(x)
        return self.n - y.underlying if y.starred else self.n + y.underlying - 1

    def apply(self, a: AdmissibleSet) -> AdmissibleSet:
        return AdmissibleSet.from_members(a.n, (self(x) for x in a.members()))

    def key(self, a: AdmissibleSet) -> tuple[int, ...]:
        """Member positions sorted ascending under the induced order."""
        return tuple(sorted(self.position(x) for x in a.members()))

    def __str__(self):
        return " ".join(f"{i}->{GroundIndex(p, f)}" for i, (p, f) in enumerate(zip(self.perm, self.flips), 1))


def enumerate_orderings(n: int) -> Iterator[AdmissibleOrdering]:
    """All 2^n n! admissible orderings, lexicographic in (perm, flips)."""
    if not 1 <= n <= MAX_ORDERING_N:
        raise GuardExceeded(f"ordering enumeration needs 1 <= n <= {MAX_ORDERING_N}, got {n}")
    for perm in itertools.permutations(range(1, n + 1)):
        for flips in itertools.product((False, True), repeat=n):
            yield AdmissibleOrdering(perm, flips)


def compare_sets(w: AdmissibleOrdering, a: AdmissibleSet, b: AdmissibleSet) -> Gale:
    if len(a) != len(b) or a.n != b.n:
        raise ValueError("Gale comparison needs sets of equal size over the same ground set")
    ka, kb = w.key(a), w.key(b)
    if ka == kb:
        return Gale.EQUAL
    if all(x <= y for x, y in zip(ka, kb)):
        return Gale.LESS
    if all(x >= y for x, y in zip(ka, kb)):
        return Gale.GREATER
    return Gale.INCOMPARABLE
