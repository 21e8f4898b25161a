"""Basis systems, the Maximality Property, height and evenness."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, GuardExceeded
from .ground import (
    AdmissibleOrdering,
    AdmissibleSet,
    all_transversals,
    enumerate_orderings,
    overlap,
    parse_admissible,
)

MAX_CENSUS_N = 4


@dataclass(frozen=True)
class BasisSystem:
    n: int
    k: int
    bases: frozenset

    def __post_init__(self):
        if not self.bases:
            raise DomainError("a basis system needs at least one basis")
        for b in self.bases:
            if not isinstance(b, AdmissibleSet) or b.n != self.n or len(b) != self.k:
                raise DomainError(f"{b!r} is not an admissible {self.k}-set for n={self.n}")

    @classmethod
    def of(cls, bases: Iterable[AdmissibleSet]) -> "BasisSystem":
        bases = frozenset(bases)
        if not bases:
            raise DomainError("a basis system needs at least one basis")
        first = next(iter(bases))
        return cls(first.n, len(first), bases)

    @classmethod
    def from_labels(cls, labels: Iterable[str], n: int) -> "BasisSystem":
        return cls.of(parse_admissible(t, n) for t in labels)

    @property
    def is_lagrangian(self) -> bool:
        return self.k == self.n

    def sorted_bases(self) -> list:
        return sorted(self.bases, key=lambda b: b.label)

    @property
    def labels(self) -> list[str]:
        return [b.label for b in self.sorted_bases()]

    def __contains__(self, a):
        return a in self.bases

    def __len__(self):
        return len(self.bases)

    def __iter__(self):
        return iter(self.sorted_bases())

    def relabel(self, w: AdmissibleOrdering) -> "BasisSystem":
        return BasisSystem(self.n, self.k, frozenset(w.apply(b) for b in self.bases))

    def __str__(self):
        return "{" + ", ".join(self.labels) + "}"


def require_lagrangian(m: BasisSystem) -> None:
    if not m.is_lagrangian:
        raise DomainError(f"operation needs a Lagrangian system (rank {m.n}), got rank {m.k}")


@dataclass(frozen=True)
class MaximalityReport:
    holds: bool
    witness: AdmissibleOrdering | None = None


def maximal_basis(m: BasisSystem, w: AdmissibleOrdering) -> AdmissibleSet | None:
    """The basis dominating every other under <=^w, or None if there is none."""
    keyed = {w.key(b): b for b in m.bases}
    top = tuple(max(col) for col in zip(*keyed))
    return keyed.get(top)


def check_maximality(m: BasisSystem) -> MaximalityReport:
    # a dominating key equals the componentwise maximum of all keys, so one
    # lookup per ordering decides existence; sorted keys determine the set,
    # hence the maximum is unique when it exists.
    for w in enumerate_orderings(m.n):
        if maximal_basis(m, w) is None:
            return MaximalityReport(False, w)
    return MaximalityReport(True, None)


def height(a: AdmissibleSet, f: AdmissibleSet) -> int:
    """n - |A ∩ F|."""
    if a.n != f.n:
        raise ValueError("height needs sets over the same ground set")
    return a.n - overlap(a, f)


def is_even(m: BasisSystem) -> bool:
    require_lagrangian(m)
    return len({b.star_count % 2 for b in m.bases}) == 1


@lru_cache(maxsize=None)
def _gale_tables(n: int):
    """Per ordering: transversal indices by decreasing key sum, and dominance masks.

    dom[t] has bit u set when transversal u lies below transversal t.  Key sums
    give a linear extension of the Gale order, so the candidate maximum of a
    collection is its member with the largest key sum.
    """
    verts = all_transversals(n)
    tables = []
    for w in enumerate_orderings(n):
        keys = [w.key(v) for v in verts]
        order = sorted(range(len(verts)), key=lambda t: -sum(keys[t]))
        dom = []
        for t in range(len(verts)):
            mask = 0
            for u in range(len(verts)):
                if all(x <= y for x, y in zip(keys[u], keys[t])):
                    mask |= 1 << u
            dom.append(mask)
        tables.append((order, dom))
    return tables


def _collection_is_lagrangian(mask: int, tables) -> bool:
    for order, dom in tables:
        for t in order:
            if mask >> t & 1:
                if mask & ~dom[t]:
                    return False
                break
    return True


def enumerate_lagrangian_matroids(n: int) -> Iterator[BasisSystem]:
    """All non-empty collections of transversals with the Maximality Property.

    Collections are bitmasks over :func:`all_transversals` order and come out
    in increasing mask order.
    """
    if not 1 <= n <= MAX_CENSUS_N:
        raise GuardExceeded(f"census needs 1 <= n <= {MAX_CENSUS_N}, got {n}")
    verts = all_transversals(n)
    tables = _gale_tables(n)
    for mask in range(1, 1 << len(verts)):
        if _collection_is_lagrangian(mask, tables):
            yield BasisSystem(n, n, frozenset(v for t, v in enumerate(verts) if mask >> t & 1))


def collection_mask(m: BasisSystem) -> int:
    return sum(1 << b.plus for b in m.bases)
