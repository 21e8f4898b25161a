"""Height-increasing paths and the index of an oriented Lagrangian matroid."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, GuardExceeded
from .exactlin import congruence_diagonalize, kronecker_index, rank
from .ground import Transversal
from .matroid import BasisSystem, height
from .orient import SignTable, is_orientation
from .polytope import OrientedSkeleton, PolytopeSkeleton, compute_edges, is_inducing
from .represent import Representation, extract_bases, fundamental_reduction, sign_of_basis

MAX_PATHS = 100_000


@dataclass(frozen=True)
class IncreasingPath:
    vertices: tuple
    fundamental: Transversal

    def __post_init__(self):
        hs = [height(v, self.fundamental) for v in self.vertices]
        if not self.vertices or self.vertices[0] != self.fundamental:
            raise ValueError("path must start at the fundamental basis")
        if any(a >= b for a, b in zip(hs, hs[1:])):
            raise ValueError("height must strictly increase along the path")

    @property
    def labels(self) -> list[str]:
        return [v.label for v in self.vertices]

    def edges(self):
        return list(zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class IndexReport:
    index: int
    max_height: int
    path_used: IncreasingPath

    def to_dict(self) -> dict:
        return {
            "fundamental": self.path_used.fundamental.label,
            "index": self.index,
            "max_height": self.max_height,
            "path": self.path_used.labels,
        }


def _skeleton(m: BasisSystem, skeleton: PolytopeSkeleton | None) -> PolytopeSkeleton:
    return skeleton if skeleton is not None else compute_edges(m)


def max_height(m: BasisSystem, f: Transversal) -> int:
    return max(height(b, f) for b in m.bases)


def find_increasing_path(m: BasisSystem, f: Transversal, skeleton: PolytopeSkeleton | None = None) -> IncreasingPath:
    """Greedy ascent: step to the lowest strictly higher neighbour, ties broken by label."""
    if f not in m:
        raise DomainError(f"{f} is not a basis")
    sk = _skeleton(m, skeleton)
    top = max_height(m, f)
    path = [f]
    while height(path[-1], f) < top:
        here = height(path[-1], f)
        up = [v for v in sk.neighbors(path[-1]) if height(v, f) > here]
        if not up:
            raise RuntimeError(f"stuck at {path[-1]} below maximal height {top}: no increasing edge")
        path.append(min(up, key=lambda v: (height(v, f), v.label)))
    return IncreasingPath(tuple(path), f)


def all_increasing_paths(m: BasisSystem, f: Transversal, skeleton: PolytopeSkeleton | None = None,
                         limit: int = MAX_PATHS) -> list[IncreasingPath]:
    """Every height-increasing path from f to a basis of maximal height."""
    if f not in m:
        raise DomainError(f"{f} is not a basis")
    sk = _skeleton(m, skeleton)
    top = max_height(m, f)
    nbrs = {v: [u for u in sk.neighbors(v) if height(u, f) > height(v, f)] for v in sk.vertices}
    out = []

    def walk(path):
        if height(path[-1], f) == top:
            if len(out) >= limit:
                raise GuardExceeded(f"more than {limit} increasing paths")
            out.append(IncreasingPath(tuple(path), f))
            return
        for u in nbrs[path[-1]]:
            walk(path + [u])

    walk([f])
    return out


def _changes(signs) -> int:
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def index_relative(m: BasisSystem, st: SignTable, f: Transversal, skeleton: PolytopeSkeleton | None = None,
                   check: bool = True) -> IndexReport:
    if check and not is_orientation(m, st):
        raise DomainError("sign table is not an orientation of this matroid")
    path = find_increasing_path(m, f, skeleton)
    return IndexReport(_changes([st(f, v) for v in path.vertices]), max_height(m, f), path)


def path_sign_changes(m: BasisSystem, st: SignTable, f: Transversal,
                      skeleton: PolytopeSkeleton | None = None) -> set[int]:
    return {_changes([st(f, v) for v in p.vertices]) for p in all_increasing_paths(m, f, skeleton)}


def verify_index_well_defined(m: BasisSystem, st: SignTable, f: Transversal,
                              skeleton: PolytopeSkeleton | None = None) -> bool:
    return len(path_sign_changes(m, st, f, skeleton)) == 1


def count_inducing_edges(os: OrientedSkeleton, f: Transversal) -> int:
    m = BasisSystem.of(os.base.vertices)
    path = find_increasing_path(m, f, os.base)
    return sum(1 for a, b in path.edges() if is_inducing(os, os.base.edge(a, b), f))


def crosscheck_quadratic(r: Representation, f: Transversal, skeleton: PolytopeSkeleton | None = None,
                         m: BasisSystem | None = None) -> dict:
    """Matroid index vs. the quadratic form of C_F (two independent routes)."""
    m = m if m is not None else extract_bases(r)
    if f not in m:
        raise DomainError(f"{f} is not a basis")
    fr = fundamental_reduction(r, f)
    cf = fr.cf
    path = find_increasing_path(m, f, _skeleton(m, skeleton))
    matroid_index = _changes([sign_of_basis(fr, v) for v in path.vertices])
    kron = kronecker_index(cf)
    oracle = congruence_diagonalize(cf)
    top = max_height(m, f)
    r_cf = rank(cf)
    return {
        "fundamental": f.label,
        "matroid_index": matroid_index,
        "kronecker_index": kron.index,
        "oracle_index": oracle.index,
        "signature": oracle.signature,
        "max_height": top,
        "rank": r_cf,
        "path": path.labels,
        "agree": matroid_index == kron.index == oracle.index and r_cf == top,
    }
