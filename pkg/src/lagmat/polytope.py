"""Matroid polytopes inside the cube [-1, 1]^n: edges, 2-faces and orientations.

Edges come from the adjacency criterion: a short exchange is always an edge,
a long exchange A = B Δ {i, i*, j, j*} is one unless both B Δ {i, i*} and
B Δ {j, j*} are bases.

Every edge of a Lagrangian matroid polytope is parallel to a root of type
BC_n (e_i or e_i ± e_j), so its normal fan is coarsened by the fan of the
reflection arrangement x_i = 0, x_i = ±x_j.  Every face is therefore the set
of maximisers of a functional taken from the relative interior of some cone
of that arrangement, and one integer representative per cone finds them all.
No convex hulls are computed.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DomainError, GuardExceeded
from .exactlin import ExactMatrix, rank
from .ground import Transversal
from .matroid import BasisSystem, check_maximality, height, require_lagrangian
from .orient import RelativeSigns, SignTable, is_orientation

SHORT = "short"
LONG = "long"
FACE_KINDS = ("sSquare", "lSquare", "nsRect", "iTri", "eqTri")
MAX_FACE_N = 6


@dataclass(frozen=True)
class Edge:
    a: Transversal
    b: Transversal
    kind: str

    @classmethod
    def between(cls, a: Transversal, b: Transversal) -> "Edge":
        d = len(a.differing(b))
        if d not in (1, 2):
            raise ValueError(f"{a} and {b} are not joined by a short or long exchange")
        a, b = sorted((a, b), key=lambda t: t.label)
        return cls(a, b, SHORT if d == 1 else LONG)

    def other(self, v: Transversal) -> Transversal:
        return self.b if v == self.a else self.a

    def length_squared(self) -> int:
        return sum((x - y) ** 2 for x, y in zip(embed_vertex(self.a), embed_vertex(self.b)))

    def __str__(self):
        return f"{self.a}-{self.b} ({self.kind})"


@dataclass(frozen=True)
class Face:
    kind: str
    members: tuple          # boundary cycle
    coords: tuple[int, ...]  # coordinates that vary across the face
    fixed: tuple = ()        # (coordinate, sign) for the others

    @property
    def labels(self) -> list[str]:
        return [v.label for v in self.members]

    def boundary(self):
        m = self.members
        return [(m[t], m[(t + 1) % len(m)]) for t in range(len(m))]


@dataclass(frozen=True)
class PolytopeSkeleton:
    n: int
    vertices: tuple
    edges: tuple
    faces: tuple = ()

    def edge(self, a, b) -> Edge | None:
        return self._index().get(frozenset((a, b)))

    def _index(self):
        idx = self.__dict__.get("_edge_index")
        if idx is None:
            idx = {frozenset((e.a, e.b)): e for e in self.edges}
            object.__setattr__(self, "_edge_index", idx)
        return idx

    def neighbors(self, v) -> list:
        return sorted((e.other(v) for e in self.edges if v in (e.a, e.b)), key=lambda t: t.label)


@dataclass(frozen=True)
class OrientedSkeleton:
    base: PolytopeSkeleton
    direction: dict = field(hash=False)  # short Edge -> (tail, head)


def embed_vertex(a: Transversal) -> tuple[int, ...]:
    return a.signs


def _long_is_edge(bases, a: Transversal, b: Transversal) -> bool:
    i, j = a.differing(b)
    return not (a.flip(i) in bases and a.flip(j) in bases)


def compute_edges(m: BasisSystem, check: bool = True) -> PolytopeSkeleton:
    require_lagrangian(m)
    if check and not check_maximality(m).holds:
        raise DomainError("collection fails the Maximality Property; it is not a Lagrangian matroid")
    verts = m.sorted_bases()
    edges = []
    for a, b in itertools.combinations(verts, 2):
        d = len(a.differing(b))
        if d == 1 or (d == 2 and _long_is_edge(m.bases, a, b)):
            edges.append(Edge.between(a, b))
    return PolytopeSkeleton(m.n, tuple(verts), tuple(edges))


@lru_cache(maxsize=None)
def fan_representatives(n: int) -> np.ndarray:
    """One integer functional per cone of the BC_n reflection arrangement."""
    if n > MAX_FACE_N:
        raise GuardExceeded(f"face scan limited to n <= {MAX_FACE_N}")
    reps = []
    for levels in itertools.product(range(n + 1), repeat=n):
        used = {x for x in levels if x}
        if used != set(range(1, len(used) + 1)):
            continue
        nz = [p for p, x in enumerate(levels) if x]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            c = list(levels)
            for p, s in zip(nz, signs):
                c[p] *= s
            reps.append(c)
    return np.array(reps, dtype=np.int64)


def affine_dimension(points) -> int:
    pts = [embed_vertex(p) for p in points]
    if len(pts) < 2:
        return 0
    return rank(ExactMatrix([[x - y for x, y in zip(p, pts[0])] for p in pts[1:]]))


def fan_faces(m: BasisSystem) -> dict[int, list[frozenset]]:
    """All faces of the polytope grouped by dimension (maximiser sets of fan functionals)."""
    verts = m.sorted_bases()
    pts = np.array([embed_vertex(v) for v in verts], dtype=np.int64).T
    vals = fan_representatives(m.n) @ pts
    top = vals.max(axis=1, keepdims=True)
    hits = {tuple(row) for row in (vals == top)}
    out: dict[int, list[frozenset]] = {}
    for row in hits:
        face = frozenset(v for v, h in zip(verts, row) if h)
        out.setdefault(affine_dimension(sorted(face, key=lambda t: t.label)), []).append(face)
    for d in out:
        out[d].sort(key=lambda f: sorted(v.label for v in f))
    return out


def _cycle(members, edges) -> list | None:
    adj = {v: [] for v in members}
    for e in edges:
        adj[e.a].append(e.b)
        adj[e.b].append(e.a)
    if any(len(x) != 2 for x in adj.values()):
        return None
    start = min(members, key=lambda t: t.label)
    order = [start]
    nxt = min(adj[start], key=lambda t: t.label)
    while nxt != start:
        prev = order[-1]
        order.append(nxt)
        nxt = adj[nxt][0] if adj[nxt][0] != prev else adj[nxt][1]
    return order if len(order) == len(members) else None


def classify_face(members, skeleton: PolytopeSkeleton) -> Face:
    members = sorted(members, key=lambda t: t.label)
    edges = [skeleton.edge(a, b) for a, b in itertools.combinations(members, 2)]
    edges = [e for e in edges if e is not None]
    kinds = sorted(e.kind for e in edges)
    cycle = _cycle(members, edges)
    kind = "unclassified"
    if cycle is not None:
        if len(members) == 3:
            kind = {(LONG, SHORT, SHORT): "iTri", (LONG, LONG, LONG): "eqTri"}.get(tuple(kinds), kind)
        elif len(members) == 4:
            kind = {
                (SHORT,) * 4: "sSquare",
                (LONG,) * 4: "lSquare",
                (LONG, LONG, SHORT, SHORT): "nsRect",
            }.get(tuple(kinds), kind)
    else:
        cycle = members
    n = skeleton.n
    signs = [embed_vertex(v) for v in members]
    coords = tuple(c + 1 for c in range(n) if len({s[c] for s in signs}) > 1)
    fixed = tuple((c + 1, signs[0][c]) for c in range(n) if c + 1 not in coords)
    return Face(kind, tuple(cycle), coords, fixed)


def scan_faces(m: BasisSystem, skeleton: PolytopeSkeleton | None = None, check: bool = True) -> PolytopeSkeleton:
    """Skeleton with edges and classified 2-faces."""
    sk = skeleton if skeleton is not None else compute_edges(m, check=check)
    faces = [classify_face(f, sk) for f in fan_faces(m).get(2, [])]
    faces.sort(key=lambda f: (FACE_KINDS.index(f.kind) if f.kind in FACE_KINDS else 99, f.labels))
    return PolytopeSkeleton(sk.n, sk.vertices, sk.edges, tuple(faces))


def polytope(m: BasisSystem, check: bool = True) -> PolytopeSkeleton:
    return scan_faces(m, check=check)


# -- orientations ----------------------------------------------------------------

def _short_directions(sk: PolytopeSkeleton, s) -> dict:
    out = {}
    for e in sk.edges:
        if e.kind == SHORT:
            out[e] = (e.a, e.b) if s(e.a, e.b) == 1 else (e.b, e.a)
    return out


def orient_skeleton(m: BasisSystem, st: SignTable, skeleton: PolytopeSkeleton | None = None) -> OrientedSkeleton:
    """Direct each short edge A -> B when s(A, B) = +1."""
    if not is_orientation(m, st):
        raise DomainError("sign table is not an orientation of this matroid")
    sk = skeleton if skeleton is not None else polytope(m)
    return OrientedSkeleton(sk, _short_directions(sk, st))


def skeleton_from_signs(m: BasisSystem, rs: RelativeSigns, skeleton: PolytopeSkeleton | None = None) -> OrientedSkeleton:
    """Short-edge directions induced by an arbitrary (possibly invalid) relative sign assignment."""
    sk = skeleton if skeleton is not None else polytope(m)
    f = rs.fundamental

    def s(a, b):
        lower_a = height(a, f) < height(b, f)
        same = rs[a] == rs[b]
        return 1 if same == lower_a else -1

    return OrientedSkeleton(sk, _short_directions(sk, s))


def check_balance(os: OrientedSkeleton) -> list[Face]:
    """Faces where short edges do not split evenly between the two senses of the boundary walk."""
    bad = []
    for face in os.base.faces:
        agree = disagree = 0
        for a, b in face.boundary():
            e = os.base.edge(a, b)
            if e is None or e.kind != SHORT:
                continue
            if os.direction[e] == (a, b):
                agree += 1
            else:
                disagree += 1
        if agree != disagree:
            bad.append(face)
    return bad


def is_inducing(os: OrientedSkeleton, e: Edge, f: Transversal) -> bool:
    """Vertical long edges and downward short edges flip the propagated sign."""
    if e.kind == LONG:
        return height(e.a, f) != height(e.b, f)
    tail, head = os.direction[e]
    return height(tail, f) > height(head, f)


class PropagationError(DomainError):
    def __init__(self, message, cycle):
        super().__init__(message)
        self.cycle = cycle


def signs_from_skeleton(os: OrientedSkeleton, f: Transversal) -> RelativeSigns:
    """Breadth-first sign propagation from s(F) = +1 across the skeleton."""
    sk = os.base
    if f not in sk.vertices:
        raise DomainError(f"{f} is not a vertex of the polytope")
    adj = {v: [] for v in sk.vertices}
    for e in sk.edges:
        adj[e.a].append(e)
        adj[e.b].append(e)
    signs = {f: 1}
    parent = {f: None}
    queue = deque([f])
    while queue:
        u = queue.popleft()
        for e in sorted(adj[u], key=lambda x: (x.a.label, x.b.label)):
            v = e.other(u)
            want = -signs[u] if is_inducing(os, e, f) else signs[u]
            if v not in signs:
                signs[v] = want
                parent[v] = u
                queue.append(v)
            elif signs[v] != want:
                raise PropagationError(
                    f"contradiction across edge {e}: the skeleton is not balanced",
                    _path(parent, u)[::-1] + _path(parent, v),
                )
    if len(signs) != len(sk.vertices):
        raise DomainError("polytope skeleton is disconnected")
    return RelativeSigns(f, signs)


def _path(parent, v):
    out = []
    while v is not None:
        out.append(v)
        v = parent[v]
    return out


# -- independent convex-hull oracle ------------------------------------------------

def hull_edges(points) -> list[tuple]:
    """Edges of conv(points) for distinct cube vertices, by linear programming.

    [u, v] is an edge iff the midpoint of u, v admits no convex representation
    with positive weight outside {u, v}.  Used only to cross-check the
    adjacency criterion and the Maximality Property on arbitrary collections.
    """
    from scipy.optimize import linprog

    pts = sorted(points, key=lambda t: t.label)
    coords = np.array([embed_vertex(p) for p in pts], dtype=float)
    out = []
    m = len(pts)
    a_eq = np.vstack([coords.T, np.ones((1, m))])
    for s, t in itertools.combinations(range(m), 2):
        mid = (coords[s] + coords[t]) / 2
        cost = -np.ones(m)
        cost[s] = cost[t] = 0.0
        res = linprog(cost, A_eq=a_eq, b_eq=np.append(mid, 1.0), bounds=(0, None), method="highs")
        if not res.success:
            raise RuntimeError(f"hull LP failed: {res.message}")
        if -res.fun < 1e-9:
            out.append((pts[s], pts[t]))
    return out


# -- exports -----------------------------------------------------------------------

def to_dict(sk: PolytopeSkeleton, oriented: OrientedSkeleton | None = None,
            signs: RelativeSigns | None = None) -> dict:
    verts = []
    for v in sk.vertices:
        rec = {"basis": v.label, "point": list(embed_vertex(v))}
        if signs is not None:
            rec["sign_rel"] = signs[v]
        verts.append(rec)
    edges = []
    for e in sk.edges:
        rec = {"a": e.a.label, "b": e.b.label, "kind": e.kind}
        if oriented is not None and e.kind == SHORT:
            rec["direction"] = [x.label for x in oriented.direction[e]]
        edges.append(rec)
    faces = [{"kind": f.kind, "members": f.labels, "coords": list(f.coords)} for f in sk.faces]
    out = {"n": sk.n, "vertices": verts, "edges": edges, "faces": faces}
    if signs is not None:
        out["fundamental"] = signs.fundamental.label
    return out


def to_dot(sk: PolytopeSkeleton, oriented: OrientedSkeleton | None = None) -> str:
    lines = ["digraph polytope {"]
    for f in sk.faces:
        lines.append(f"  // face {f.kind}: {' '.join(f.labels)}")
    for v in sk.vertices:
        lines.append(f'  "{v.label}" [label="{v.label}"];')
    for e in sk.edges:
        if e.kind == SHORT and oriented is not None:
            tail, head = oriented.direction[e]
            lines.append(f'  "{tail.label}" -> "{head.label}";')
        elif e.kind == SHORT:
            lines.append(f'  "{e.a.label}" -> "{e.b.label}" [dir=none];')
        else:
            lines.append(f'  "{e.a.label}" -> "{e.b.label}" [dir=none, style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"
