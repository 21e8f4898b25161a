"""Relative sign functions, orientation axioms and full sign tables.

Axioms are checked one 2-dimensional face of the cube at a time:

* horizontal:  a horizontal long edge joins bases of equal sign;
* vertical:    a vertical long edge joins bases of opposite sign;
* square:      in a short-edged square, a lone sign sits at the lowest or highest corner;
* fundamental: the fundamental basis is positive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .errors import DomainError, GuardExceeded
from .ground import AdmissibleOrdering, Transversal, enumerate_orderings, outside_both, parse_transversal
from .matroid import BasisSystem, height, is_even, require_lagrangian

MAX_ORIENTATION_BASES = 24


@dataclass(frozen=True, eq=False)
class RelativeSigns:
    fundamental: Transversal
    signs: Mapping[Transversal, int]

    def __getitem__(self, a: Transversal) -> int:
        return self.signs[a]

    def __eq__(self, other):
        if not isinstance(other, RelativeSigns):
            return NotImplemented
        return self.fundamental == other.fundamental and dict(self.signs) == dict(other.signs)

    def __hash__(self):
        return hash((self.fundamental, frozenset(self.signs.items())))

    def to_dict(self) -> dict:
        return {
            "fundamental": self.fundamental.label,
            "signs": {a.label: self.signs[a] for a in sorted(self.signs, key=lambda b: b.label)},
        }

    def __repr__(self):
        return f"RelativeSigns({json.dumps(self.to_dict())})"


class SignTable:
    """s: bases x bases -> {+1, -1}, read as 0 outside the bases.

    Two tables are equal exactly when they describe the same oriented
    Lagrangian matroid.
    """

    __slots__ = ("n", "bases", "values")

    def __init__(self, n: int, values: Mapping[tuple[Transversal, Transversal], int]):
        self.n = n
        self.values = dict(values)
        self.bases = tuple(sorted({a for a, _ in self.values}, key=lambda b: b.label))

    def __call__(self, a: Transversal, b: Transversal) -> int:
        return self.values.get((a, b), 0)

    def row(self, g: Transversal) -> RelativeSigns:
        if (g, g) not in self.values:
            raise DomainError(f"{g} is not a basis")
        return RelativeSigns(g, {a: self.values[g, a] for a in self.bases})

    def key(self) -> tuple[int, ...]:
        return tuple(self.values[a, b] for a in self.bases for b in self.bases)

    def __eq__(self, other):
        if not isinstance(other, SignTable):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, frozenset(self.values.items())))

    def to_dict(self, fundamental: Transversal | None = None, full: bool = False) -> dict:
        f = fundamental if fundamental is not None else self.bases[0]
        out = self.row(f).to_dict()
        if full:
            out["table"] = {a.label: {b.label: self.values[a, b] for b in self.bases} for a in self.bases}
        return out

    def __repr__(self):
        return f"SignTable(n={self.n}, bases={[b.label for b in self.bases]})"


@dataclass(frozen=True)
class Violation:
    axiom: str
    bases: tuple[str, ...]
    face: tuple = ()
    message: str = field(default="", compare=False)

    def __str__(self):
        where = f" on cube face {self.face}" if self.face else ""
        return f"{self.axiom} axiom{where}: {self.message}"


def cube_faces(n: int):
    """Cube 2-faces as ((i, j), v00, v10, v01, v11) with v10 = v00 flipped at i."""
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            free = (1 << (i - 1)) | (1 << (j - 1))
            for rest in range(1 << n):
                if rest & free:
                    continue
                v00 = Transversal(n, rest)
                yield (i, j), v00, v00.flip(i), v00.flip(j), v00.flip(i, j)


def _face_id(ij, v00) -> tuple:
    i, j = ij
    fixed = tuple((k, s) for k, s in enumerate(v00.signs, 1) if k not in (i, j))
    return (ij, fixed)


def _compile(m: BasisSystem, f: Transversal):
    """Pairwise sign constraints and short-square checks relative to f."""
    pairs = []    # (axiom, a, b, same_sign, face)
    squares = []  # (face, corners, lowest, highest)
    bases = m.bases
    for ij, v00, v10, v01, v11 in cube_faces(m.n):
        present = [v for v in (v00, v10, v01, v11) if v in bases]
        if len(present) < 2:
            continue
        fid = _face_id(ij, v00)
        for a, b, c, d in ((v00, v11, v10, v01), (v10, v01, v00, v11)):
            if a in bases and b in bases and not (c in bases and d in bases):
                if height(a, f) == height(b, f):
                    pairs.append(("horizontal", a, b, True, fid))
                else:
                    pairs.append(("vertical", a, b, False, fid))
        if len(present) == 4:
            corners = (v00, v10, v01, v11)
            hs = [height(v, f) for v in corners]
            squares.append((fid, corners, corners[hs.index(min(hs))], corners[hs.index(max(hs))]))
    return pairs, squares


def _violations(compiled, f, signs) -> list[Violation]:
    pairs, squares = compiled
    out = []
    for axiom, a, b, same, fid in pairs:
        if (signs[a] == signs[b]) != same:
            kind = "horizontal" if same else "vertical"
            want = "equal" if same else "opposite"
            out.append(Violation(axiom, (a.label, b.label), fid,
                                 f"{kind} long edge {a}-{b} needs {want} signs"))
    for fid, corners, low, high in squares:
        plus = [v for v in corners if signs[v] == 1]
        minus = [v for v in corners if signs[v] == -1]
        lone = plus[0] if len(plus) == 1 else minus[0] if len(minus) == 1 else None
        if lone is not None and lone not in (low, high):
            out.append(Violation("square", tuple(v.label for v in corners), fid,
                                 f"lone sign at {lone}, which is neither lowest ({low}) nor highest ({high})"))
    if signs[f] != 1:
        out.append(Violation("fundamental", (f.label,), (), f"fundamental basis {f} must be positive"))
    return out


def validate_orientation(m: BasisSystem, rs: RelativeSigns) -> list[Violation]:
    require_lagrangian(m)
    f = rs.fundamental
    if f not in m:
        raise DomainError(f"fundamental basis {f} is not a basis")
    if set(rs.signs) != set(m.bases):
        raise DomainError("relative signs must be defined exactly on the bases")
    if any(v not in (1, -1) for v in rs.signs.values()):
        raise DomainError("relative signs must be +1 or -1")
    return _violations(_compile(m, f), f, rs.signs)


def _extend(m: BasisSystem, rs: RelativeSigns) -> SignTable:
    f = rs.fundamental
    s = rs.signs
    values = {}
    for g in m.bases:
        for a in m.bases:
            values[g, a] = s[a] * s[g] * (-1) ** outside_both(g, f, a)
    return SignTable(m.n, values)


def extend_signs(m: BasisSystem, rs: RelativeSigns) -> SignTable:
    """s(G, A) = s_F(A) s_F(G) (-1)^{|G \\ (F ∪ A)|} on bases, 0 elsewhere."""
    bad = validate_orientation(m, rs)
    if bad:
        raise DomainError(f"not an orientation relative to {rs.fundamental}: {bad[0]}")
    return _extend(m, rs)


def change_fundamental(st: SignTable, g: Transversal) -> RelativeSigns:
    return st.row(g)


def is_orientation(m: BasisSystem, st: SignTable) -> bool:
    """True when st is the extension of a valid relative sign function of m."""
    if set(st.bases) != set(m.bases):
        return False
    rs = st.row(st.bases[0])
    return not validate_orientation(m, rs) and _extend(m, rs) == st


def cocycle_defects(st: SignTable, limit: int = 10) -> list[str]:
    """Failures of s(G,A) = s(H,A) s(H,G) (-1)^{|G \\ (H ∪ A)|} and of reciprocity.

    Checked directly over all triples and pairs of bases, independently of
    how the table was produced.  Stops after ``limit`` failures.
    """
    out = []
    bs = st.bases
    for a in bs:
        for b in bs:
            if st(a, b) * st(b, a) != (-1) ** len(a.differing(b)):
                out.append(f"reciprocity fails at ({a}, {b})")
                if len(out) >= limit:
                    return out
    for g in bs:
        for h in bs:
            for a in bs:
                if st(g, a) != st(h, a) * st(h, g) * (-1) ** outside_both(g, h, a):
                    out.append(f"cocycle fails at G={g}, H={h}, A={a}")
                    if len(out) >= limit:
                        return out
    return out


def _parity_classes(bases, f, pairs):
    """Union-find with parity over the long-edge constraints.

    Returns (root, parity) per basis, or None if the constraints conflict.
    """
    parent = {b: b for b in bases}
    par = {b: 0 for b in bases}

    def find(x):
        p = 0
        while parent[x] != x:
            p ^= par[x]
            x = parent[x]
        return x, p

    for _, a, b, same, _ in pairs:
        ra, pa = find(a)
        rb, pb = find(b)
        want = 0 if same else 1
        if ra == rb:
            if pa ^ pb != want:
                return None
            continue
        parent[rb] = ra
        par[rb] = pa ^ pb ^ want
    return {b: find(b) for b in bases}


def enumerate_orientations(m: BasisSystem, fundamental: Transversal | None = None) -> list[SignTable]:
    """Every orientation of m, sorted by table key.

    Long-edge axioms are equalities of signs, so assignments are scanned per
    class of the parity union-find rather than per basis; each candidate is
    still checked against every axiom before it is kept.
    """
    require_lagrangian(m)
    if len(m) > MAX_ORIENTATION_BASES:
        raise GuardExceeded(f"orientation scan limited to {MAX_ORIENTATION_BASES} bases, got {len(m)}")
    f = fundamental if fundamental is not None else m.sorted_bases()[0]
    if f not in m:
        raise DomainError(f"{f} is not a basis")
    compiled = _compile(m, f)
    classes = _parity_classes(m.sorted_bases(), f, compiled[0])
    if classes is None:
        return []
    roots = sorted({r for r, _ in classes.values()}, key=lambda b: b.label)
    f_root, f_par = classes[f]
    free = [r for r in roots if r != f_root]
    tables = []
    for mask in range(1 << len(free)):
        root_sign = {f_root: -1 if f_par else 1}
        for pos, r in enumerate(free):
            root_sign[r] = -1 if mask >> pos & 1 else 1
        signs = {b: root_sign[r] * (-1 if p else 1) for b, (r, p) in classes.items()}
        if not _violations(compiled, f, signs):
            tables.append(_extend(m, RelativeSigns(f, signs)))
    return sorted(tables, key=SignTable.key)


def brute_force_orientations(m: BasisSystem, fundamental: Transversal | None = None) -> list[SignTable]:
    """Plain scan of all 2^(|B|-1) assignments (reference for tests and small cases)."""
    require_lagrangian(m)
    if len(m) > MAX_ORIENTATION_BASES:
        raise GuardExceeded(f"orientation scan limited to {MAX_ORIENTATION_BASES} bases, got {len(m)}")
    f = fundamental if fundamental is not None else m.sorted_bases()[0]
    others = [b for b in m.sorted_bases() if b != f]
    compiled = _compile(m, f)
    tables = []
    for mask in range(1 << len(others)):
        signs = {f: 1}
        for pos, b in enumerate(others):
            signs[b] = -1 if mask >> pos & 1 else 1
        if not _violations(compiled, f, signs):
            tables.append(_extend(m, RelativeSigns(f, signs)))
    return sorted(tables, key=SignTable.key)


def canonical_even_orientation(m: BasisSystem, fundamental: Transversal | None = None) -> SignTable:
    """The unique orientation of an even matroid: sign (-1)^(h/2) at height h."""
    if not is_even(m):
        raise DomainError("canonical orientation needs an even matroid")
    f = fundamental if fundamental is not None else m.sorted_bases()[0]
    if f not in m:
        raise DomainError(f"{f} is not a basis")
    return extend_signs(m, RelativeSigns(f, {a: (-1) ** (height(a, f) // 2) for a in m.bases}))


def are_isomorphic(m1: BasisSystem, s1: SignTable | None, m2: BasisSystem,
                   s2: SignTable | None) -> AdmissibleOrdering | None:
    """First admissible permutation carrying (m1, s1) onto (m2, s2), or None.

    Pass ``None`` for both tables to compare unoriented matroids.
    """
    if (s1 is None) != (s2 is None):
        raise ValueError("give both sign tables or neither")
    if m1.n != m2.n or len(m1) != len(m2):
        return None
    target = m2.bases
    for w in enumerate_orderings(m1.n):
        image = {a: w.apply(a) for a in m1.bases}
        if frozenset(image.values()) != target:
            continue
        if s1 is None or all(s2(image[a], image[b]) == s1(a, b) for a in m1.bases for b in m1.bases):
            return w
    return None


def relative_signs_from(labels: Mapping[str, int], fundamental: str, n: int) -> RelativeSigns:
    """Build relative signs from basis-notation keys, as in the JSON form."""
    return RelativeSigns(parse_transversal(fundamental, n),
                         {parse_transversal(k, n): v for k, v in labels.items()})
