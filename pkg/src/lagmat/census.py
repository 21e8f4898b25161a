"""Exhaustive small-case census and the structural checks run over it."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .errors import DomainError, GuardExceeded
from .ground import Transversal, all_transversals
from .index import count_inducing_edges, index_relative, path_sign_changes
from .matroid import MAX_CENSUS_N, BasisSystem, check_maximality, enumerate_lagrangian_matroids, is_even
from .orient import (RelativeSigns, SignTable, canonical_even_orientation, cocycle_defects,
                     enumerate_orientations, extend_signs, validate_orientation)
from .polytope import (FACE_KINDS, SHORT, OrientedSkeleton, PropagationError, check_balance,
                       compute_edges, hull_edges, orient_skeleton, polytope, signs_from_skeleton,
                       skeleton_from_signs)

MAX_CHECK_N = 3


def census(n: int) -> dict:
    """Matroid count, orientation-count histogram and face-type histogram for ground size n."""
    if not 1 <= n <= MAX_CENSUS_N:
        raise GuardExceeded(f"census supports 1 <= n <= {MAX_CENSUS_N}, got {n}")
    matroids = 0
    evens = 0
    per = Counter()
    faces = Counter({k: 0 for k in FACE_KINDS})
    for m in enumerate_lagrangian_matroids(n):
        matroids += 1
        evens += is_even(m)
        per[len(enumerate_orientations(m))] += 1
        for f in polytope(m, check=False).faces:
            faces[f.kind] += 1
    return {
        "n": n,
        "matroids": matroids,
        "even_matroids": evens,
        "orientations_per_matroid": {str(k): per[k] for k in sorted(per)},
        "orientations_total": sum(k * v for k, v in per.items()),
        "faces": dict(faces),
    }


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    def fail(self, msg: str, cap: int = 20):
        if len(self.failures) < cap:
            self.failures.append(msg)
        else:
            self.failures[-1] = "... more failures suppressed"

    def summary(self) -> str:
        head = f"{self.cases} cases"
        return head if not self.failures else f"{head}; {len(self.failures)} failure(s): {self.failures[0]}"


def _guard(n):
    if not 1 <= n <= MAX_CHECK_N:
        raise GuardExceeded(f"exhaustive checks support 1 <= n <= {MAX_CHECK_N}, got {n}")


def check_maximality_vs_hull(n: int) -> CheckResult:
    """Maximality holds exactly when every hull edge has length 2 or 2 sqrt 2.

    Runs over every non-empty collection of transversals.  For the ones that
    pass, the adjacency-criterion edges must equal the LP hull edges.
    """
    _guard(n)
    res = CheckResult(f"maximality vs hull edges, n={n}")
    verts = all_transversals(n)
    for mask in range(1, 1 << len(verts)):
        coll = [v for i, v in enumerate(verts) if mask >> i & 1]
        m = BasisSystem(n, n, frozenset(coll))
        hull = hull_edges(coll)
        short_or_long = all(len(a.differing(b)) in (1, 2) for a, b in hull)
        holds = check_maximality(m).holds
        res.cases += 1
        if holds != short_or_long:
            res.fail(f"{m}: maximality={holds} but hull edge lengths ok={short_or_long}")
            continue
        if holds:
            ours = {frozenset((e.a, e.b)) for e in compute_edges(m).edges}
            theirs = {frozenset(p) for p in hull}
            if ours != theirs:
                res.fail(f"{m}: adjacency edges differ from hull edges")
    return res


def _all_sign_assignments(m: BasisSystem, f: Transversal):
    others = [b for b in m.sorted_bases() if b != f]
    for bits in itertools.product((1, -1), repeat=len(others)):
        yield RelativeSigns(f, {f: 1, **dict(zip(others, bits))})


def check_axioms_vs_balance(n: int) -> CheckResult:
    """Axiom validity against balance of the oriented skeleton, both directions.

    * For each relative sign assignment: valid iff the induced skeleton is
      balanced and propagating from F gives the assignment back.
    * For each direction assignment of the short edges: balanced iff
      propagation is contradiction-free and yields a valid orientation.
    """
    _guard(n)
    res = CheckResult(f"axioms vs face balance, n={n}")
    for m in enumerate_lagrangian_matroids(n):
        sk = polytope(m, check=False)
        f = m.sorted_bases()[0]
        for rs in _all_sign_assignments(m, f):
            res.cases += 1
            valid = not validate_orientation(m, rs)
            os = skeleton_from_signs(m, rs, sk)
            geometric = not check_balance(os) and _propagate(os, f) == rs
            if valid != geometric:
                res.fail(f"{m} signs {rs.to_dict()['signs']}: axioms={valid}, balance={geometric}")
        shorts = [e for e in sk.edges if e.kind == SHORT]
        for bits in itertools.product((0, 1), repeat=len(shorts)):
            res.cases += 1
            direction = {e: ((e.a, e.b) if b == 0 else (e.b, e.a)) for e, b in zip(shorts, bits)}
            os = OrientedSkeleton(sk, direction)
            balanced = not check_balance(os)
            rs = _propagate(os, f)
            ok = rs is not None and not validate_orientation(m, rs)
            if balanced != ok:
                res.fail(f"{m}: balanced={balanced} but propagation gives valid orientation={ok}")
    return res


def _propagate(os: OrientedSkeleton, f: Transversal) -> RelativeSigns | None:
    try:
        return signs_from_skeleton(os, f)
    except PropagationError:
        return None


def check_round_trips(n: int) -> CheckResult:
    """orientation -> oriented skeleton -> orientation, and the reverse, are identities."""
    _guard(n)
    res = CheckResult(f"orientation/skeleton round trips, n={n}")
    for m in enumerate_lagrangian_matroids(n):
        sk = polytope(m, check=False)
        for st in enumerate_orientations(m):
            os = orient_skeleton(m, st, sk)
            for f in m.sorted_bases():
                res.cases += 1
                back = extend_signs(m, signs_from_skeleton(os, f))
                if back != st:
                    res.fail(f"{m}: table -> skeleton -> table differs at F={f}")
                again = orient_skeleton(m, back, sk)
                if again.direction != os.direction:
                    res.fail(f"{m}: skeleton -> table -> skeleton differs at F={f}")
    return res


def check_index_paths(n: int) -> CheckResult:
    """All maximal height-increasing paths agree; inducing-edge count equals the index."""
    _guard(n)
    res = CheckResult(f"index path independence, n={n}")
    for m in enumerate_lagrangian_matroids(n):
        sk = polytope(m, check=False)
        for st in enumerate_orientations(m):
            os = orient_skeleton(m, st, sk)
            for f in m.sorted_bases():
                res.cases += 1
                counts = path_sign_changes(m, st, f, sk)
                idx = index_relative(m, st, f, sk, check=False).index
                if counts != {idx}:
                    res.fail(f"{m} F={f}: path sign changes {sorted(counts)}, greedy index {idx}")
                inducing = count_inducing_edges(os, f)
                if inducing != idx:
                    res.fail(f"{m} F={f}: {inducing} inducing edges but index {idx}")
    return res


def check_cocycles(tables) -> CheckResult:
    res = CheckResult("cocycle identity and reciprocity")
    for st in tables:
        res.cases += 1
        bad = cocycle_defects(st, limit=1)
        if bad:
            res.fail(f"{st}: {bad[0]}")
    return res


def census_tables(n: int) -> list[SignTable]:
    return [st for m in enumerate_lagrangian_matroids(n) for st in enumerate_orientations(m)]


def check_even_orientations(n: int) -> CheckResult:
    """Each even matroid has one orientation, given by the (-1)^(h/2) rule."""
    _guard(n)
    res = CheckResult(f"even matroids are uniquely oriented, n={n}")
    for m in enumerate_lagrangian_matroids(n):
        if not is_even(m):
            continue
        res.cases += 1
        found = enumerate_orientations(m)
        try:
            rule = canonical_even_orientation(m)
        except DomainError as exc:
            res.fail(f"{m}: height rule is not an orientation ({exc})")
            continue
        if found != [rule]:
            res.fail(f"{m}: {len(found)} orientation(s), height rule among them: {rule in found}")
    return res
