"""The acceptance suite: eight reproducibility criteria with time limits.

Each criterion returns a ``Criterion`` record; ``run_all`` prints one
PASS/FAIL line per criterion.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .census import (check_axioms_vs_balance, check_cocycles, check_even_orientations, check_index_paths,
                     check_maximality_vs_hull, check_round_trips, census_tables)
from .exactlin import congruence_diagonalize, matrix
from .ground import parse_transversal
from .index import crosscheck_quadratic, index_relative
from .matfile import figure
from .matroid import is_even
from .orient import are_isomorphic, canonical_even_orientation, enumerate_orientations
from .polytope import LONG, SHORT, compute_edges, polytope
from .represent import Representation, extract_bases, representation_sign_table


@dataclass
class Criterion:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        lim = f" (limit {self.limit:g} s)" if self.limit else ""
        return f"[{verdict}] {self.number}. {self.name}: {self.detail} [{self.seconds:.2f} s{lim}]"


def _timed(number, name, limit, fn) -> Criterion:
    t0 = time.perf_counter()
    problems = fn()
    dt = time.perf_counter() - t0
    if limit is not None and dt >= limit:
        problems = list(problems) + [f"took {dt:.2f} s"]
    ok = not problems
    detail = "ok" if ok else "; ".join(problems[:3])
    return Criterion(number, name, ok, detail, dt, limit)


def _labels(bases) -> set:
    return {b.label for b in bases}


def _edge_kind(sk, a, b):
    e = sk.edge(parse_transversal(a, sk.n), parse_transversal(b, sk.n))
    return None if e is None else e.kind


def _face_kinds(sk) -> list:
    return [f.kind for f in sk.faces]


def figure1() -> list[str]:
    bad = []
    m = extract_bases(figure("fig1"))
    want = {"1*2*3*", "12*3*", "1*23*", "1*2*3", "123*", "12*3"}
    if _labels(m) != want:
        bad.append(f"bases {sorted(_labels(m))}")
    sk = polytope(m)
    if _edge_kind(sk, "12*3", "1*2*3") != SHORT:
        bad.append("12*3-1*2*3 is not a short edge")
    if _edge_kind(sk, "12*3", "123*") != LONG:
        bad.append("12*3-123* is not a long edge")
    kinds = _face_kinds(sk)
    for k in ("sSquare", "nsRect", "iTri"):
        if k not in kinds:
            bad.append(f"no {k} face")
    return bad


def figure2() -> list[str]:
    bad = []
    m = extract_bases(figure("fig2_gf2"))
    if _labels(m) != {"1*2*3*", "1*23", "12*3", "123*"}:
        bad.append(f"bases {sorted(_labels(m))}")
    sk = polytope(m)
    if len(sk.edges) != 6 or any(e.kind != LONG for e in sk.edges):
        bad.append("skeleton is not K4 of long edges")
    if _face_kinds(sk) != ["eqTri"] * 4:
        bad.append(f"faces {_face_kinds(sk)}")
    if not is_even(m):
        bad.append("not even")
    tables = enumerate_orientations(m)
    if len(tables) != 1:
        bad.append(f"{len(tables)} orientations")
    else:
        f = parse_transversal("1*2*3*", 3)
        rep = index_relative(m, tables[0], f, sk)
        if not rep.index == 1 == rep.max_height // 2:
            bad.append(f"index {rep.index}, max height {rep.max_height}")
    return bad


def figure3() -> list[str]:
    bad = []
    left, right = figure("fig3_left"), figure("fig3_right")
    ml, mr = extract_bases(left), extract_bases(right)
    want = {"1*23", "12*3", "123*", "123"}
    if _labels(ml) != want or _labels(mr) != want:
        bad.append("basis sets differ from {1*23, 12*3, 123*, 123}")
        return bad
    tables = enumerate_orientations(ml)
    if len(tables) != 2:
        bad.append(f"{len(tables)} orientations")
    sl, sr = representation_sign_table(left), representation_sign_table(right)
    if sl not in tables or sr not in tables or sl == sr:
        bad.append("representation tables are not the two orientations")
    f = parse_transversal("123", 3)
    if any(v != -1 for b, v in sl.row(f).signs.items() if b != f):
        bad.append("left signs relative to 123 are not all -1")
    if any(v != 1 for v in sr.row(f).signs.values()):
        bad.append("right signs relative to 123 are not all +1")
    sk = compute_edges(ml)
    for name, st in (("left", sl), ("right", sr)):
        for g in ml.sorted_bases():
            want_idx = 0 if (name == "right" and g == f) else 1
            got = index_relative(ml, st, g, sk).index
            if got != want_idx:
                bad.append(f"{name} index relative to {g} is {got}, expected {want_idx}")
    if are_isomorphic(ml, sl, mr, sr) is not None:
        bad.append("oriented isomorphism found")
    if are_isomorphic(ml, None, mr, None) is None:
        bad.append("no unoriented isomorphism")
    return bad


def lsquare() -> list[str]:
    m = extract_bases(figure("lsquare"))
    sk = polytope(m)
    bad = []
    if len(m) != 4:
        bad.append(f"{len(m)} bases")
    if _face_kinds(sk) != ["lSquare"]:
        bad.append(f"faces {_face_kinds(sk)}")
    elif len(sk.edges) != 4 or any(e.kind != LONG for e in sk.edges):
        bad.append("boundary is not a 4-cycle of long edges")
    return bad


def random_symmetric(rng: random.Random, n: int, lo: int = -9, hi: int = 9):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(lo, hi)
    return matrix(rows)


def quadratic_forms(count: int = 200, seed: int = 0) -> list[str]:
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        s = random_symmetric(rng, rng.randint(2, 5))
        r = Representation.symmetric(s)
        m = extract_bases(r)
        sk = compute_edges(m, check=False)
        for f in m.sorted_bases():
            rep = crosscheck_quadratic(r, f, sk, m)
            if not rep["agree"]:
                bad.append(f"{s.tolist()} at {f}: {rep}")
    return bad


def census_properties() -> list[str]:
    bad = []
    for n in (1, 2, 3):
        for check in (check_maximality_vs_hull, check_axioms_vs_balance, check_round_trips, check_index_paths):
            res = check(n)
            if not res.passed:
                bad.append(f"{res.name}: {res.summary()}")
    return bad


def cocycle_suite(seed: int = 0) -> list[str]:
    tables = []
    for n in (1, 2, 3):
        tables += census_tables(n)
    for name in ("fig3_left", "fig3_right", "fig1", "hyperbolic"):
        tables.append(representation_sign_table(figure(name)))
    rng = random.Random(seed)
    for _ in range(20):
        s = random_symmetric(rng, rng.randint(2, 4))
        tables.append(representation_sign_table(Representation.symmetric(s)))
    res = check_cocycles(tables)
    return [] if res.passed else [res.summary()]


def even_instances(rng: random.Random, count: int = 20):
    """Bipartite symmetric matrices [[0, B], [B^t, 0]]; every basis has the same star parity."""
    yield "hyperbolic", figure("hyperbolic")
    for _ in range(count):
        p, q = rng.randint(1, 2), rng.randint(1, 2)
        b = [[rng.randint(-3, 3) for _ in range(q)] for _ in range(p)]
        n = p + q
        rows = [[0] * n for _ in range(n)]
        for i in range(p):
            for j in range(q):
                rows[i][p + j] = rows[p + j][i] = b[i][j]
        yield f"bipartite {rows}", Representation.symmetric(matrix(rows))


def even_matroids(seed: int = 0) -> list[str]:
    bad = []
    for n in (1, 2, 3):
        res = check_even_orientations(n)
        if not res.passed:
            bad.append(f"{res.name}: {res.summary()}")
    rng = random.Random(seed)
    for name, r in even_instances(rng):
        m = extract_bases(r)
        if not is_even(m):
            bad.append(f"{name}: matroid is not even")
            continue
        sig = congruence_diagonalize(r.left).signature
        if sig != 0:
            bad.append(f"{name}: signature {sig}")
        if [representation_sign_table(r)] != [canonical_even_orientation(m)]:
            bad.append(f"{name}: representation table differs from the height rule")
    return bad


CRITERIA = (
    (1, "fig1: bases, edges, face types", 1.0, figure1),
    (2, "fig2 over GF(2): tetrahedron, even, unique orientation", 1.0, figure2),
    (3, "fig3 pair: orientations, signs, indices, isomorphism", 1.0, figure3),
    (4, "lsquare: one square of long edges", 1.0, lsquare),
    (5, "matroid index = quadratic-form index, 200 random matrices", 60.0, quadratic_forms),
    (6, "census properties n <= 3", 120.0, census_properties),
    (7, "cocycle identity and reciprocity", None, cocycle_suite),
    (8, "even matroids: unique orientation, signature 0", None, even_matroids),
)


def run_criterion(number: int, seed: int = 0) -> Criterion:
    for num, name, limit, fn in CRITERIA:
        if num == number:
            if fn in (quadratic_forms, cocycle_suite, even_matroids):
                return _timed(num, name, limit, lambda: fn(seed=seed))
            return _timed(num, name, limit, fn)
    raise KeyError(f"no criterion {number}")


def run_all(seed: int = 0, out=print) -> list[Criterion]:
    results = []
    for num, *_ in CRITERIA:
        c = run_criterion(num, seed)
        out(c.line())
        results.append(c)
    return results
