"""Command-line interface: ``lagmat <command> ...``.

JSON on stdout by default, a plain text rendering with ``--pretty``.
Exit status 0 on success, 1 on domain errors, 2 on I/O or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import DomainError, NotationError
from .ground import parse_transversal
from .index import all_increasing_paths, crosscheck_quadratic, index_relative, path_sign_changes
from .matfile import load_document
from .matroid import BasisSystem, check_maximality, is_even
from .orient import are_isomorphic, enumerate_orientations, validate_orientation
from .polytope import compute_edges, orient_skeleton, polytope, to_dict, to_dot
from .represent import extract_bases, relative_signs, representation_sign_table


class _Usage(Exception):
    pass


def _representation(path):
    return load_document(path).representation()


def _fundamental(text, m: BasisSystem):
    f = parse_transversal(text, m.n)
    if f not in m:
        raise DomainError(f"fundamental {f} is not a basis; bases are {', '.join(m.labels)}")
    return f


def cmd_bases(a):
    r = _representation(a.file)
    return extract_bases(r, a.rank).labels


def cmd_check(a):
    r = _representation(a.file)
    m = extract_bases(r)
    rep = check_maximality(m)
    out = {
        "n": m.n,
        "rank": m.k,
        "field": r.field,
        "representation": "ok",
        "bases": m.labels,
        "maximality": rep.holds,
        "witness": None if rep.witness is None else str(rep.witness),
        "lagrangian": m.is_lagrangian,
    }
    if m.is_lagrangian:
        out["even"] = is_even(m)
    return out


def cmd_signs(a):
    r = _representation(a.file)
    m = extract_bases(r)
    f = _fundamental(a.fundamental, m)
    rs = relative_signs(r, f)
    out = rs.to_dict()
    out["violations"] = [str(v) for v in validate_orientation(m, rs)]
    return out


def _matroid_from_args(a) -> BasisSystem:
    if a.bases is not None:
        if a.file is not None:
            raise _Usage("give a matrix file or --bases, not both")
        labels = a.bases.replace(";", " ").split()
        if not labels:
            raise NotationError("--bases is empty")
        if a.n is None and "," in labels[0]:
            raise _Usage("comma-separated basis labels need --n")
        n = a.n if a.n is not None else len(labels[0].replace("*", ""))
        return BasisSystem.from_labels(labels, n)
    if a.file is None:
        raise _Usage("give a matrix file or --bases")
    return extract_bases(_representation(a.file))


def cmd_orientations(a):
    m = _matroid_from_args(a)
    f = _fundamental(a.fundamental, m) if a.fundamental else m.sorted_bases()[0]
    tables = enumerate_orientations(m, f)
    return {
        "bases": m.labels,
        "count": len(tables),
        "orientations": [t.to_dict(f, full=a.full) for t in tables],
    }


def cmd_index(a):
    r = _representation(a.file)
    m = extract_bases(r)
    f = _fundamental(a.fundamental, m)
    st = representation_sign_table(r)
    sk = compute_edges(m)
    out = index_relative(m, st, f, sk).to_dict()
    if a.verify_paths:
        counts = path_sign_changes(m, st, f, sk)
        out["paths_checked"] = len(all_increasing_paths(m, f, sk))
        out["path_sign_changes"] = sorted(counts)
        out["well_defined"] = len(counts) == 1
    return out


def cmd_crosscheck(a):
    r = _representation(a.file)
    m = extract_bases(r)
    sk = compute_edges(m)
    rows = [crosscheck_quadratic(r, f, sk, m) for f in m.sorted_bases()]
    return {"agree": all(x["agree"] for x in rows), "fundamentals": rows}


def cmd_polytope(a):
    r = _representation(a.file)
    m = extract_bases(r)
    sk = polytope(m)
    os = signs = None
    if a.oriented:
        st = representation_sign_table(r)
        os = orient_skeleton(m, st, sk)
        f = _fundamental(a.fundamental, m) if a.fundamental else m.sorted_bases()[0]
        signs = st.row(f)
    if a.dot:
        return to_dot(sk, os)
    return to_dict(sk, os, signs)


def cmd_isomorphic(a):
    ra, rb = _representation(a.file_a), _representation(a.file_b)
    ma, mb = extract_bases(ra), extract_bases(rb)
    if a.oriented:
        w = are_isomorphic(ma, representation_sign_table(ra), mb, representation_sign_table(rb))
    else:
        w = are_isomorphic(ma, None, mb, None)
    return {"oriented": a.oriented, "isomorphic": w is not None, "witness": None if w is None else str(w)}


def cmd_census(a):
    from .census import census

    return census(a.n)


def cmd_selftest(a):
    from .acceptance import run_all

    lines = []
    results = run_all(seed=a.seed, out=lines.append)
    report = {
        "passed": all(c.passed for c in results),
        "criteria": [{"number": c.number, "name": c.name, "passed": c.passed, "detail": c.detail}
                     for c in results],
    }
    return report, lines


def _pretty(obj, indent=0) -> list[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        out = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                out.append(f"{pad}{k}:")
                out += _pretty(v, indent + 1)
            else:
                out.append(f"{pad}{k}: {_scalar(v)}")
        return out
    if isinstance(obj, list):
        if _flat(obj):
            return [pad + _scalar(obj)]
        out = []
        for item in obj:
            sub = _pretty(item, indent + 1)
            out.append(f"{pad}- " + sub[0].lstrip())
            out += sub[1:]
        return out
    return [pad + _scalar(obj)]


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return " ".join(_scalar(x) for x in v) if v else "(none)"
    if isinstance(v, dict):
        return "{}"
    if v is None:
        return "-"
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="human-readable text instead of JSON")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized runs (default 0)")

    p = argparse.ArgumentParser(prog="lagmat", parents=[common],
                                description="Lagrangian symplectic matroids from exact matrix representations.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_, description=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("bases", cmd_bases, "list the bases of a represented matroid")
    sp.add_argument("file")
    sp.add_argument("--rank", type=int, default=None)

    sp = add("check", cmd_check, "representation invariants and the Maximality Property")
    sp.add_argument("file")

    sp = add("signs", cmd_signs, "signs of the bases relative to a fundamental basis")
    sp.add_argument("file")
    sp.add_argument("--fundamental", required=True)

    sp = add("orientations", cmd_orientations, "enumerate all orientations of a Lagrangian matroid")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--bases", help='basis list, e.g. "1*23 12*3 123* 123"')
    sp.add_argument("--n", type=int, help="ground size for --bases (default: read off the first label)")
    sp.add_argument("--fundamental")
    sp.add_argument("--full", action="store_true", help="include the full two-argument table")

    sp = add("index", cmd_index, "index of the represented orientation relative to a basis")
    sp.add_argument("file")
    sp.add_argument("--fundamental", required=True)
    sp.add_argument("--verify-paths", action="store_true", help="check every maximal increasing path")

    sp = add("crosscheck", cmd_crosscheck, "matroid index against the quadratic-form index, every fundamental")
    sp.add_argument("file")

    sp = add("polytope", cmd_polytope, "polytope skeleton with typed edges and 2-faces")
    sp.add_argument("file")
    sp.add_argument("--oriented", action="store_true", help="direct short edges by the represented orientation")
    sp.add_argument("--fundamental", help="basis for the sign_rel field (with --oriented)")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")

    sp = add("isomorphic", cmd_isomorphic, "search for an admissible permutation between two matroids")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.add_argument("--oriented", action="store_true")

    sp = add("census", cmd_census, "exhaustive census of Lagrangian matroids of ground size n")
    sp.add_argument("--n", type=int, required=True)

    add("selftest", cmd_selftest, "run the acceptance suite")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    a.pretty = getattr(a, "pretty", False)
    a.seed = getattr(a, "seed", 0)
    try:
        result = a.func(a)
    except _Usage as exc:
        parser.error(str(exc))
    except NotationError as exc:
        print(f"lagmat: parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"lagmat: cannot read input: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"lagmat: {exc}", file=sys.stderr)
        return 1

    status = 0
    if a.command == "selftest":
        result, lines = result
        status = 0 if result["passed"] else 1
        if a.pretty:
            print("\n".join(lines))
            return status
    if isinstance(result, str):
        sys.stdout.write(result)
    elif a.pretty:
        print("\n".join(_pretty(result)))
    else:
        print(json.dumps(result))
    return status


if __name__ == "__main__":
    sys.exit(main())
