"""Command line interface.

Subcommands:

  catalog       list or render the built-in patterns
  count         count (or list) occurrences of a pattern in a permutation
  involution    apply phi, psi or theta to a permutation
  distribution  statistic distribution over S_n (single or sibling pair)
  enumerate     count or list avoiders of a pattern set
  genfun        print a distribution polynomial
  verify        run registered claims

Exit status: 0 on success, 1 when a verify run finds a failing claim,
2 on usage errors (bad arguments, unparsable patterns, out-of-range n).

JSON output renders permutations in comma form and unbounded counts and
coefficients as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from . import enumeration as _enum
from . import genfun as _genfun
from . import mesh as _mesh
from . import verify as _verify
from .codes import big_theta, phi, psi
from .mesh import PatternParseError
from .perms import Permutation


class UsageError(Exception):
    pass


def _parse_perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as e:
        raise UsageError(f"bad permutation {text!r}: {e}") from None


def _parse_pattern(text: str) -> _mesh.MeshPattern:
    try:
        return _mesh.parse_pattern(text)
    except PatternParseError as e:
        raise UsageError(f"bad pattern {text!r}: {e}") from None


def _split_top_level(text: str) -> list[str]:
    """Split a pattern list on commas that sit outside any bracket pair.
    List items therefore use digit, name or mesh(...) form; comma-form
    words are only accepted as single-pattern arguments."""
    parts: list[str] = []
    cur: list[str] = []
    depth = 0
    for ch in text:
        if ch in "({[":
            depth += 1
        elif ch in ")}]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    out = [p.strip() for p in parts if p.strip()]
    if not out:
        raise UsageError("empty pattern list")
    return out


def _check_cap(n: int) -> None:
    raw = os.environ.get("MESHPERM_MAX_N", "").strip()
    if not raw:
        return
    if n > int(raw):
        raise UsageError(f"n={n} exceeds MESHPERM_MAX_N={raw}")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


# ----------------------------------------------------------- subcommands

def _cmd_catalog(args) -> int:
    try:
        return _catalog_body(args)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _catalog_body(args) -> int:
    if args.name is None:
        rows = []
        for name in _mesh.CATALOG_NAMES:
            needs_k = name in ("A", "D", "At", "Dt")
            p = _mesh.catalog(name, args.k if needs_k else None)
            rows.append((name if not needs_k else f"{name}(k={p.length})", p))
        if args.json:
            _emit(
                [
                    {
                        "name": label,
                        "word": p.underlying.comma(),
                        "shading": sorted(map(list, p.shading)),
                        "text": _mesh.render_pattern(p),
                    }
                    for label, p in rows
                ]
            )
        else:
            for label, p in rows:
                print(f"{label:10s} {_mesh.render_pattern(p)}")
        return 0
    p = _mesh.catalog(args.name, args.k)
    if args.json:
        _emit(
            {
                "name": args.name,
                "word": p.underlying.comma(),
                "shading": sorted(map(list, p.shading)),
                "text": _mesh.render_pattern(p),
            }
        )
    else:
        print(_mesh.render_pattern(p))
    return 0


def _cmd_count(args) -> int:
    host = _parse_perm(args.perm)
    pat = _parse_pattern(args.pattern)
    occs = _mesh.occurrences(host, pat) if args.occurrences else None
    cnt = len(occs) if occs is not None else _mesh.count(host, pat)
    if args.json:
        out = {
            "perm": host.comma(),
            "pattern": _mesh.render_pattern(pat),
            "count": str(cnt),
        }
        if occs is not None:
            out["occurrences"] = [
                {"positions": list(o.positions), "values": list(o.values)} for o in occs
            ]
        _emit(out)
    else:
        print(cnt)
        if occs is not None:
            for o in occs:
                print(f"positions={o.positions} values={o.values}")
    return 0


_INVOLUTIONS = {"phi": phi, "psi": psi, "theta": big_theta}


def _cmd_involution(args) -> int:
    host = _parse_perm(args.perm)
    fn = _INVOLUTIONS[args.name]
    try:
        image = fn(host)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.json:
        _emit({"map": args.name, "input": host.comma(), "output": image.comma()})
    else:
        print(image.compact())
    return 0


_SIBLINGS = {
    ("P1", "P2"): 0,
    ("P3", "P4"): 1,
    ("P5", "P6"): 2,
    ("P7", "P8"): 3,
    ("P9", "P10"): 4,
    ("P11", "P12"): 5,
    ("P13", "P14"): 6,
}


def _cmd_distribution(args) -> int:
    _check_cap(args.n)
    names = [s.strip().upper() for s in args.stat.split(",")]
    valid = {f"P{i}" for i in range(1, 15)}
    for s in names:
        if s not in valid:
            raise UsageError(f"unknown statistic {s!r}; use P1..P14")
    if len(names) not in (1, 2):
        raise UsageError("give one statistic or a sibling pair like P13,P14")
    dists, singles = _verify._full_dists(args.n, args.jobs, 0)
    n = args.n
    if len(names) == 1:
        row = singles[int(names[0][1:]) - 1]
        pairs = [(k, int(row[k])) for k in range(n + 1)]
        if args.json:
            _emit(
                {
                    "n": n,
                    "stat": names[0],
                    "distribution": [{"value": k, "count": str(c)} for k, c in pairs],
                }
            )
        else:
            print("k,count")
            for k, c in pairs:
                print(f"{k},{c}")
        return 0
    key = (names[0], names[1])
    transpose = False
    if key not in _SIBLINGS:
        key = (names[1], names[0])
        transpose = True
    if key not in _SIBLINGS:
        allowed = ", ".join(f"{a},{b}" for a, b in _SIBLINGS)
        raise UsageError(f"joint distributions cover sibling pairs only: {allowed}")
    mat = dists[_SIBLINGS[key]]
    if transpose:
        mat = mat.T
    cells = [(k, l, int(mat[k, l])) for k in range(n + 1) for l in range(n + 1)]
    if args.json:
        _emit(
            {
                "n": n,
                "stats": names,
                "distribution": [
                    {"values": [k, l], "count": str(c)} for k, l, c in cells
                ],
            }
        )
    else:
        print("k,l,count")
        for k, l, c in cells:
            print(f"{k},{l},{c}")
    return 0


def _cmd_enumerate(args) -> int:
    _check_cap(args.n)
    pats = [_parse_pattern(t) for t in _split_top_level(args.patterns)]
    want_list = None
    if args.count_only:
        want_list = False
    elif args.members:
        want_list = True
    res = _enum.enumerate_class(pats, args.n, want_list=want_list, jobs=args.jobs)
    if args.json:
        out = {
            "n": res.n,
            "patterns": [_mesh.render_pattern(p) for p in pats],
            "count": str(res.count),
        }
        if res.members is not None:
            out["members"] = [m.comma() for m in res.members]
        _emit(out)
    else:
        print("n,count")
        print(f"{res.n},{res.count}")
    return 0


def _cmd_genfun(args) -> int:
    which = args.which.upper()
    try:
        if which == "F":
            poly = (
                _genfun.f_poly_bruteforce(args.n)
                if args.method == "brute"
                else _genfun.f_poly_recurrence(args.n)
            )
            if args.json:
                _emit(
                    {
                        "which": "F",
                        "n": args.n,
                        "method": args.method,
                        "terms": [
                            {"s": a, "t": b, "coeff": str(c)}
                            for a, b, c in poly.sorted_terms()
                        ],
                        "text": str(poly),
                    }
                )
            else:
                print(poly)
        elif which == "S":
            upoly = (
                _genfun.s_poly_bruteforce(args.n)
                if args.method == "brute"
                else _genfun.s_poly_recurrence(args.n)
            )
            if args.json:
                _emit(
                    {
                        "which": "S",
                        "n": args.n,
                        "method": args.method,
                        "coeffs": [str(c) for c in upoly.coeffs],
                        "text": str(upoly),
                    }
                )
            else:
                print(upoly)
        else:
            raise UsageError("genfun --which must be F or S")
    except ValueError as e:
        raise UsageError(str(e)) from None
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for cid in _verify.claim_ids():
            print(cid)
        return 0
    if args.all:
        ids = _verify.claim_ids()
    elif args.claim:
        try:
            ids = tuple(_verify.resolve_claim_id(c) for c in args.claim)
        except KeyError as e:
            raise UsageError(str(e.args[0])) from None
    else:
        raise UsageError("verify needs --all, --claim ID, or --list")
    reports = _verify.run_all(max_n=args.max_n, jobs=args.jobs, claims=ids)
    if args.json:
        _emit([r.to_dict() for r in reports])
    else:
        for r in reports:
            print(r.summary_line())
        bad = sum(1 for r in reports if not r.ok)
        print(f"{len(reports) - bad}/{len(reports)} claims passed")
    return 0 if all(r.ok for r in reports) else 1


# ------------------------------------------------------------------ parser

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="meshperm",
        description="Mesh-pattern statistics, involutions and enumeration.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or render built-in patterns")
    p.add_argument("name", nargs="?", help="pattern name (P1..P14, A, D, At, Dt)")
    p.add_argument("--k", type=int, default=None, help="size for A/D/At/Dt (default 2)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_catalog)

    p = sub.add_parser("count", help="count pattern occurrences in a permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--occurrences", action="store_true", help="also list each occurrence")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("involution", help="apply phi, psi or theta")
    p.add_argument("--name", required=True, choices=sorted(_INVOLUTIONS))
    p.add_argument("--perm", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_involution)

    p = sub.add_parser("distribution", help="statistic distribution over S_n")
    p.add_argument("--stat", required=True, help="P1..P14 or a sibling pair like P13,P14")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_distribution)

    p = sub.add_parser("enumerate", help="count avoiders of a pattern set")
    p.add_argument("--patterns", required=True, help="comma-separated pattern list")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true", help="never collect members")
    p.add_argument("--members", action="store_true", help="collect members (JSON output)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("genfun", help="print a distribution polynomial")
    p.add_argument("--which", required=True, help="F or S")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("recurrence", "brute"), default="recurrence")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_genfun)

    p = sub.add_parser("verify", help="run registered claims")
    p.add_argument("--all", action="store_true", help="run every claim")
    p.add_argument("--claim", action="append", help="claim id (repeatable)")
    p.add_argument("--list", action="store_true", help="list claim ids")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        if getattr(args, "n", None) is not None and args.n < 0:
            raise UsageError("n must be >= 0")
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("jobs must be >= 1")
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
