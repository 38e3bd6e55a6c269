"""Command-line interface.

Poset specs use a compact text form:

  rect:MxN       chain product [M] x [N]
  trunc:MxN:R    [M] x [N] with the bottom R ranks removed
  rootA:K        root triangle with K minimal elements
  minB:N         staircase half of [N] x [N]
  rootB:N        type B root poset of rank N
  ordsum:2+3+1   ordinal sum of antichains
  cube:LxMxN     chain product [L] x [M] x [N]

ICS inputs are JSON arrays of 1-based coordinate tuples, e.g.
'[[1,2],[1,3]]' (a single tuple may be given flat: '[1,1]'; the empty
string or '[]' is the empty set).  Path text encodings follow the paths
module: Motzkin tokens 'U D 1 2', walk tokens 'e w se nw'.

Exit codes: 0 success, 2 parse/validation error, 3 scale or budget
exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijections, paths, posets, series, verify
from .posets import (
    ChainProduct,
    ChainProduct3,
    OrdinalSumAntichains,
    TruncatedRectangle,
    TypeARoot,
    TypeBMinuscule,
    TypeBRoot,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SCALE = 3
EXIT_VERIFY = 4

DEFAULT_SERIES_ORDER = 10


class VerificationFailure(RuntimeError):
    pass


def parse_poset_spec(text: str) -> posets.PosetSpec:
    kind, _, rest = text.partition(":")
    try:
        if kind == "rect":
            m, n = (int(p) for p in rest.split("x"))
            return posets.normalize_spec(ChainProduct(m, n))
        if kind == "trunc":
            dims, _, r = rest.partition(":")
            m, n = (int(p) for p in dims.split("x"))
            return posets.normalize_spec(TruncatedRectangle(m, n, int(r)))
        if kind == "rootA":
            return posets.normalize_spec(TypeARoot(int(rest)))
        if kind == "minB":
            return posets.normalize_spec(TypeBMinuscule(int(rest)))
        if kind == "rootB":
            return posets.normalize_spec(TypeBRoot(int(rest)))
        if kind == "ordsum":
            return posets.normalize_spec(
                OrdinalSumAntichains(int(p) for p in rest.split("+"))
            )
        if kind == "cube":
            l, m, n = (int(p) for p in rest.split("x"))
            return posets.normalize_spec(ChainProduct3(l, m, n))
    except ValueError as exc:
        raise ValueError(f"bad poset spec {text!r}: {exc}") from None
    raise ValueError(f"bad poset spec {text!r}: unknown family {kind!r}")


def parse_ics_json(text: str) -> frozenset[tuple]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad ICS JSON: {exc}") from None
    if not isinstance(data, list):
        raise ValueError("ICS JSON must be an array")
    if not data:
        return frozenset()
    if all(isinstance(v, int) for v in data):
        return frozenset([tuple(data)])
    out = []
    for item in data:
        if not isinstance(item, list) or not all(isinstance(v, int) for v in item):
            raise ValueError(f"bad ICS element {item!r}; expected [a,b] or [a,b,c]")
        out.append(tuple(item))
    return frozenset(out)


def format_labels(labels) -> str:
    return json.dumps([list(lab) for lab in sorted(labels)], separators=(",", ":"))


# ---------------------------------------------------------------------------
# count


def _formula_count(spec) -> int | None:
    if isinstance(spec, OrdinalSumAntichains):
        return series.closed_form_count("ordinal_sum", spec.sizes)
    if isinstance(spec, TruncatedRectangle) and spec.r == 0:
        spec = ChainProduct(spec.m, spec.n)
    if isinstance(spec, ChainProduct):
        m, n = sorted((spec.m, spec.n))
        if m <= 1:
            return series.closed_form_count("chain", n if m else 0)
        if m == 2:
            return series.closed_form_count("two_by_n", n)
        if m == 3:
            return series.closed_form_count("three_by_n", n)
    return None


def _series_count(spec) -> int | None:
    if isinstance(spec, ChainProduct):
        return series.rectangle_counts(spec.m, spec.n)[(spec.m, spec.n)]
    if isinstance(spec, TruncatedRectangle):
        return series.truncated_counts(spec.m, spec.n)[(spec.m, spec.n, spec.r)]
    if isinstance(spec, TypeARoot):
        return series.typeA_counts(spec.k + 1)
    if isinstance(spec, TypeBMinuscule):
        return series.b_minuscule_counts(spec.n)[spec.n]
    if isinstance(spec, TypeBRoot):
        return series.b_root_counts(spec.n)
    return None


def cmd_count(args) -> int:
    spec = parse_poset_spec(args.spec)
    method = args.method
    results: dict[str, int] = {}
    if method in ("oracle", "all"):
        if method == "oracle" or posets.build_poset(spec).n <= posets.ICS_ENUMERATION_BOUND:
            results["oracle"] = posets.count_ics(posets.build_poset(spec))
    if method in ("formula", "all"):
        value = _formula_count(spec)
        if value is not None:
            results["formula"] = value
        elif method == "formula":
            raise ValueError(f"no closed formula for {args.spec}")
    if method in ("series", "all"):
        value = _series_count(spec)
        if value is not None:
            results["series"] = value
        elif method == "series":
            raise ValueError(f"no series engine for {args.spec}")
    if not results:
        raise ValueError(f"no applicable counting method for {args.spec}")
    ordered = [k for k in ("oracle", "formula", "series") if k in results]
    if args.json:
        print(json.dumps({"spec": args.spec, "counts": {k: str(results[k]) for k in ordered}}))
    else:
        print(", ".join(str(results[k]) for k in ordered))
    if len(set(results.values())) > 1:
        raise VerificationFailure(f"methods disagree: {results}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# enumerate / stats


def cmd_enumerate(args) -> int:
    spec = parse_poset_spec(args.spec)
    poset = posets.build_poset(spec)
    stream = (
        sorted(poset.labels_of(s))
        for s in posets.enumerate_ics(poset, limit=args.limit)
    )
    if args.json:
        rows = [[list(lab) for lab in row] for row in stream]
        print(json.dumps(rows, separators=(",", ":")))
    else:
        for row in stream:
            print(json.dumps([list(lab) for lab in row], separators=(",", ":")))
    return EXIT_OK


def cmd_stats(args) -> int:
    spec = parse_poset_spec(args.spec)
    poset = posets.build_poset(spec)
    labels = parse_ics_json(args.ics)
    _require_labels(poset, labels)
    members = poset.indices_of(labels)
    witness = posets.find_ics_violation(poset, members)
    if witness is not None:
        x, z, y = (poset.labels[i] for i in witness)
        raise ValueError(f"not interval-closed: {x} < {z} < {y} but {z} is missing")
    st = posets.subset_stats(poset, members)
    payload = {
        "cardinality": st.cardinality,
        "components": st.component_count,
        "incomparable": st.incomparable_count,
        "minimal_in_subset": st.minimal_in_subset,
    }
    if st.hits_all_files is not None:
        payload["hits_all_files"] = st.hits_all_files
    if args.json:
        print(json.dumps(payload))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return EXIT_OK


def _require_labels(poset, labels) -> None:
    unknown = [lab for lab in labels if lab not in poset.index]
    if unknown:
        raise ValueError(f"elements not in the poset: {sorted(unknown)}")


# ---------------------------------------------------------------------------
# map


def cmd_map(args) -> int:
    spec = parse_poset_spec(args.spec)
    if args.inverse:
        return _cmd_map_inverse(args, spec)
    poset = posets.build_poset(spec)
    labels = parse_ics_json(args.input)
    _require_labels(poset, labels)
    if args.to == "motzkin":
        if not isinstance(spec, ChainProduct):
            if isinstance(spec, TruncatedRectangle) and spec.r == 0:
                spec = ChainProduct(spec.m, spec.n)
            else:
                raise ValueError("Motzkin images are defined for rect:MxN specs")
        word = bijections.ics_to_motzkin(spec.m, spec.n, labels, poset)
        print(paths.motzkin_to_text(word))
    elif args.to == "walk":
        walk = bijections.ics_to_walk(spec, labels, poset)
        print(paths.walk_to_text(walk))
    elif args.to == "classify":
        cl = bijections.classify_elements(spec, labels, poset)
        payload = {
            "in": json.loads(format_labels(cl.in_ics)),
            "below_only": json.loads(format_labels(cl.below_only)),
            "above_only": json.loads(format_labels(cl.above_only)),
            "incomparable": json.loads(format_labels(cl.incomparable)),
        }
        print(json.dumps(payload, separators=(",", ":")))
    return EXIT_OK


def _cmd_map_inverse(args, spec) -> int:
    if args.to == "motzkin":
        if not isinstance(spec, ChainProduct):
            raise ValueError("Motzkin images are defined for rect:MxN specs")
        word = paths.motzkin_from_text(args.input)
        m, n, labels = bijections.motzkin_to_ics(word)
        if (m, n) != (spec.m, spec.n):
            raise ValueError(
                f"word has shape ({m}, {n}), spec asks for ({spec.m}, {spec.n})"
            )
        print(format_labels(labels))
        return EXIT_OK
    if args.to == "walk":
        m, n, r = bijections._frame(spec)
        walk = paths.walk_from_text(n - r, args.input)
        frame = bijections.walk_frame(walk)
        if frame != (m, n, r):
            raise ValueError(f"walk frame {frame} does not match spec frame {(m, n, r)}")
        _, labels = bijections.walk_to_ics(walk)
        print(format_labels(labels))
        return EXIT_OK
    raise ValueError("classification has no inverse")


# ---------------------------------------------------------------------------
# series


def cmd_series(args) -> int:
    order = args.order if args.order is not None else args.seed_order
    which = args.which
    if which == "rectangle":
        table = series.rectangle_counts(order, order)
        if args.format == "json":
            print(json.dumps(series.rectangle_series(order, order).to_json_dict()))
        else:
            print("m\\n," + ",".join(str(n) for n in range(order + 1)))
            for m in range(order + 1):
                print(f"{m}," + ",".join(str(table[(m, n)]) for n in range(order + 1)))
    elif which == "bminuscule":
        counts = series.b_minuscule_counts(order)
        if args.format == "json":
            print(json.dumps(series.b_minuscule_series(order).to_json_dict()))
        elif args.format == "csv":
            print("n,count")
            for n, c in enumerate(counts):
                print(f"{n},{c}")
        else:
            print(", ".join(str(c) for c in counts))
    elif which == "typeA":
        counts = [series.typeA_counts(n) for n in range(1, order + 1)]
        _print_sequence(args, counts, start=1)
    elif which == "broot":
        counts = [series.b_root_counts(n) for n in range(1, order + 1)]
        _print_sequence(args, counts, start=1)
    elif which == "truncated":
        table = series.truncated_counts(order, order)
        rows = [(m, n, r) for (m, n, r) in sorted(table) if m + n <= order]
        if args.format == "json":
            terms = [
                {"exp": [n - r, m - r, m + n], "num": str(table[(m, n, r)]), "den": "1"}
                for (m, n, r) in rows
            ]
            print(json.dumps({"vars": ["t", "x", "z"], "terms": terms}))
        else:
            print("m,n,r,count")
            for m, n, r in rows:
                print(f"{m},{n},{r},{table[(m, n, r)]}")
    return EXIT_OK


def _print_sequence(args, counts, start: int) -> None:
    if args.format == "json":
        print(json.dumps({"start": start, "counts": [str(c) for c in counts]}))
    elif args.format == "csv":
        print("n,count")
        for i, c in enumerate(counts, start=start):
            print(f"{i},{c}")
    else:
        print(", ".join(str(c) for c in counts))


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    records = verify.run_checks(args.level)
    if args.json:
        print(json.dumps([r.to_json_dict() for r in records], indent=2))
    else:
        for r in records:
            mark = "PASS" if r.passed else "FAIL"
            print(f"[{mark}] {r.name} ({r.source}, {r.elapsed:.2f}s)")
            if not r.passed:
                print(f"    expected: {r.expected!r}")
                print(f"    actual:   {r.actual!r}")
        failed = sum(1 for r in records if not r.passed)
        print(f"{len(records) - failed}/{len(records)} checks passed")
    if any(not r.passed for r in records):
        raise VerificationFailure("verification failed")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icsets",
        description="Count, enumerate, and map interval-closed sets of chain products, truncated rectangles, and root/minuscule posets.",
    )
    parser.add_argument(
        "--seed-order",
        type=int,
        default=DEFAULT_SERIES_ORDER,
        help=f"default series order when --order is omitted (default {DEFAULT_SERIES_ORDER})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count the ICS of a poset")
    p.add_argument("spec")
    p.add_argument("--method", choices=["oracle", "formula", "series", "all"], default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("enumerate", help="list every ICS in deterministic order")
    p.add_argument("spec")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("map", help="apply a bijection to an ICS (or invert one)")
    p.add_argument("spec")
    p.add_argument("input", help="ICS as JSON, or encoded path text with --inverse")
    p.add_argument("--to", choices=["motzkin", "walk", "classify"], required=True)
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(fn=cmd_map)

    p = sub.add_parser("stats", help="statistics of an ICS")
    p.add_argument("spec")
    p.add_argument("ics")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("series", help="emit a counting sequence or table")
    p.add_argument(
        "which", choices=["rectangle", "bminuscule", "typeA", "truncated", "broot"]
    )
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("verify", help="recompute every reference number")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, bijections.NotIntervalClosed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (
        posets.OracleScaleExceeded,
        paths.PathScaleExceeded,
        series.SeriesBudgetExceeded,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except VerificationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
