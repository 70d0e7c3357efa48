"""Command-line interface: convert, classify, dual, pan, count, verify, render.

Objects are given in the core text formats.  ``--kind`` names the input
kind; without it the kind is inferred from the text:

- ``n=...`` is a poset,
- anything with ``;`` is a matrix,
- anything starting with 0 is an ascent sequence,
- a single entry is a 1x1 matrix,
- a permutation of 1..n is a permutation.
"""
from __future__ import annotations

import argparse
import sys
from typing import Any, Callable, Sequence

from . import bijections as bij
from . import duality as dual
from . import families as fam
from .core import (
    FishburnError,
    IntervalOrderPoset,
    ParseError,
    Poset,
    _ints,
    canonical_labelling,
    format_matrix,
    format_poset,
    format_seq,
    parse_asc,
    parse_matrix,
    parse_perm,
    parse_poset,
    poset_structure,
    render_active_sites,
)
from .enumeration import TIERS as COUNT_TIERS
from .enumeration import count_table
from .oracle import TIERS as VERIFY_TIERS
from .oracle import verify_sweep
from .patterns import is_rgf, parse_pattern, seq_contains

KINDS = ("asc", "matrix", "poset", "perm")


def infer_kind(text: str) -> str:
    text = text.strip()
    if text.startswith("n="):
        return "poset"
    if ";" in text:
        return "matrix"
    try:
        values = _ints(text)
    except ParseError:
        raise ParseError(f"cannot infer the kind of {text!r}; pass --kind") from None
    if values and values[0] == 0:
        return "asc"
    if len(values) == 1:
        return "matrix"
    if sorted(values) == list(range(1, len(values) + 1)):
        return "perm"
    raise ParseError(f"cannot infer the kind of {text!r}; pass --kind")


def parse_object(text: str, kind: str | None) -> tuple[str, Any]:
    kind = kind or infer_kind(text)
    if kind == "asc":
        return kind, parse_asc(text)
    if kind == "matrix":
        return kind, parse_matrix(text)
    if kind == "perm":
        return kind, parse_perm(text)
    if kind == "poset":
        return kind, parse_poset(text)
    raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def format_object(kind: str, obj: Any) -> str:
    if kind == "matrix":
        return format_matrix(obj)
    if kind == "poset":
        return format_poset(canonical_labelling(obj))
    return format_seq(obj)


# ---------------------------------------------------------------------------
# convert

_TO_ASC: dict[str, Callable] = {
    "asc": lambda x, t: x,
    "matrix": bij.matrix_to_asc,
    "perm": bij.perm_to_asc,
    "poset": bij.poset_to_asc,
}
_FROM_ASC: dict[str, Callable] = {
    "asc": lambda a, t: a,
    "matrix": bij.asc_to_matrix,
    "perm": bij.asc_to_perm,
    "poset": bij.asc_to_poset,
}


def convert(kind: str, obj: Any, target: str, trace: bij.BijectionTrace | None = None) -> Any:
    """Image of ``obj`` in the ``target`` family.

    Poset and matrix are joined directly; every other pair routes through
    ascent sequences.
    """
    if kind == target:
        return obj
    if (kind, target) == ("poset", "matrix"):
        return bij.poset_to_matrix(obj)
    if (kind, target) == ("matrix", "poset"):
        return bij.matrix_to_poset(obj)
    a = _TO_ASC[kind](obj, trace)
    return _FROM_ASC[target](a, trace)


def _trace_lines(trace: bij.BijectionTrace) -> list[str]:
    lines = []
    for step in trace.steps:
        snap = step.snapshot
        if isinstance(snap, Poset):
            shown = format_poset(snap)
        elif isinstance(snap, int):
            shown = f"removed {snap + 1}"
        elif snap and isinstance(snap[0], tuple):
            shown = format_matrix(snap)
        else:
            shown = format_seq(snap)
        lines.append(f"trace k={step.k} case={step.case} {shown}")
    return lines


def cmd_convert(text: str, args) -> list[str]:
    kind, obj = parse_object(text, args.kind)
    trace = bij.BijectionTrace() if args.trace else None
    out = [format_object(args.to, convert(kind, obj, args.to, trace))]
    if trace is not None:
        out += _trace_lines(trace)
    return out


# ---------------------------------------------------------------------------
# classify

def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def classify_text(text: str, kind: str | None, pattern: str | None = None) -> str:
    kind = kind or infer_kind(text)
    if kind == "asc":
        values = _ints(text)
        tag = fam.classify_asc(values)
        fields = [
            ("asc", tag.in_classical),
            ("rgf", is_rgf(values)),
            ("rasc", tag.in_R),
            ("casc", tag.in_C),
        ]
    elif kind == "matrix":
        M = parse_matrix(text)
        tag = fam.classify_matrix(M)
        fields = [
            ("matrix", True),
            ("rmatrix", tag.in_R),
            ("sefree", tag.in_C),
            ("semiorder", fam.is_semiorder_matrix(M)),
        ]
        values = None
    elif kind == "perm":
        values = parse_perm(text)
        tag = fam.classify_perm(values)
        fields = [
            ("perm", tag.in_classical),
            ("rperm", tag.in_R),
            ("cperm", tag.in_C),
        ]
    elif kind == "poset":
        P = parse_poset(text, cls=Poset)
        tag = fam.classify_poset(P)
        fields = [
            ("poset", tag.in_classical),
            ("rposet", tag.in_R),
            ("seriesparallel", tag.in_C),
            ("semiorder", fam.is_semiorder_poset(P)),
        ]
        values = None
    else:
        raise ParseError(f"unknown kind {kind!r}")
    if pattern is not None:
        if values is None:
            raise ParseError("--pattern applies to sequences and permutations only")
        fields.append((f"contains[{pattern}]", seq_contains(values, parse_pattern(pattern))))
    return " ".join(f"{name}={_yn(flag)}" for name, flag in fields)


def cmd_classify(text: str, args) -> list[str]:
    return [classify_text(text, args.kind, args.pattern)]


# ---------------------------------------------------------------------------
# dual, pan

def dual_of(kind: str, obj: Any) -> Any:
    if kind == "asc":
        return dual.asc_dual(obj)
    if kind == "matrix":
        return dual.matrix_flip(obj)
    if kind == "perm":
        return dual.perm_dual(obj)
    return dual.poset_dual(obj)


def cmd_dual(text: str, args) -> list[str]:
    kind, obj = parse_object(text, args.kind)
    return [format_object(kind, dual_of(kind, obj))]


def cmd_pan(text: str, args) -> list[str]:
    values = _ints(text)
    out = [format_seq(dual.panorama(values))]
    if args.views:
        out.insert(0, "views " + format_seq(dual.views(values)))
    return out


# ---------------------------------------------------------------------------
# render

def render_poset_dot(P: Poset) -> str:
    lines = ["digraph poset {", "  rankdir=BT;"]
    for x in range(P.n):
        lines.append(f"  p{x + 1};")
    if P.is_two_plus_two_free():
        st = poset_structure(IntervalOrderPoset.from_downsets(P.down))
        for level in range(st.ell + 1):
            members = [x for x in range(P.n) if st.level_of[x] == level]
            lines.append("  { rank=same; " + " ".join(f"p{x + 1};" for x in members) + " }")
    for a, b in P.covers():
        lines.append(f"  p{a + 1} -> p{b + 1};")
    lines.append("}")
    return "\n".join(lines)


def render_matrix(M: Sequence[Sequence[int]]) -> str:
    if not M:
        return ""
    width = max(len(str(v)) for row in M for v in row)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in M)


def render_asc(a: Sequence[int]) -> str:
    ascents = [i + 1 for i in range(len(a) - 1) if a[i] < a[i + 1]]
    return f"{format_seq(a)}\nascents at {format_seq(ascents) or '-'}"


def cmd_render(text: str, args) -> list[str]:
    kind = args.kind or infer_kind(text)
    if kind == "poset":
        return [render_poset_dot(parse_poset(text, cls=Poset))]
    _, obj = parse_object(text, kind)
    if kind == "matrix":
        return [render_matrix(obj)]
    if kind == "perm":
        return [render_active_sites(obj)]
    return [render_asc(obj)]


# ---------------------------------------------------------------------------
# count, verify (no positional object)

def cmd_count(args) -> int:
    tiers = tuple(args.tier) if args.tier else COUNT_TIERS
    table = count_table(args.max_n, tiers=tiers)
    print(table.to_csv() if args.csv else table.to_text())
    return 0


def cmd_verify(args) -> int:
    if args.n is not None:
        sizes = [args.n]
    else:
        sizes = range(1, args.max_n + 1)
    ok = True
    for n in sizes:
        report = verify_sweep(n, args.tier)
        print(report.to_text())
        ok = ok and report.ok
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def _run_objects(handler: Callable[[str, Any], list[str]], args) -> int:
    if args.batch:
        with open(args.batch) as fh:
            texts = [line.strip() for line in fh if line.strip() and not line.startswith("#")]
    elif args.object is not None:
        texts = [args.object]
    else:
        print("error: an object or --batch FILE is required", file=sys.stderr)
        return 2
    status = 0
    for text in texts:
        try:
            for line in handler(text, args):
                print(line)
        except FishburnError as exc:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
            status = 1
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fishburn",
        description="Ascent sequences, Fishburn matrices, (2+2)-free posets and 2|3-1bar-avoiding permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def object_command(name: str, help_: str, handler) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("object", nargs="?", help="object in its text format")
        p.add_argument("--kind", "--as", dest="kind", choices=KINDS, help="input kind (inferred if omitted)")
        p.add_argument("--batch", metavar="FILE", help="read one object per line from FILE")
        p.set_defaults(handler=handler)
        return p

    p = object_command("convert", "map an object to another family", cmd_convert)
    p.add_argument("--to", required=True, choices=KINDS)
    p.add_argument("--trace", action="store_true", help="print the insertion/removal steps")

    p = object_command("classify", "family membership report", cmd_classify)
    p.add_argument("--pattern", help="also test containment of a sequence pattern, e.g. 101")

    object_command("dual", "dual object (poset duality transported)", cmd_dual)
    object_command("render", "annotated or DOT rendering", cmd_render)

    p = sub.add_parser("pan", help="panorama of an integer sequence")
    p.add_argument("object", nargs="?")
    p.add_argument("--batch", metavar="FILE")
    p.add_argument("--views", action="store_true", help="also print the views")
    p.set_defaults(handler=cmd_pan)

    p = sub.add_parser("count", help="count table for every family and tier")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--tier", action="append", choices=COUNT_TIERS, help="restrict to a tier (repeatable)")
    p.add_argument("--csv", action="store_true", help="comma-separated output")
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("verify", help="exhaustive invariant sweep")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="object size")
    group.add_argument("--max-n", type=int, help="sweep sizes 1..MAX_N")
    p.add_argument("--tier", choices=VERIFY_TIERS, help="full, or sequences (skips poset suites)")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if hasattr(args, "run"):
            return args.run(args)
        return _run_objects(args.handler, args)
    except FishburnError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
