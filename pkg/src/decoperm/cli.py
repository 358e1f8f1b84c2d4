"""Command-line front end: ``decoperm <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import permutation as P
from .bijections import BIJECTION_IDS, invert, permutation_for_code, phi
from .errors import DecoError
from .harness import check_uniformity, run_all
from .polyomino import (
    DecoPolyomino,
    build_from_code,
    code_of,
    enumerate_codes,
    format_cols,
    is_parallelogram,
    parse_code,
    parse_cols,
    random_codes,
    render_ascii,
    statistics,
)


def _bij(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid bijection {text!r}") from None
    if k not in BIJECTION_IDS:
        raise argparse.ArgumentTypeError(f"invalid bijection {text!r}; expected 1..6")
    return k


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid size {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"size must be positive, got {text!r}")
    return n


def _polyomino_from(args) -> DecoPolyomino:
    if args.code is not None:
        return build_from_code(parse_code(args.code, args.code_order))
    return parse_cols(args.cols)


def _describe(d: DecoPolyomino, order: str) -> list[str]:
    s = statistics(d)
    return [
        f"code: {code_of(d).format(order)}",
        format_cols(d),
        " ".join(f"{k}={v}" for k, v in s.as_dict().items()),
        f"parallelogram={str(is_parallelogram(d)).lower()}",
    ]


def _perm_stats(pi: P.Permutation) -> list[str]:
    prof = P.run_profile(pi)
    cycles = P.standard_cycle_form(pi)

    def fmt(seq):
        return " ".join(map(str, seq))

    return [
        f"perm: {pi}",
        f"n={len(pi)}",
        f"riv: ({','.join(map(str, P.right_inversion_vector(pi)))})",
        f"inv={P.inversion_count(pi)}",
        f"cycles: {cycles}",
        f"inv_c={P.carlitz_inversions(pi)}",
        f"descents: {fmt(prof.descents)}",
        f"ascents: {fmt(prof.ascents)}",
        "ascending_runs: " + " | ".join(fmt(r) for r in prof.ascending_runs),
        "descending_runs: " + " | ".join(fmt(r) for r in prof.descending_runs),
        f"rtl_minima_positions: {fmt(prof.rtl_minima_positions)}",
        f"rtl_minima_values: {fmt(prof.rtl_minima_values)}",
        f"avoids_321={str(P.avoids_321(pi)).lower()}",
    ]


def cmd_map(args) -> list[str]:
    pi = P.parse_permutation(args.perm)
    d = phi(args.bij, pi)
    lines = _describe(d, args.code_order)
    if args.art:
        lines.append(render_ascii(d))
    return lines


def cmd_unmap(args) -> list[str]:
    return [str(invert(args.bij, _polyomino_from(args)))]


def cmd_stats(args) -> list[str]:
    if args.perm is not None:
        return _perm_stats(P.parse_permutation(args.perm))
    return _describe(_polyomino_from(args), args.code_order)


def cmd_enumerate(args) -> list[str]:
    out = []
    for code in enumerate_codes(args.n):
        d = build_from_code(code)
        s = statistics(d)
        rec = {
            "code": code.format(args.code_order),
            "cols": format_cols(d),
            "height": s.height,
            "width": s.width,
            "area": s.area,
            "level": s.last_column_level,
            "parallelogram": is_parallelogram(d),
        }
        if args.bij is not None:
            rec["perm"] = str(permutation_for_code(args.bij, code))
        out.append(json.dumps(rec))
    return out


def cmd_render(args) -> list[str]:
    return [render_ascii(_polyomino_from(args))]


def cmd_random(args) -> list[str]:
    out = []
    for code in random_codes(args.n, args.seed, args.count):
        line = code.format(args.code_order)
        if args.bij is not None:
            line += "\t" + str(permutation_for_code(args.bij, code))
        out.append(line)
    return out


def cmd_verify(args) -> tuple[list[str], bool]:
    ids = (args.bij,) if args.bij is not None else BIJECTION_IDS
    sizes = [args.n] if args.only else range(1, args.n + 1)
    reports = []
    for n in sizes:
        reports += run_all(n, ids, theorems=args.theorems, uniformity=False)
    if args.uniformity:
        reports.append(check_uniformity(min(args.n, 6), args.samples, args.seed))
    lines = [r.to_record() if args.json else r.to_text() for r in reports]
    ok = all(r.passed for r in reports)
    if not args.json:
        lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
    return lines, ok


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decoperm",
        description="Deco polyominoes and six bijections with permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def order_flag(p):
        p.add_argument("--code-order", choices=("display", "low"), default="display",
                       help="code order: display (a_n..a_1, default) or low (a_1..a_n)")

    def shape_flags(p, required=True):
        g = p.add_mutually_exclusive_group(required=required)
        g.add_argument("--code", help='construction code, e.g. "(5,0,2,0,4,2,0,0,0)"')
        g.add_argument("--cols", help='column spans, e.g. "0:2,0:2"')
        return g

    p = sub.add_parser("map", help="image of a permutation")
    p.add_argument("--bij", type=_bij, required=True)
    p.add_argument("--perm", required=True)
    p.add_argument("--art", action="store_true", help="also print ASCII art")
    order_flag(p)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("unmap", help="preimage of a polyomino")
    p.add_argument("--bij", type=_bij, required=True)
    shape_flags(p)
    order_flag(p)
    p.set_defaults(func=cmd_unmap)

    p = sub.add_parser("stats", help="statistics of a permutation or polyomino")
    g = shape_flags(p)
    g.add_argument("--perm")
    order_flag(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("enumerate", help="stream every polyomino of height n")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--bij", type=_bij)
    order_flag(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("render", help="ASCII art of a polyomino")
    shape_flags(p)
    order_flag(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("random", help="uniformly sampled codes")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--bij", type=_bij)
    order_flag(p)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("verify", help="run the exhaustive checks for sizes 1..n")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--bij", type=_bij)
    p.add_argument("--only", action="store_true", help="check size n only")
    p.add_argument("--theorems", action="store_true")
    p.add_argument("--uniformity", action="store_true")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--json", action="store_true", help="one JSON record per report")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except DecoError as exc:
        print(f"decoperm {args.command}: error: {exc}", file=sys.stderr)
        return 2
    ok = True
    if isinstance(result, tuple):
        result, ok = result
    for line in result:
        print(line)
    return 0 if ok else 1


def run(argv) -> int:
    """Like :func:`main` but returns argparse's exit status instead of raising."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
