"""Command line entry point: ``lapcert scan|encode|decode|spectrum``.

Exit status of ``scan`` is 0 with no violations, 1 with at least one
violation and 2 on fatal input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import LapcertError
from .families import FAMILIES
from .harness import ScanConfig, load_sources, report_render, scan
from .io import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .oracles import OracleCaps
from .spectral import laplacian_spectrum


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def _cmd_scan(args: argparse.Namespace) -> int:
    config = ScanConfig(
        sources=tuple(args.input),
        subset_samples=args.samples,
        seed=args.seed,
        oracle_caps=OracleCaps.parse(args.caps),
        tolerance=args.tolerance,
        forwarding=not args.no_forwarding,
        theta_scale=args.theta_scale,
        workers=args.workers,
    )
    report = scan(config)
    data = report_render(report, args.format)
    if args.out and args.out != "-":
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
    s = report.summary
    print(f"{s['graphs']} graphs, {s['violations']} violations", file=sys.stderr)
    return 1 if s["violations"] else 0


def _cmd_encode(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_text(args.input))
    print(write_graph6(g, header=args.header))
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    blocks = []
    for line in _read_text(args.input).splitlines():
        if line.strip():
            blocks.append(write_edge_list(parse_graph6(line, strict=args.strict)))
    sys.stdout.write("\n".join(blocks))
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    source = args.input
    if Path(source).exists() or source.partition(":")[0] in FAMILIES:
        graphs = load_sources([source])
    else:
        graphs = [(source, parse_graph6(source))]
    for gid, g in graphs:
        spec = laplacian_spectrum(g)
        # values within solver tolerance of zero print as 0
        values = [0.0 if abs(v) <= spec.tol else v for v in spec.values]
        print(gid + ": " + " ".join(f"{v:.12g}" for v in values))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lapcert", description="Laplacian eigenvalue certificates for graph invariants")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", help="evaluate certificates against exact oracles over a corpus")
    p.add_argument("--input", action="append", required=True, help="graph6 file, edge-list file or family spec (repeatable)")
    p.add_argument("--samples", type=int, default=200, help="random subset samples per graph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--caps", default="", help="oracle caps, e.g. alpha=64,chi=32,subsets=22,forwarding=7")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default="-")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--no-forwarding", action="store_true", help="skip forwarding-index oracles")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: $LAPCERT_WORKERS or 1)")
    p.add_argument("--theta-scale", type=float, default=1.0, help=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("encode", help="edge list -> graph6")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--header", action="store_true", help="prefix the >>graph6<< header")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="graph6 lines -> edge lists")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--strict", action="store_true", help="reject nonzero padding bits")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("spectrum", help="print Laplacian eigenvalues")
    p.add_argument("input", help="graph6 string, graph6/edge-list file or family spec")
    p.set_defaults(func=_cmd_spectrum)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LapcertError, OSError) as exc:
        print(f"lapcert: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
