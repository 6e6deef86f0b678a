"""Command-line front end.

Subcommands: ``certify`` (curvature verdict for a defining-graph
file), ``link`` (DOT or JSON export of the link), ``loops`` (short
embedded loops), ``orient`` (search for a pattern-free orientation),
``pieces`` (small-cancellation piece table) and ``verify-lemmas``
(the exhaustive verification batteries).

Exit status 0 means the command ran (an Inconclusive verdict is not a
failure); nonzero means a parse error, an internal inconsistency, or a
failed verification battery.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import batteries
from .complex_link import build_complex, build_link
from .curvature import A2, B2, certify
from .cycles import enumerate_short_loops
from .errors import InternalInconsistencyError
from .forbidden import search_orientation
from .gamma_io import ParseError, load_gamma
from .presentations import UnorientedEdgeError, build_triangular
from .smallcancel import compute_pieces

_SCHEMES = {"auto": "auto", "a2": A2, "b2": B2}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artinlink",
        description=(
            "Rewrite Artin presentations into triangular form, build the "
            "link of the presentation complex, and certify non-positive "
            "curvature with exact arithmetic."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    certify_p = sub.add_parser("certify", help="run the curvature certificate")
    certify_p.add_argument("input", help="defining-graph file (text or .json)")
    certify_p.add_argument(
        "--scheme",
        choices=sorted(_SCHEMES),
        default="auto",
        help="force a metric scheme instead of auto-selection",
    )
    certify_p.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )

    link_p = sub.add_parser("link", help="export the link of the 0-cell")
    link_p.add_argument("input")
    link_p.add_argument(
        "--format", choices=("dot", "json", "text"), default="dot"
    )

    loops_p = sub.add_parser("loops", help="enumerate short embedded loops")
    loops_p.add_argument("input")
    loops_p.add_argument("--max", type=int, default=6, help="maximum loop length")
    loops_p.add_argument("--format", choices=("text", "json"), default="text")

    orient_p = sub.add_parser(
        "orient", help="search for a pattern-free orientation"
    )
    orient_p.add_argument("input")
    orient_p.add_argument("--format", choices=("text", "json"), default="text")

    pieces_p = sub.add_parser("pieces", help="small-cancellation piece table")
    pieces_p.add_argument("input")
    pieces_p.add_argument("--format", choices=("text", "json"), default="text")

    lemmas_p = sub.add_parser(
        "verify-lemmas", help="run the exhaustive verification batteries"
    )
    lemmas_p.add_argument(
        "--max-label", type=int, default=5, help="largest triangle label to sweep"
    )
    lemmas_p.add_argument(
        "--max-vertices",
        type=int,
        default=4,
        help="graph size for the pattern oracle sweep",
    )
    lemmas_p.add_argument(
        "--tietze-max", type=int, default=50, help="largest two-generator label"
    )
    lemmas_p.add_argument(
        "--seed", type=int, default=None, help="also run seeded random spot checks"
    )
    lemmas_p.add_argument(
        "--processes", type=int, default=None, help="parallel workers for the sweep"
    )
    return parser


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_certify(args) -> int:
    gamma = load_gamma(args.input)
    report = certify(gamma, scheme=_SCHEMES[args.scheme])
    if args.format == "json":
        _emit_json(report.to_json_dict())
    else:
        sys.stdout.write(report.to_text())
    return 0


def _link_json_dict(link) -> dict:
    return {
        "vertices": [
            {
                "name": v.bar_name,
                "generator": v.gen,
                "end": v.end,
                "level": v.level,
                "special": v.special,
            }
            for v in link.vertices
        ],
        "edges": [
            {
                "a": e.a.bar_name,
                "b": e.b.bar_name,
                "kind": e.kind,
                "piece": e.piece,
                "cell": e.cell,
                "corner": e.corner,
            }
            for e in link.edges
        ],
    }


def _cmd_link(args) -> int:
    gamma = load_gamma(args.input)
    pres, _ = build_triangular(gamma)
    link = build_link(build_complex(pres))
    if args.format == "dot":
        sys.stdout.write(link.to_dot())
    elif args.format == "json":
        _emit_json(_link_json_dict(link))
    else:
        print(f"{len(link.vertices)} vertices, {len(link.edges)} edges")
        for e in link.edges:
            print(f"{e.a.bar_name} -- {e.b.bar_name}  [{e.kind}, piece {e.piece}]")
    return 0


def _cmd_loops(args) -> int:
    gamma = load_gamma(args.input)
    pres, _ = build_triangular(gamma)
    link = build_link(build_complex(pres))
    loops = enumerate_short_loops(link, args.max)
    if args.format == "json":
        _emit_json([[v.bar_name for v in lp.vertices] for lp in loops])
    else:
        if not loops:
            print(f"no embedded loops of length <= {args.max}")
        for lp in loops:
            print(lp)
    return 0


def _cmd_orient(args) -> int:
    gamma = load_gamma(args.input)
    assignment = search_orientation(gamma)
    if args.format == "json":
        _emit_json(None if assignment is None else assignment.to_json_dict())
    elif assignment is None:
        print("no pattern-free orientation exists")
    elif not assignment.directions:
        print("graph is already fully oriented")
    else:
        for (u, v), d in assignment.items():
            arrow = f"{u}->{v}" if d == "forward" else f"{v}->{u}"
            print(f"edge {u} {v}: {arrow}")
    return 0


def _cmd_pieces(args) -> int:
    gamma = load_gamma(args.input)
    pres, _ = build_triangular(gamma)
    table = compute_pieces(pres)
    if args.format == "json":
        _emit_json(
            {
                "max_piece_len": table.max_piece_len,
                "pieces": [str(w) for w in table.pieces],
                "decompositions": {
                    str(r): n for r, n in sorted(table.decompositions.items())
                },
            }
        )
    else:
        sys.stdout.write(table.to_text())
    return 0


def _cmd_verify_lemmas(args) -> int:
    results = batteries.run_all(
        max_label=args.max_label,
        max_vertices=args.max_vertices,
        tietze_max=args.tietze_max,
        seed=args.seed,
        processes=args.processes,
    )
    for r in results:
        print(r.summary())
        for f in r.failures[:20]:
            print(f"  failed: {f}")
    if all(r.ok for r in results):
        print("all batteries passed")
        return 0
    return 1


_COMMANDS = {
    "certify": _cmd_certify,
    "link": _cmd_link,
    "loops": _cmd_loops,
    "orient": _cmd_orient,
    "pieces": _cmd_pieces,
    "verify-lemmas": _cmd_verify_lemmas,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except UnorientedEdgeError as exc:
        print(
            f"error: {exc}; direct the edges in the file or run "
            f"'artinlink orient' to search for an orientation",
            file=sys.stderr,
        )
        return 1
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
