"""Command-line front end.

Exit codes: 0 success/verified, 1 verification failure, 2 usage error.
Verification grids fan out over a process pool sized by the QUIVERKIT_JOBS
environment variable (default: one worker per CPU).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import verify as checks
from .arcs import TaggedArc, enumerate_m_arcs
from .components import connected_components, find_isomorphism
from .core import build_gamma_d, build_gamma_d_m, build_za_quotient
from .export import (
    ParseError,
    document_text,
    export_arcs_svg,
    export_dot,
    export_json,
    load_quiver,
    save_quiver,
)
from .paths import power
from .topology import classify_surface, mesh_complex

USAGE_ERROR = 2


def _worker_count() -> int:
    env = os.environ.get("QUIVERKIT_JOBS", "").strip()
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise SystemExit(f"QUIVERKIT_JOBS must be an integer, got {env!r}")
        return max(1, jobs)
    return os.cpu_count() or 1


def _run_cells(fn, cells):
    """Evaluate fn over independent grid cells, keeping the cell order."""
    jobs = _worker_count()
    if jobs <= 1 or len(cells) <= 1:
        return [fn(*cell) for cell in cells]
    with ProcessPoolExecutor(max_workers=min(jobs, len(cells))) as pool:
        return list(pool.map(fn, *zip(*cells)))


def _cmd_build(args: argparse.Namespace) -> int:
    if args.family == "d":
        if args.n is None:
            raise SystemExit("build --family d requires --n")
        q = build_gamma_d(args.n)
    elif args.family == "dm":
        if args.n is None or args.m is None:
            raise SystemExit("build --family dm requires --n and --m")
        q = build_gamma_d_m(args.n, args.m)
    else:
        if args.rows is None or args.period is None:
            raise SystemExit("build --family za requires --rows and --period")
        q = build_za_quotient(args.rows, args.period)
    save_quiver(q, args.out)
    print(f"wrote {args.out}: {q!r}")
    if args.dot:
        Path(args.dot).write_text(export_dot(q, show_tau=not args.no_tau), encoding="utf-8")
        print(f"wrote {args.dot}")
    return 0


def _cmd_power(args: argparse.Namespace) -> int:
    q = load_quiver(args.infile)
    result = power(q, args.m, restricted=args.restricted)
    save_quiver(result, args.out)
    print(f"wrote {args.out}: {result!r}")
    return 0


def _cmd_components(args: argparse.Namespace) -> int:
    q = load_quiver(args.infile)
    comps = connected_components(q)
    if args.json:
        payload = [export_json(c) for c in comps]
        print(document_text({"components": payload}), end="")
    else:
        print(f"{len(comps)} component(s)")
        for idx, comp in enumerate(comps):
            first = comp.sorted_vertices()[0]
            print(f"  [{idx}] {len(comp.vertices)} vertices, {len(comp.arrows)} arrows, smallest vertex {first}")
    return 0


def _cmd_iso(args: argparse.Namespace) -> int:
    a = load_quiver(args.a)
    b = load_quiver(args.b)
    if len(a.vertices) != len(b.vertices):
        print(f"not isomorphic ({len(a.vertices)} vs {len(b.vertices)} vertices)")
        return 1
    witness = find_isomorphism(a, b)
    if witness is None:
        print("not isomorphic")
        return 1
    print(f"isomorphic; witness on {len(witness)} vertices")
    for v in sorted(witness.pairs, key=lambda v: v.sort_key()):
        print(f"  {v} -> {witness.pairs[v]}")
    return 0


def _cmd_arcs(args: argparse.Namespace) -> int:
    arcs = enumerate_m_arcs(args.n, args.m)
    print(f"{len(arcs)} tagged {args.m}-arcs in the punctured {args.n * args.m - args.m + 1}-gon")
    for arc in arcs:
        print(f"  {arc}")
    if args.svg:
        highlight = [TaggedArc.parse(text) for text in args.highlight] if args.highlight else None
        Path(args.svg).write_text(export_arcs_svg(args.n, args.m, highlight), encoding="utf-8")
        print(f"wrote {args.svg}")
    return 0


def _cmd_topology(args: argparse.Namespace) -> int:
    q = load_quiver(args.infile)
    if args.component is not None:
        comps = connected_components(q)
        if not 0 <= args.component < len(comps):
            raise SystemExit(f"component index out of range 0..{len(comps) - 1}")
        q = comps[args.component]
    complex_ = mesh_complex(q)
    report = classify_surface(complex_)
    print(
        f"cells: V={len(complex_.vertices)} E={len(complex_.edges)} F={len(complex_.triangles)}"
    )
    print(
        json.dumps(
            {
                "is_surface": report.is_surface,
                "euler_characteristic": report.euler_characteristic,
                "orientable": report.orientable,
                "boundary_components": report.boundary_components,
                "classification": report.classification,
                "offender": None if report.offender is None else str(report.offender),
            },
            indent=2,
            sort_keys=True,
        )
    )
    return 0


def _grid(args: argparse.Namespace) -> list[tuple[int, int]]:
    if args.n is not None or args.m is not None:
        if args.n is None or args.m is None:
            raise SystemExit("provide both --n and --m, or neither")
        return [(args.n, args.m)]
    n_max, m_max = args.grid
    return [(n, m) for n in range(3, n_max + 1) for m in range(1, m_max + 1)]


def _cmd_verify(args: argparse.Namespace) -> int:
    kind = args.check
    if kind == "torus":
        results = [checks.check_torus()]
    elif kind == "remark-1-2":
        if args.n is not None or args.m is not None:
            if args.n is None or args.m is None:
                raise SystemExit("provide both --n and --m, or neither")
            cells = [(args.n, args.m)]
        else:
            n_max, m_max = args.grid
            cells = [(period, m) for m in range(1, m_max + 1) for period in range(5, n_max + 1)]
        results = _run_cells(checks.check_power_restriction, cells)
        results += _run_cells(checks.check_power_stability, cells)
    else:
        fn = {
            "d-component": checks.check_d_component,
            "decomposition": checks.check_decomposition,
            "arc-model": checks.check_arc_model,
            "lemma-3-6": checks.check_sectional_endpoints,
        }[kind]
        results = _run_cells(fn, _grid(args))
    failures = 0
    for result in results:
        print(result.line())
        failures += 0 if result.ok else 1
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverkit",
        description="Build, transform and verify translation quivers and arc models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a quiver and write it as JSON")
    p_build.add_argument("--family", choices=["d", "dm", "za"], required=True)
    p_build.add_argument("--n", type=int)
    p_build.add_argument("--m", type=int)
    p_build.add_argument("--rows", type=int)
    p_build.add_argument("--period", type=int)
    p_build.add_argument("--out", required=True)
    p_build.add_argument("--dot", help="also write a Graphviz rendering here")
    p_build.add_argument("--no-tau", action="store_true", help="omit dashed translation edges from --dot")
    p_build.set_defaults(fn=_cmd_build)

    p_power = sub.add_parser("power", help="take the (restricted) m-th power of a quiver file")
    p_power.add_argument("--in", dest="infile", required=True)
    p_power.add_argument("--m", type=int, required=True)
    p_power.add_argument("--restricted", action="store_true")
    p_power.add_argument("--out", required=True)
    p_power.set_defaults(fn=_cmd_power)

    p_comp = sub.add_parser("components", help="list connected components of a quiver file")
    p_comp.add_argument("--in", dest="infile", required=True)
    p_comp.add_argument("--json", action="store_true")
    p_comp.set_defaults(fn=_cmd_components)

    p_iso = sub.add_parser("iso", help="decide translation-quiver isomorphism of two files")
    p_iso.add_argument("--a", required=True)
    p_iso.add_argument("--b", required=True)
    p_iso.set_defaults(fn=_cmd_iso)

    p_arcs = sub.add_parser("arcs", help="list tagged m-arcs, optionally render SVG")
    p_arcs.add_argument("--n", type=int, required=True)
    p_arcs.add_argument("--m", type=int, required=True)
    p_arcs.add_argument("--svg")
    p_arcs.add_argument("--highlight", nargs="*", help="arc specs like 'D(6,2)' or 'D(6,6)-'")
    p_arcs.set_defaults(fn=_cmd_arcs)

    p_topo = sub.add_parser("topology", help="mesh complex and surface type of a quiver file")
    p_topo.add_argument("--in", dest="infile", required=True)
    p_topo.add_argument("--component", type=int)
    p_topo.set_defaults(fn=_cmd_topology)

    p_verify = sub.add_parser("verify", help="re-run one of the structural checks")
    p_verify.add_argument(
        "check",
        choices=["d-component", "decomposition", "arc-model", "remark-1-2", "lemma-3-6", "torus"],
    )
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--m", type=int)
    p_verify.add_argument(
        "--grid",
        nargs=2,
        type=int,
        metavar=("N_MAX", "M_MAX"),
        default=(6, 4),
        help="run all cells 3<=n<=N_MAX, 1<=m<=M_MAX (periods 5..N_MAX for remark-1-2)",
    )
    p_verify.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalise other codes
        return USAGE_ERROR if exc.code not in (0,) else 0
    try:
        return args.fn(args)
    except SystemExit as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
