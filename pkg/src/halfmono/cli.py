"""Command-line interface.

Exit codes: 0 success, 1 invalid instance or input, 2 violated internal
law (a result that would contradict the certified bound or claims),
3 exhaustive-search cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .coloring import coloring_from_regions
from .dividing import assemble_dividing_system, decompose_regions
from .errors import (
    BadParameter,
    CapExceeded,
    HalfmonoError,
    InternalInvariantError,
)
from .instance_io import (
    InstanceFile,
    RenderSpec,
    build,
    generate_instance,
    parse_instance_text,
    render_svg,
    serialize_instance,
)
from .medial import build_medial_graph
from .oracle import chi_f_bruteforce
from .plane_graph import PlaneGraph, compute_bipartition, validate_even_polygonal
from .search import (
    DEFAULT_FACE_CAP,
    SearchResult,
    exact_chi_f,
    sweep_dividing_systems,
)
from .independence import alpha_via_konig, maximum_matching

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VIOLATION = 2
EXIT_CAP = 3


def exit_code_for_exception(exc: BaseException) -> int:
    if isinstance(exc, CapExceeded):
        return EXIT_CAP
    if isinstance(exc, InternalInvariantError):
        return EXIT_VIOLATION
    return EXIT_INVALID


def _read_instance(path: str) -> InstanceFile:
    return parse_instance_text(Path(path).read_text(encoding="utf-8"))


def _load_valid(path: str) -> tuple[InstanceFile, PlaneGraph]:
    inst = _read_instance(path)
    g = build(inst)
    report = validate_even_polygonal(g)
    if not report.ok:
        raise HalfmonoError(f"{inst.name}: invalid instance\n{report}")
    return inst, g


def _result_payload(inst: InstanceFile, g: PlaneGraph, res: SearchResult) -> dict:
    m = build_medial_graph(g)
    r = decompose_regions(m, assemble_dividing_system(m, res.witness_parities))
    return {
        "name": inst.name,
        "chiF": res.chi_f,
        "alpha": res.alpha,
        "boundSatisfied": res.bound_satisfied,
        "witnessParities": "".join(str(b) for b in res.witness_parities),
        "regions": [list(region) for region in r.regions],
        "cycles": [list(c.vertices) for c in r.cycles],
        "audit": {
            "claim1": res.audit.claim1_ok,
            "claim2": res.audit.claim2_ok,
            "claim3": res.audit.claim3_ok,
            "case": res.audit.case,
        },
        "systemsExplored": res.systems_explored,
    }


def cmd_validate(args: argparse.Namespace) -> int:
    inst = _read_instance(args.file)
    g = build(inst)
    report = validate_even_polygonal(g)
    print(f"{inst.name}: {report}")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_chif(args: argparse.Namespace) -> int:
    inst, g = _load_valid(args.file)
    res = exact_chi_f(g, face_cap=args.face_cap, jobs=args.jobs)
    if args.json:
        payload = _result_payload(inst, g, res)
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK
    print(f"name: {inst.name}")
    print(f"chiF = {res.chi_f}")
    print(f"alpha = {res.alpha}")
    print(
        f"bound 2*chiF <= 3*alpha: "
        f"{2 * res.chi_f} <= {3 * res.alpha} "
        f"({'tight' if 2 * res.chi_f == 3 * res.alpha else 'strict'})"
    )
    print(f"systems explored: {res.systems_explored}")
    if args.witness:
        payload = _result_payload(inst, g, res)
        print(f"witness parities: {payload['witnessParities']}")
        for i, region in enumerate(payload["regions"]):
            print(f"region {i} (color {i}): vertices {region}")
        for i, cyc in enumerate(payload["cycles"]):
            print(f"curve {i}: midpoints of edges {cyc}")
    return EXIT_OK


def cmd_alpha(args: argparse.Namespace) -> int:
    inst, g = _load_valid(args.file)
    b = compute_bipartition(g)
    matching = maximum_matching(g, b)
    print(f"name: {inst.name}")
    print(f"alpha = {alpha_via_konig(g, b)}")
    print(f"matching size = {matching.size}")
    print(f"cover = {list(matching.cover)}")
    return EXIT_OK


def _check_one(path: Path, face_cap: int, sweep_cap: int) -> str:
    inst, g = _load_valid(str(path))
    # exact_chi_f certifies the bound and audits the claims, raising the
    # exit-code-2 family on any violation
    res = exact_chi_f(g, face_cap=face_cap)
    if g.num_faces <= sweep_cap:
        sweep = sweep_dividing_systems(g, face_cap=sweep_cap, check_colorings=True)
        sweep_note = f"sweep={sweep.systems_explored} systems ok"
    else:
        sweep_note = f"sweep=skipped ({g.num_faces} faces > {sweep_cap})"
    return (
        f"{path.name}: chiF={res.chi_f} alpha={res.alpha} "
        f"bound=ok claims=ok case={res.audit.case} {sweep_note}"
    )


def cmd_check(args: argparse.Namespace) -> int:
    paths: list[Path] = []
    for target in args.paths:
        p = Path(target)
        if p.is_dir():
            paths.extend(sorted(p.glob("*.hmg")))
        else:
            paths.append(p)
    results: dict[str, tuple[str | None, BaseException | None]] = {}

    def run(p: Path) -> tuple[str | None, BaseException | None]:
        try:
            return _check_one(p, args.face_cap, args.sweep_cap), None
        except Exception as exc:  # report per file, keep batch going
            return None, exc

    if args.jobs > 1 and len(paths) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            for p, outcome in zip(paths, pool.map(run, paths)):
                results[str(p)] = outcome
    else:
        for p in paths:
            results[str(p)] = run(p)

    worst = EXIT_OK
    for key in sorted(results):
        line, exc = results[key]
        if line is not None:
            print(line)
        else:
            assert exc is not None
            print(f"{Path(key).name}: ERROR {exc}", file=sys.stderr)
            code = exit_code_for_exception(exc)
            # violations dominate, then invalid input, then caps
            rank = {EXIT_VIOLATION: 3, EXIT_INVALID: 2, EXIT_CAP: 1, EXIT_OK: 0}
            if rank[code] > rank[worst]:
                worst = code
    return worst


def cmd_oracle(args: argparse.Namespace) -> int:
    inst, g = _load_valid(args.file)
    res = chi_f_bruteforce(g, vertex_cap=args.vertex_cap)
    print(f"name: {inst.name}")
    print(f"chiF = {res.chi_f} (brute force)")
    print(f"partitions scanned: {res.partitions_scanned}")
    print(f"witness colors: {list(res.witness.colors)}")
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    inst, g = _load_valid(args.file)
    parities = None
    if args.parities is not None:
        if any(ch not in "01" for ch in args.parities):
            raise BadParameter("parities must be a string of 0s and 1s")
        parities = tuple(int(ch) for ch in args.parities)
    coloring = None
    if args.color:
        res = exact_chi_f(g, face_cap=args.face_cap)
        if parities is None:
            coloring = res.witness_coloring
        else:
            m = build_medial_graph(g)
            r = decompose_regions(m, assemble_dividing_system(m, parities))
            coloring = coloring_from_regions(r)
    svg = render_svg(RenderSpec(graph=g, parities=parities, coloring=coloring))
    Path(args.out).write_text(svg, encoding="utf-8")
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    params: list[int] = []
    for token in args.params:
        for piece in token.lower().split("x"):
            if not piece.lstrip("-").isdigit():
                raise BadParameter(f"parameter {token!r} is not an integer")
            params.append(int(piece))
    inst = generate_instance(args.family, params)
    text = serialize_instance(inst)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfmono",
        description="Exact solver and verifier for half-monochromatic "
        "colorings of plane graphs with even polygonal faces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that every face is an even cycle")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("chif", help="exact maximum color count")
    p.add_argument("file")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--face-cap", type=int, default=DEFAULT_FACE_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_chif)

    p = sub.add_parser("alpha", help="independence number with certificate")
    p.add_argument("file")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser(
        "check", help="bound, claims audit and exhaustive region/tree laws"
    )
    p.add_argument("paths", nargs="+", metavar="FILE_OR_DIR")
    p.add_argument("--face-cap", type=int, default=DEFAULT_FACE_CAP)
    p.add_argument("--sweep-cap", type=int, default=16)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="brute-force maximum over all partitions")
    p.add_argument("file")
    p.add_argument("--vertex-cap", type=int, default=12)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="draw the instance as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--parities", help="bit string selecting a dividing system")
    p.add_argument("--color", action="store_true", help="fill vertices by coloring")
    p.add_argument("--face-cap", type=int, default=DEFAULT_FACE_CAP)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("gen", help="write a corpus instance")
    p.add_argument("family", choices=["cycle", "grid", "prism"])
    p.add_argument("params", nargs="+", help="cycle LEN | grid RxC | prism LEN")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except HalfmonoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for_exception(exc)


if __name__ == "__main__":
    sys.exit(main())
