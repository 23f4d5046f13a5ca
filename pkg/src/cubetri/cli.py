"""Command-line surface.

    cubetri build cube --dim D [--l L] [--m M] [--seed NAME]
                       [--coloring balanced|random] [--rng-seed N]
                       [--samples S] [--out PATH]
    cubetri verify PATH [--face-to-face] [--volume-only]
    cubetri report table --max-dim D [--out CSV]
    cubetri expect --q-dim N --m M --samples S --rng-seed N
    cubetri seeds show NAME [--out PATH]
    cubetri oracle min-weighted --config NAME [--objective weighted|cardinality]

Exit code 0 iff every requested validation passed.
"""

from __future__ import annotations

import argparse
import re
import sys

from .cayley import mixed_to_json
from .coloring import exact_expected_size, monte_carlo_size, size_bound
from .complexes import (
    Triangulation,
    triangulation_from_json,
    triangulation_to_json,
    validate_dissection,
    validate_face_to_face,
    weighted_size,
)
from .geometry import cube_config, product_config, simplex_config
from .oracle import SearchProblem, min_weighted_size
from .pipeline import PipelineSpec, build_cube_recursive, report_table
from .seeds import (
    cayley_seed,
    minimal_cube,
    seed_i3d1,
    seed_i3d2,
    square_family,
    unimodular_cube,
)


def _cmd_build(args) -> int:
    spec = PipelineSpec(
        dim=args.dim,
        l=args.l,
        m=args.m,
        seed=args.seed,
        coloring=args.coloring,
        rng_seed=args.rng_seed,
        samples=args.samples,
        out=args.out,
        face_check_max_dim=args.face_check_max_dim,
    )
    tri, report = build_cube_recursive(spec)
    for st in report.steps:
        f2f = "-" if st.face_to_face is None else str(st.face_to_face)
        print(
            f"step {st.dim_from}->{st.dim_to}: seed={st.seed_used} m={st.m_used} "
            f"size={st.size} bound={float(st.bound):.2f} bound_ok={st.bound_ok} "
            f"volume_ok={st.volume_ok} face_to_face={f2f} "
            f"dissection={st.dissection_certified}"
        )
    print(f"final size for dimension {spec.dim}: {report.sizes[spec.dim]}")
    if args.out:
        print(f"wrote {args.out}")
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    with open(args.path) as fh:
        tri = triangulation_from_json(fh.read())
    report = validate_dissection(tri, pairwise=not args.volume_only)
    mode = "volume census" if args.volume_only else "dissection"
    print(
        f"{mode}: {report.is_dissection} "
        f"(volume {report.volume_total}, {len(report.violations)} violations)"
    )
    ok = report.is_dissection
    if args.face_to_face:
        f2f = validate_face_to_face(tri)
        print(f"face-to-face: {f2f.is_face_to_face} ({len(f2f.violations)} violations)")
        ok = ok and f2f.is_face_to_face
    for v in report.violations[:10]:
        print(f"  {v}")
    return 0 if ok else 1


def _cmd_report(args) -> int:
    csv_text = report_table(args.max_dim)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv_text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(csv_text)
    return 0


def _cmd_expect(args) -> int:
    t_q = (
        minimal_cube(args.q_dim)
        if args.q_dim <= 3
        else build_cube_recursive(PipelineSpec(dim=args.q_dim))[0]
    )
    m = args.m
    t0 = cayley_seed("i3d2" if m >= 3 else "i3d1") if m >= 2 else None
    if t0 is None:
        cfg = product_config(cube_config(3), simplex_config(0))
        t0 = Triangulation(cfg, minimal_cube(3).simplices)
    n = args.q_dim + 1
    t0_ws = weighted_size(t0)
    bound = size_bound(t_q.size, t0_ws, n, m, 3)
    nv = len(t_q.config.points)
    exact = ""
    if m**nv <= 2**20:
        exact = str(exact_expected_size(t_q, t0, m, method="enumerate"))
    stats = monte_carlo_size(t_q, t0, m, args.samples, args.rng_seed)
    print("d,m,strategy,seed,size,bound,expected_exact_or_blank")
    print(
        f"{args.q_dim + 3},{m},random,{args.rng_seed},{stats.minimum},"
        f"{float(bound):.3f},{exact}"
    )
    print(
        f"# samples={stats.samples} mean={float(stats.mean):.3f} "
        f"min={stats.minimum} max={stats.maximum}"
    )
    return 0


def _cmd_seeds_show(args) -> int:
    name = args.name
    msq = re.fullmatch(r"square_family\((\d+)\)|square:(\d+)", name)
    mmin = re.fullmatch(r"minimal_cube\((\d+)\)|minimal:(\d+)", name)
    muni = re.fullmatch(r"unimodular_cube\((\d+)\)|unimodular:(\d+)", name)
    if name == "i3d1":
        text = mixed_to_json(seed_i3d1())
    elif name == "i3d2":
        text = mixed_to_json(seed_i3d2())
    elif msq:
        text = mixed_to_json(square_family(int(msq.group(1) or msq.group(2))))
    elif mmin:
        text = triangulation_to_json(minimal_cube(int(mmin.group(1) or mmin.group(2))))
    elif muni:
        text = triangulation_to_json(
            unimodular_cube(int(muni.group(1) or muni.group(2)))
        )
    else:
        print(f"unknown seed {name!r}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def _parse_config_name(name: str):
    m = re.fullmatch(r"[iI](\d+)(?:[dD](\d+))?", name)
    if not m:
        raise ValueError(f"unknown configuration name {name!r} (try i2d1, i3)")
    l = int(m.group(1))
    if m.group(2) is None:
        return cube_config(l)
    return product_config(cube_config(l), simplex_config(int(m.group(2))))


def _cmd_oracle(args) -> int:
    cfg = _parse_config_name(args.config)
    problem = SearchProblem(cfg, objective=args.objective)
    value, witness = min_weighted_size(problem)
    print(f"minimum {args.objective} over {args.config}: {value}")
    text = triangulation_to_json(witness)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="cubetri", description=__doc__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_build = sub.add_parser("build", help="build triangulations")
    sub_build = p_build.add_subparsers(dest="what", required=True)
    p_cube = sub_build.add_parser("cube", help="triangulate a cube recursively")
    p_cube.add_argument("--dim", type=int, required=True)
    p_cube.add_argument("--l", type=int, default=3)
    p_cube.add_argument("--m", type=int, default=3)
    p_cube.add_argument("--seed", default="i3d2")
    p_cube.add_argument("--coloring", choices=["balanced", "random"], default="balanced")
    p_cube.add_argument("--rng-seed", type=int, default=0)
    p_cube.add_argument("--samples", type=int, default=1)
    p_cube.add_argument("--out")
    p_cube.add_argument("--face-check-max-dim", type=int, default=6)
    p_cube.set_defaults(func=_cmd_build)

    p_verify = sub.add_parser("verify", help="validate a triangulation file")
    p_verify.add_argument("path")
    p_verify.add_argument("--face-to-face", action="store_true")
    p_verify.add_argument(
        "--volume-only",
        action="store_true",
        help="skip the quadratic pair scan (for very large files)",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_report = sub.add_parser("report", help="reporting tables")
    sub_report = p_report.add_subparsers(dest="what", required=True)
    p_table = sub_report.add_parser("table", help="per-dimension CSV table")
    p_table.add_argument("--max-dim", type=int, required=True)
    p_table.add_argument("--out")
    p_table.set_defaults(func=_cmd_report)

    p_expect = sub.add_parser("expect", help="expected-size statistics")
    p_expect.add_argument("--q-dim", type=int, required=True)
    p_expect.add_argument("--m", type=int, required=True)
    p_expect.add_argument("--samples", type=int, default=16)
    p_expect.add_argument("--rng-seed", type=int, default=0)
    p_expect.set_defaults(func=_cmd_expect)

    p_seeds = sub.add_parser("seeds", help="seed catalog")
    sub_seeds = p_seeds.add_subparsers(dest="what", required=True)
    p_show = sub_seeds.add_parser("show", help="dump a catalog object as JSON")
    p_show.add_argument("name")
    p_show.add_argument("--out")
    p_show.set_defaults(func=_cmd_seeds_show)

    p_oracle = sub.add_parser("oracle", help="exhaustive minimum search")
    sub_oracle = p_oracle.add_subparsers(dest="what", required=True)
    p_min = sub_oracle.add_parser("min-weighted", help="minimum weighted size")
    p_min.add_argument("--config", required=True)
    p_min.add_argument(
        "--objective", choices=["weighted", "cardinality"], default="weighted"
    )
    p_min.add_argument("--out")
    p_min.set_defaults(func=_cmd_oracle)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
