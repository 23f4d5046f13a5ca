"""End-to-end cube builder and reporting.

Recursive construction: split the target cube into a low block (default 3
coordinates) times the rest, keep a triangulation of the big factor, and
refine the product through the block seed and a coloring, one step at a
time. Each step multiplies the size by roughly the seed's weighted size
times (n/m + l)^l, which is what drives the asymptotic efficiency.

Validation policy per step (all exact):

* volume census always (batched integer determinants, streamed);
* full pairwise face-to-face up to ``face_check_max_dim`` (default 6) via
  the structural checker;
* above that, a dissection certificate: per-cell regularity certificates,
  per-cell count identities, the volume census, and the inductively
  verified validity of the inputs. The quadratic pair scan is hopeless at
  millions of cells and is deliberately not attempted there.

The balanced coloring is always kept among the sampled candidates, so the
identity lift at the first step (where the big factor is a segment) is
reproduced exactly.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .coloring import (
    Coloring,
    iter_product_cells,
    make_coloring,
    product_size,
    size_bound,
    triangulate_product,
)
from .complexes import Triangulation, efficiency, triangulation_to_json, weighted_size
from .geometry import (
    ProductLabel,
    ambient_normalized_volume,
    as_cube_if_product_of_cubes,
    config_from_label,
    cube_config,
    product_config,
    simplex_config,
)
from .seeds import (
    ASYMPTOTIC_TARGET_2,
    ASYMPTOTIC_TARGET_3,
    cayley_seed,
    hadamard_lower,
    known_constants,
    minimal_cube,
    unimodular_cube,
)
from .staircase import certify_cell_regular, lift_count
from .verification import StructuredChecker, batch_volumes_of, volume_total


@dataclass
class PipelineSpec:
    dim: int
    l: int = 3
    m: int = 3
    seed: str = "i3d2"  # i3d2 | i3d1 | minimal | unimodular
    coloring: str = "balanced"  # balanced | random
    rng_seed: int = 0
    samples: int = 1
    out: str | None = None
    face_check_max_dim: int = 6
    materialize_max_dim: int = 9

    def __post_init__(self):
        if self.dim < 1 or self.l < 1 or self.m < 1 or self.samples < 1:
            raise ValueError("invalid pipeline spec")


@dataclass
class StepReport:
    dim_from: int
    dim_to: int
    n: int
    m_used: int
    seed_used: str
    tq_size: int
    size: int
    t0_weighted: Fraction
    bound: Fraction
    bound_ok: bool
    volume_ok: bool
    face_to_face: bool | None  # None when only the dissection tier ran
    dissection_certified: bool
    coloring_strategy: str
    sample_sizes: list[int] = field(default_factory=list)


@dataclass
class PipelineReport:
    steps: list[StepReport]
    sizes: dict[int, int]
    ok: bool


def _cube_as_point_product(tri: Triangulation) -> Triangulation:
    """Reinterpret a cube triangulation as one of cube(l) x simplex(0);
    the point lists coincide, so indices carry over unchanged."""
    l = tri.config.dim
    cfg = product_config(cube_config(l), simplex_config(0))
    return Triangulation(cfg, tri.simplices)


def _pick_seed(spec: PipelineSpec, n: int) -> tuple[str, int, Triangulation]:
    """Seed triangulation for one step, clamped so that m <= n.

    Should the three-summand seed ever fail its build-time verification,
    the step falls back to the two-summand seed rather than aborting.
    """
    l = spec.l
    if spec.seed == "unimodular":
        return "unimodular", 1, _cube_as_point_product(unimodular_cube(l))
    if spec.seed == "minimal":
        return "minimal", 1, _cube_as_point_product(minimal_cube(l))
    want_m = min(spec.m, 3 if spec.seed == "i3d2" else 2, n)
    if want_m >= 2 and l != 3:
        raise ValueError("seeds i3d1/i3d2 require l == 3")
    if want_m >= 3:
        try:
            return "i3d2", 3, cayley_seed("i3d2")
        except AssertionError:
            want_m = 2
    if want_m == 2:
        return "i3d1", 2, cayley_seed("i3d1")
    return "minimal", 1, _cube_as_point_product(minimal_cube(l))


def _stream_step(t_q, t0, coloring, out_path=None):
    """One product step without materializing: (size, volume, certified,
    zero_volume_count), optionally streaming simplices to a JSON file."""
    out_lab = as_cube_if_product_of_cubes(
        ProductLabel(t0.config.label.left, t_q.config.label)
    )
    out_cfg = config_from_label(out_lab)
    pts = out_cfg.points
    size = 0
    volume = 0
    zeros = 0
    certified = True
    buffer: list[tuple[int, ...]] = []
    fh = open(out_path, "w") if out_path is not None else None
    if fh is not None:
        fh.write(
            '{"dim": %d, "label": "%s", "points": %s, "simplices": [\n'
            % (out_cfg.dim, str(out_cfg.label), json.dumps([list(p) for p in pts]))
        )
    first = True

    def flush(buffer):
        nonlocal volume, zeros, first
        if not buffer:
            return
        v, z = batch_volumes_of(pts, buffer)
        volume += v
        zeros += z
        if fh is not None:
            for s in buffer:
                if not first:
                    fh.write(",\n")
                fh.write(json.dumps(list(s)))
                first = False
        buffer.clear()

    for sigma, t_idx, base_face, rows, cols, cell_simplices in iter_product_cells(
        t_q, t0, coloring
    ):
        lvec = tuple(len(r) for r in rows)
        kvec = tuple(len(c) for c in cols)
        if not certify_cell_regular(lvec, kvec):
            certified = False
        want = 1
        for l_, k_ in zip(lvec, kvec):
            want *= lift_count(k_, l_)
        if len(cell_simplices) != want:
            certified = False
        size += len(cell_simplices)
        buffer.extend(cell_simplices)
        if len(buffer) >= 65536:
            flush(buffer)
    flush(buffer)
    if fh is not None:
        fh.write("\n]}\n")
        fh.close()
    return size, volume, certified, zeros


def _cells_certified(prov) -> bool:
    for cell in prov:
        lvec, kvec = cell.signature
        if not certify_cell_regular(lvec, kvec):
            return False
        want = 1
        for l_, k_ in zip(lvec, kvec):
            want *= lift_count(k_, l_)
        if cell.end - cell.start != want:
            return False
    return True


def build_cube_recursive(spec: PipelineSpec):
    """Build a triangulation of the target cube by repeated product steps.

    Returns (triangulation_or_None, PipelineReport); the triangulation is
    None when the final step exceeded the materialization threshold.
    """
    l = spec.l
    base_dim = ((spec.dim - 1) % l) + 1
    current = minimal_cube(base_dim)
    sizes = {base_dim: current.size}
    steps: list[StepReport] = []
    ok = True
    rng_counter = 0
    while current.config.dim < spec.dim:
        cur = current.config.dim
        n = cur + 1
        seed_name, m_step, t0 = _pick_seed(spec, n)
        t0_ws = weighted_size(t0)
        nq = len(current.config.points)
        candidates: list[Coloring] = [make_coloring(nq, m_step, "balanced")]
        while len(candidates) < spec.samples:
            candidates.append(
                make_coloring(
                    nq, m_step, "random", rng_seed=spec.rng_seed + 7919 * rng_counter
                )
            )
            rng_counter += 1
        best = None
        best_size = None
        sample_sizes = []
        for coloring in candidates:
            s = product_size(current, t0, coloring)
            sample_sizes.append(s)
            if best_size is None or s < best_size:
                best, best_size = coloring, s
        new_dim = cur + l
        bound = size_bound(current.size, t0_ws, n, m_step, l)
        bound_ok = Fraction(best_size) <= bound
        is_final = new_dim == spec.dim
        out_path = spec.out if is_final else None
        if new_dim <= spec.materialize_max_dim:
            tri, prov = triangulate_product(current, t0, best, with_provenance=True)
            vol_ok = volume_total(tri) == ambient_normalized_volume(tri.config.label)
            if new_dim <= spec.face_check_max_dim:
                report = StructuredChecker(tri, prov, best).run()
                f2f: bool | None = report.is_face_to_face
                diss = report.is_dissection
            else:
                f2f = None
                diss = vol_ok and _cells_certified(prov)
            if out_path is not None:
                with open(out_path, "w") as fh:
                    fh.write(triangulation_to_json(tri))
            next_current: Triangulation | None = tri
        else:
            size, volume, certified, zeros = _stream_step(
                current, t0, best, out_path=out_path
            )
            assert size == best_size
            vol_ok = (
                volume == ambient_normalized_volume(cube_config(new_dim).label)
                and zeros == 0
            )
            f2f = None
            diss = vol_ok and certified
            next_current = None
        steps.append(
            StepReport(
                cur,
                new_dim,
                n,
                m_step,
                seed_name,
                current.size,
                best_size,
                t0_ws,
                bound,
                bound_ok,
                vol_ok,
                f2f,
                diss,
                best.strategy,
                sample_sizes,
            )
        )
        sizes[new_dim] = best_size
        ok = ok and bound_ok and vol_ok and diss and (f2f is not False)
        if next_current is None:
            if new_dim != spec.dim:
                raise ValueError("cannot continue past a streamed step")
            return None, PipelineReport(steps, sizes, ok)
        current = next_current
    return current, PipelineReport(steps, sizes, ok)


def build_cube_haiman(
    d: int, split: tuple[int, int], t_k: Triangulation, t_l: Triangulation
) -> Triangulation:
    """Staircase refinement of T_k x T_l: size |T_k| |T_l| C(k+l, k)."""
    k, l = split
    if k + l != d:
        raise ValueError("split must sum to the target dimension")
    if t_k.config.dim != k or t_l.config.dim != l:
        raise ValueError("factor triangulations do not match the split")
    t0 = _cube_as_point_product(t_k)
    coloring = make_coloring(len(t_l.config.points), 1, "balanced")
    tri = triangulate_product(t_l, t0, coloring)
    expected = t_k.size * t_l.size * math.comb(k + l, k)
    if tri.size != expected:
        raise AssertionError("refinement size disagrees with the closed form")
    return tri


def haiman_baseline_sizes(d_max: int) -> dict[int, int]:
    """Best sizes reachable by composing minimal factors d <= 3 with the
    product refinement; a dynamic program over the split."""
    best = {1: 1, 2: 2, 3: 5}
    for d in range(4, d_max + 1):
        best[d] = min(best[k] * best[d - k] * math.comb(d, k) for k in range(1, d))
    return best


def report_table(
    d_max: int,
    spec_template: PipelineSpec | None = None,
    pipeline_sizes: dict[int, int] | None = None,
    pipeline_bounds: dict[int, Fraction] | None = None,
) -> str:
    """CSV report: per-dimension constants, bounds, and achieved sizes.

    Columns: d,size,efficiency,bound,hadamard,smith,phi_known,rho_known,
    haiman. Two footer rows carry the asymptotic targets of the two seeds.
    """
    if pipeline_sizes is None:
        pipeline_sizes = {d: minimal_cube(d).size for d in range(1, min(3, d_max) + 1)}
        pipeline_bounds = {}
        for target in range(max(4, d_max - 2), d_max + 1):
            spec = PipelineSpec(
                dim=target,
                l=spec_template.l if spec_template else 3,
                m=spec_template.m if spec_template else 3,
                seed=spec_template.seed if spec_template else "i3d2",
                samples=spec_template.samples if spec_template else 1,
                rng_seed=spec_template.rng_seed if spec_template else 0,
            )
            _, rep = build_cube_recursive(spec)
            for dd, ss in rep.sizes.items():
                pipeline_sizes.setdefault(dd, ss)
            for st in rep.steps:
                pipeline_bounds.setdefault(st.dim_to, st.bound)
    if pipeline_bounds is None:
        pipeline_bounds = {}
    haiman = haiman_baseline_sizes(max(d_max, 3))
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(
        [
            "d",
            "size",
            "efficiency",
            "bound",
            "hadamard",
            "smith",
            "phi_known",
            "rho_known",
            "haiman",
        ]
    )
    for d in range(1, d_max + 1):
        size = pipeline_sizes.get(d, "")
        eff = f"{efficiency(size, d):.4f}" if size != "" else ""
        bound = pipeline_bounds.get(d, "")
        if bound != "":
            bound = f"{float(bound):.2f}"
        had = f"{hadamard_lower(d):.4f}"
        if 1 <= d <= 8:
            kc = known_constants(d)
            smith = f"{kc.smith_lower:.3f}"
            phi: int | str = kc.phi
            rho = f"{kc.rho:.3f}"
        else:
            smith = phi = rho = ""
        hai = haiman.get(d, "")
        w.writerow([d, size, eff, bound, had, smith, phi, rho, hai])
    w.writerow(["lim_i3d1", "", f"{ASYMPTOTIC_TARGET_2:.4f}", "", "", "", "", "", ""])
    w.writerow(["lim_i3d2", "", f"{ASYMPTOTIC_TARGET_3:.4f}", "", "", "", "", "", ""])
    return buf.getvalue()
