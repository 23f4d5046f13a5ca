"""Exact structural validation of lifted product triangulations.

The pairwise LP scan in :mod:`complexes` is authoritative but quadratic.
Constructed lifts carry enough structure to certify validity exactly with
far less work:

* within one lifted cell, per-block strict-regularity certificates show the
  multi-staircases are the lower facets of an exact integer lift, hence
  tile the cell face to face;
* for two simplices in different cells, the intersection of their hulls
  equals the intersection of their restrictions to the common wall (the
  wall is a face of both cells), so the face-to-face question for the pair
  reduces to a much smaller pair that repeats heavily and is memoized;
* interiors of different cells are disjoint whenever the input
  triangulations are valid, because cells are products / affine preimages
  of their cells.

Every certificate used here is exact; nothing is trusted without either a
direct computation or a previously verified input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .complexes import Triangulation, ValidityReport, Violation, expected_volume
from .coloring import CellProvenance, Coloring
from .staircase import certify_cell_regular, monotone_paths


def _model_cell_points(lvec, kvec):
    """Coordinates of the standard model cell for a signature.

    Rows of all blocks become vertices of one standard simplex, columns of
    all blocks vertices of another; the model cell is affinely isomorphic
    to every instance cell with this signature, so pair validity computed
    on the model transports to instances.
    """
    lsum = sum(lvec)
    nsum = sum(kvec)
    pts = {}
    row_off = 0
    col_off = 0
    for b, (l, k) in enumerate(zip(lvec, kvec)):
        for h in range(l):
            for j in range(k):
                p = [0] * (lsum - 1) + [0] * (nsum - 1)
                ri = row_off + h
                ci = col_off + j
                if ri > 0:
                    p[ri - 1] = 1
                if ci > 0:
                    p[lsum - 1 + ci - 1] = 1
                pts[(b, h, j)] = tuple(p)
        row_off += l
        col_off += k
    return pts


_model_pair_cache: dict = {}


def _model_signature_ok(lvec: tuple[int, ...], kvec: tuple[int, ...]) -> bool:
    """Within-cell face-to-face for one signature, via the regularity
    certificate; falls back to pairwise LPs on the model cell."""
    key = (lvec, kvec)
    if key in _model_pair_cache:
        return _model_pair_cache[key]
    ok = certify_cell_regular(lvec, kvec)
    if not ok:
        pts = _model_cell_points(lvec, kvec)
        per_block = [monotone_paths(l, k) for l, k in zip(lvec, kvec)]
        cells = []
        for combo in itertools.product(*per_block):
            verts = []
            for b, path in enumerate(combo):
                for h, j in path:
                    verts.append(pts[(b, h, j)])
            cells.append(tuple(sorted(verts)))
        ok = True
        for i in range(len(cells)):
            for j in range(i + 1, len(cells)):
                if not linalg.simplices_face_to_face(cells[i], cells[j]):
                    ok = False
                    break
            if not ok:
                break
    _model_pair_cache[key] = ok
    return ok


@dataclass
class StructuredChecker:
    """Face-to-face verification of a constructed product triangulation.

    Assumes T_Q and T_0 have themselves been validated (their validity is
    an explicit input, supplied by the caller's own checks). Everything
    else is certified here, including that each provenance cell's simplex
    run really is the multi-staircase family of its blocks, so a tampered
    triangulation cannot pass on the strength of its provenance alone.
    """

    tri: Triangulation
    provenance: list[CellProvenance]
    coloring: Coloring
    _wall_cache: dict = field(default_factory=dict)

    def _wall_pair_ok(self, w1, w2) -> bool:
        key = (w1, w2) if w1 <= w2 else (w2, w1)
        hit = self._wall_cache.get(key)
        if hit is None:
            hit = linalg.simplices_face_to_face(list(key[0]), list(key[1]))
            self._wall_cache[key] = hit
        return hit

    def _cell_wall_reps(self, cell: CellProvenance, x_set, z_base):
        """Distinct wall restrictions of the cell's simplices, as point
        tuples. Restriction keeps vertices whose Q part lies in the common
        Q-face and whose base pair lies in the common base face."""
        pts = self.tri.config.points
        colors = self.coloring.colors
        nq = len(colors)
        reps = {}
        for s in self.tri.simplices[cell.start : cell.end]:
            keep = []
            for idx in s:
                p, q = divmod(idx, nq)
                if q in x_set and (p, colors[q]) in z_base:
                    keep.append(pts[idx])
            reps.setdefault(tuple(keep), None)
        return list(reps)

    def run(self) -> ValidityReport:
        from .staircase import LiftedCell, multi_staircases

        violations: list[Violation] = []
        nq = len(self.coloring.colors)
        # Within-cell certificates, one evaluation per distinct signature,
        # plus a recomputation of each cell's simplex run from its blocks.
        for cell in self.provenance:
            lvec, kvec = cell.signature
            if not _model_signature_ok(lvec, kvec):
                violations.append(
                    Violation("cell-not-face-to-face", (cell.sigma, cell.tau_index))
                )
            expected = multi_staircases(LiftedCell(cell.rows, cell.cols, nq))
            got = list(self.tri.simplices[cell.start : cell.end])
            if got != expected:
                violations.append(
                    Violation(
                        "cell-simplices-mismatch",
                        (cell.sigma, cell.tau_index),
                        f"{len(got)} stored vs {len(expected)} recomputed",
                    )
                )
        # Cross-cell pairs, reduced to their common wall.
        cells = self.provenance
        colors = self.coloring.colors
        for i in range(len(cells)):
            ci = cells[i]
            set_si = set(ci.sigma)
            for j in range(i + 1, len(cells)):
                cj = cells[j]
                x_set = set_si & set(cj.sigma)
                if not x_set:
                    continue
                x_colors = {colors[q] for q in x_set}
                z_base = {
                    pc
                    for pc in (ci.base_face & cj.base_face)
                    if pc[1] in x_colors
                }
                if not z_base:
                    continue
                reps_i = self._cell_wall_reps(ci, x_set, z_base)
                reps_j = self._cell_wall_reps(cj, x_set, z_base)
                for w1 in reps_i:
                    if not w1:
                        continue
                    for w2 in reps_j:
                        if not w2:
                            continue
                        if not self._wall_pair_ok(w1, w2):
                            violations.append(
                                Violation(
                                    "not-face-to-face",
                                    (
                                        (ci.sigma, ci.tau_index),
                                        (cj.sigma, cj.tau_index),
                                    ),
                                )
                            )
        vol = volume_total(self.tri)
        expected = expected_volume(self.tri.config)
        if expected is not None and vol != expected:
            violations.append(
                Violation("volume-mismatch", (), f"got {vol}, expected {expected}")
            )
        ok = not violations
        return ValidityReport(ok, ok, vol, violations)


def volume_total(tri: Triangulation) -> int:
    """Exact total normalized volume, batched over all simplices."""
    n = len(tri.simplices)
    if n == 0:
        return 0
    pts = np.asarray(tri.config.points, dtype=np.int64)
    d = tri.config.dim
    total = 0
    chunk = 65536
    for start in range(0, n, chunk):
        block = tri.simplices[start : start + chunk]
        idx = np.asarray(block, dtype=np.int64)
        coords = pts[idx]  # (b, d+1, d)
        diffs = coords[:, 1:, :] - coords[:, :1, :]
        dets = linalg.batch_abs_det(diffs)
        total += int(dets.sum())
    return total


def batch_volumes_of(points, simplex_rows) -> tuple[int, int]:
    """(sum of |det|, count of zero dets) for a batch of simplices given as
    index rows into ``points``."""
    if not simplex_rows:
        return 0, 0
    pts = np.asarray(points, dtype=np.int64)
    idx = np.asarray(simplex_rows, dtype=np.int64)
    coords = pts[idx]
    diffs = coords[:, 1:, :] - coords[:, :1, :]
    dets = linalg.batch_abs_det(diffs)
    return int(dets.sum()), int((dets == 0).sum())
