"""Triangulations: representation, exact validity checking, and accounting.

A simplex is a sorted tuple of indices into a :class:`PointConfiguration`;
a triangulation is a configuration plus a list of such tuples. Validity is
decided by exact rational feasibility on vertex coordinates:

* dissection = volumes sum to the ambient volume and all pairs of cells
  have disjoint interiors;
* face-to-face = for every pair, conv(S1) ∩ conv(S2) = conv(S1 ∩ S2),
  certified by a separating functional vanishing exactly on the common
  vertices.

A cheaper ridge-based mode is available for quick scans; the pairwise test
remains the authoritative oracle.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .geometry import (
    Label,
    PointConfiguration,
    ProductLabel,
    SimplexLabel,
    CubeLabel,
    ambient_normalized_volume,
    config_from_label,
    facet_inequalities,
    normalized_volume,
    parse_label,
)

Simplex = tuple[int, ...]


@dataclass
class Triangulation:
    config: PointConfiguration
    simplices: tuple[Simplex, ...]

    def __post_init__(self):
        self.simplices = tuple(tuple(sorted(s)) for s in self.simplices)

    @property
    def size(self) -> int:
        return len(self.simplices)

    def points_of(self, s: Simplex) -> list[tuple[int, ...]]:
        pts = self.config.points
        return [pts[i] for i in s]

    def volume_of(self, s: Simplex) -> int:
        return normalized_volume(self.points_of(s))


@dataclass(frozen=True)
class SimplexType:
    t: tuple[int, ...]

    @property
    def weight(self) -> Fraction:
        w = Fraction(1)
        for ti in self.t:
            w /= math.factorial(ti)
        return w


@dataclass
class Violation:
    kind: str
    members: tuple
    detail: str = ""

    def __repr__(self):
        return f"Violation({self.kind}, {self.members}, {self.detail})"


@dataclass
class ValidityReport:
    is_dissection: bool
    is_face_to_face: bool
    volume_total: int
    violations: list[Violation] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.is_dissection


def expected_volume(config: PointConfiguration) -> int | None:
    if config.label is None:
        return None
    return ambient_normalized_volume(config.label)


def _bounding_boxes(tri: Triangulation):
    boxes = []
    pts = tri.config.points
    for s in tri.simplices:
        coords = [pts[i] for i in s]
        lo = tuple(min(c[j] for c in coords) for j in range(tri.config.dim))
        hi = tuple(max(c[j] for c in coords) for j in range(tri.config.dim))
        boxes.append((lo, hi))
    return boxes


def _boxes_disjoint(b1, b2) -> bool:
    lo1, hi1 = b1
    lo2, hi2 = b2
    return any(hi1[j] < lo2[j] or hi2[j] < lo1[j] for j in range(len(lo1)))


def validate_dissection(
    tri: Triangulation, expected: int | None = None, pairwise: bool = True
) -> ValidityReport:
    """Exact dissection check: volume census plus pairwise interior tests.

    Degenerate simplices are reported as violations, not raised. The pair
    scan uses a bounding-box prefilter; set ``pairwise=False`` to skip it
    (volume census only), e.g. when a structural certificate covers it.
    """
    if expected is None:
        expected = expected_volume(tri.config)
    violations: list[Violation] = []
    d = tri.config.dim
    vols = []
    for s in tri.simplices:
        if len(s) != d + 1:
            violations.append(Violation("not-full-dimensional", (s,)))
            vols.append(0)
            continue
        v = tri.volume_of(s)
        if v == 0:
            violations.append(Violation("degenerate", (s,)))
        vols.append(v)
    total = sum(vols)
    if expected is not None and total != expected:
        violations.append(
            Violation("volume-mismatch", (), f"got {total}, expected {expected}")
        )
    seen = set()
    for s in tri.simplices:
        if s in seen:
            violations.append(Violation("duplicate", (s,)))
        seen.add(s)
    if pairwise:
        boxes = _bounding_boxes(tri)
        pts = tri.config.points
        n = len(tri.simplices)
        for i in range(n):
            si = tri.simplices[i]
            pi = [pts[k] for k in si]
            for j in range(i + 1, n):
                if _boxes_disjoint(boxes[i], boxes[j]):
                    continue
                sj = tri.simplices[j]
                pj = [pts[k] for k in sj]
                if not linalg.simplices_interiors_disjoint(pi, pj):
                    violations.append(Violation("interior-overlap", (si, sj)))
    ok = not violations
    return ValidityReport(ok, False, total, violations)


def validate_face_to_face(
    tri: Triangulation, expected: int | None = None
) -> ValidityReport:
    """Authoritative pairwise face-to-face check (exact LP per pair).

    A feasible separating functional that vanishes exactly on the common
    vertices certifies both disjoint interiors and a common-face meeting,
    so a passing report is simultaneously a dissection certificate.
    """
    if expected is None:
        expected = expected_volume(tri.config)
    base = validate_dissection(tri, expected=expected, pairwise=False)
    violations = list(base.violations)
    boxes = _bounding_boxes(tri)
    pts = tri.config.points
    n = len(tri.simplices)
    for i in range(n):
        si = tri.simplices[i]
        pi = [pts[k] for k in si]
        for j in range(i + 1, n):
            sj = tri.simplices[j]
            if si == sj:
                continue  # already reported as duplicate
            if _boxes_disjoint(boxes[i], boxes[j]):
                continue
            pj = [pts[k] for k in sj]
            if not linalg.simplices_face_to_face(pi, pj):
                violations.append(Violation("not-face-to-face", (si, sj)))
    ok = not violations
    return ValidityReport(ok, ok, base.volume_total, violations)


def ridge_report(tri: Triangulation) -> ValidityReport:
    """Fast local check: every interior ridge in exactly two cells lying on
    opposite sides, boundary ridges on facets of the labeled polytope.

    Sound only together with the volume census (run validate_dissection
    with pairwise=False alongside); the pairwise scan stays authoritative.
    """
    if tri.config.label is None:
        raise ValueError("ridge mode needs a labeled configuration")
    facets = facet_inequalities(tri.config.label)
    pts = tri.config.points
    violations: list[Violation] = []
    ridges: dict[Simplex, list[tuple[Simplex, int]]] = {}
    for s in tri.simplices:
        for drop in s:
            ridge = tuple(i for i in s if i != drop)
            ridges.setdefault(ridge, []).append((s, drop))
    for ridge, owners in ridges.items():
        if len(owners) > 2:
            violations.append(
                Violation("ridge-overused", tuple(o[0] for o in owners))
            )
            continue
        rpts = [pts[i] for i in ridge]
        if len(owners) == 1:
            on_boundary = any(
                all(sum(a * x for a, x in zip(av, p)) == b for p in rpts)
                for av, b in facets
            )
            if not on_boundary:
                violations.append(
                    Violation("open-interior-ridge", (owners[0][0],), str(ridge))
                )
        else:
            (s1, d1), (s2, d2) = owners
            # Opposite strict sides of the ridge hyperplane, via the sign of
            # the (d+1)x(d+1) orientation determinant.
            p0 = rpts[0]
            rows = [[p[j] - p0[j] for j in range(tri.config.dim)] for p in rpts[1:]]
            r1 = rows + [[pts[d1][j] - p0[j] for j in range(tri.config.dim)]]
            r2 = rows + [[pts[d2][j] - p0[j] for j in range(tri.config.dim)]]
            s1sign = linalg.det_bareiss(r1)
            s2sign = linalg.det_bareiss(r2)
            if s1sign == 0 or s2sign == 0 or (s1sign > 0) == (s2sign > 0):
                violations.append(Violation("ridge-same-side", (s1, s2), str(ridge)))
    total = sum(tri.volume_of(s) for s in tri.simplices if len(s) == tri.config.dim + 1)
    ok = not violations
    return ValidityReport(ok, ok, total, violations)


def efficiency(size: int, d: int) -> float:
    """(size / d!)^(1/d), for reporting only (never used in predicates)."""
    if size < 1 or d < 1:
        raise ValueError("size and dimension must be positive")
    return math.exp((math.log(size) - math.lgamma(d + 1)) / d)


def _product_factors(config: PointConfiguration) -> tuple[Label, int]:
    label = config.label
    if not isinstance(label, ProductLabel) or not isinstance(
        label.right, SimplexLabel
    ):
        raise ValueError("configuration is not a product with a simplex factor")
    return label.left, label.right.k + 1


def simplex_type(s: Simplex, config: PointConfiguration) -> SimplexType:
    """Type (t_1, ..., t_m): per simplex-factor vertex counts minus one."""
    _, m = _product_factors(config)
    counts = [0] * m
    for idx in s:
        counts[idx % m] += 1
    if any(c == 0 for c in counts):
        raise ValueError("full-dimensional simplex must cover every factor vertex")
    return SimplexType(tuple(c - 1 for c in counts))


def weighted_size(tri: Triangulation) -> Fraction:
    """Sum of 1/∏ t_i! over all simplices of a product-with-simplex config."""
    total = Fraction(0)
    for s in tri.simplices:
        total += simplex_type(s, tri.config).weight
    return total


def weighted_efficiency_from(ws: Fraction, l: int, m: int) -> float:
    return math.exp(
        (math.log(ws.numerator) - math.log(ws.denominator) - l * math.log(m)) / l
    )


def weighted_efficiency(tri: Triangulation) -> float:
    """(weighted size / m^l)^(1/l) for triangulations of cube(l) x simplex."""
    left, m = _product_factors(tri.config)
    if not isinstance(left, CubeLabel):
        raise ValueError("weighted efficiency defined for cube x simplex products")
    return weighted_efficiency_from(weighted_size(tri), left.l, m)


def triangulation_to_json(tri: Triangulation) -> str:
    if tri.config.label is None:
        raise ValueError("cannot serialize an unlabeled configuration")
    obj = {
        "dim": tri.config.dim,
        "label": str(tri.config.label),
        "points": [list(p) for p in tri.config.points],
        "simplices": [list(s) for s in tri.simplices],
    }
    return json.dumps(obj)


def triangulation_from_json(text: str) -> Triangulation:
    obj = json.loads(text)
    label = parse_label(obj["label"])
    config = config_from_label(label)
    pts = tuple(tuple(p) for p in obj["points"])
    if pts != config.points:
        raise ValueError("points array does not follow the canonical order")
    return Triangulation(config, tuple(tuple(s) for s in obj["simplices"]))
