"""Exact integer / rational linear algebra kernels.

All geometric predicates in this package reduce to the routines here:
fraction-free determinants and ranks over the integers, a batched integer
determinant for bulk volume accounting, and a small phase-1 simplex solver
over ``fractions.Fraction`` used as an exact linear feasibility oracle.
No floating point is ever consulted for a decision.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


def det_bareiss(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination).

    Fraction-free: every division is exact, intermediate entries are minors
    of the input, which keeps growth polynomial in the entry size.
    """
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def rank_int(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix via fraction-free elimination."""
    if not rows:
        return 0
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(row, nrows):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        piv = m[row][col]
        for i in range(row + 1, nrows):
            if m[i][col] != 0:
                f = m[i][col]
                m[i] = [m[i][j] * piv - f * m[row][j] for j in range(ncols)]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


# int64 is safe as long as all Bareiss intermediates (minors of the input)
# stay below 2**63; for the lattice ranges used here (entries bounded by the
# summand count, dimension <= 12) the Hadamard bound is checked explicitly.
def _int64_safe(mats: np.ndarray) -> bool:
    n = mats.shape[1]
    if n == 0:
        return True
    maxabs = int(np.abs(mats).max(initial=0))
    bound = (maxabs * maxabs * n) ** ((n + 1) // 2)  # coarse minor bound
    return bound < 2**62


def batch_abs_det(mats: np.ndarray) -> np.ndarray:
    """Absolute determinants of a batch of square integer matrices, exactly.

    ``mats`` has shape (N, n, n). Runs a vectorized Bareiss elimination in
    int64 when provably overflow-free, otherwise falls back to the scalar
    routine per matrix.
    """
    mats = np.asarray(mats, dtype=np.int64)
    N, n, n2 = mats.shape
    assert n == n2
    if N == 0:
        return np.zeros(0, dtype=np.int64)
    if not _int64_safe(mats):
        return np.array(
            [abs(det_bareiss(m.tolist())) for m in mats], dtype=object
        )
    m = mats.copy()
    alive = np.ones(N, dtype=bool)
    prev = np.ones(N, dtype=np.int64)
    for k in range(n - 1):
        col = m[:, k:, k]
        need = alive & (m[:, k, k] == 0)
        if need.any():
            idx = np.flatnonzero(need)
            nz = col[idx] != 0
            nz[:, 0] = False
            has = nz.any(axis=1)
            dead = idx[~has]
            alive[dead] = False
            m[dead, k, k] = 1  # keep arithmetic harmless; result masked to 0
            good = idx[has]
            swap_rows = np.argmax(nz[has], axis=1) + k
            tmp = m[good, swap_rows, :].copy()
            m[good, swap_rows, :] = m[good, k, :]
            m[good, k, :] = tmp
        pivot = m[:, k, k]
        sub = m[:, k + 1 :, k + 1 :]
        outer = m[:, k + 1 :, k, None] * m[:, None, k, k + 1 :]
        m[:, k + 1 :, k + 1 :] = (sub * pivot[:, None, None] - outer) // prev[
            :, None, None
        ]
        m[:, k + 1 :, k] = 0
        prev = pivot
    out = np.abs(m[:, n - 1, n - 1])
    out[~alive] = 0
    return out


def feasible(rows: list[list], rhs: list) -> bool:
    """Exact feasibility of {x >= 0 : A x = b} by phase-1 simplex.

    Integer pivoting: the whole tableau stays a single positive multiple of
    the true rational tableau, every division is exact, and all sign and
    ratio tests are therefore exact. Bland's rule guarantees termination.
    """
    m = len(rows)
    if m == 0:
        return True
    n = len(rows[0])
    tab: list[list[int]] = []
    for i in range(m):
        row = list(rows[i]) + [rhs[i]]
        dens = [v.denominator for v in row if isinstance(v, Fraction)]
        if dens:
            scale = 1
            for dnm in dens:
                scale = scale * dnm // math.gcd(scale, dnm)
            row = [int(v * scale) for v in row]
        else:
            row = [int(v) for v in row]
        if row[n] < 0:
            row = [-v for v in row]
        tab.append(row)
    # Artificial variables form the starting basis; they may leave but never
    # re-enter, which preserves correctness for a phase-1 objective.
    basis = list(range(n, n + m))
    obj = [sum(tab[i][j] for i in range(m)) for j in range(n + 1)]
    prev = 1
    while True:
        enter = -1
        for j in range(n):
            if obj[j] > 0:
                enter = j
                break
        if enter < 0:
            return obj[n] == 0
        leave = -1
        bn = bd = 0  # best ratio bn/bd, bd > 0
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                rn = tab[i][n]
                if (
                    leave < 0
                    or rn * bd < bn * a
                    or (rn * bd == bn * a and basis[i] < basis[leave])
                ):
                    bn, bd = rn, a
                    leave = i
        if leave < 0:
            # Phase-1 objective is bounded below by zero; this cannot happen.
            raise ArithmeticError("unbounded phase-1 simplex")
        prow = tab[leave]
        piv = prow[enter]
        basis[leave] = enter
        for i in range(m):
            if i != leave:
                row = tab[i]
                f = row[enter]
                if f:
                    tab[i] = [(piv * a - f * b) // prev for a, b in zip(row, prow)]
                else:
                    tab[i] = [piv * a // prev for a in row]
        f = obj[enter]
        if f:
            obj = [(piv * a - f * b) // prev for a, b in zip(obj, prow)]
        else:
            obj = [piv * a // prev for a in obj]
        prev = piv


def _separation_rows(points_neg, points_pos, equalities):
    """Rows for: affine g with g=0 on `equalities`, g<=-1 on points_neg,
    g>=+1 on points_pos. Variables: a+ (d), a- (d), c+, c-, one slack per
    inequality."""
    d = len((points_neg + points_pos + equalities)[0])
    n_slack = len(points_neg) + len(points_pos)
    rows = []
    rhs = []
    slack = 0

    def g_row(p):
        return [Fraction(x) for x in p] + [Fraction(-x) for x in p] + [
            Fraction(1),
            Fraction(-1),
        ]

    for u in equalities:
        rows.append(g_row(u) + [Fraction(0)] * n_slack)
        rhs.append(0)
    for v in points_neg:
        r = g_row(v) + [Fraction(0)] * n_slack
        r[2 * d + 2 + slack] = Fraction(1)
        slack += 1
        rows.append(r)
        rhs.append(-1)
    for w in points_pos:
        r = g_row(w) + [Fraction(0)] * n_slack
        r[2 * d + 2 + slack] = Fraction(-1)
        slack += 1
        rows.append(r)
        rhs.append(1)
    return rows, rhs


def simplices_face_to_face(pts_a, pts_b) -> bool:
    """Decide conv(A) ∩ conv(B) == conv(A ∩ B) for two simplices.

    Works for simplices of any dimension given by affinely independent
    vertex tuples. Equivalent to the existence of an affine functional that
    vanishes exactly on the common vertices and strictly separates the rest;
    decided by exact LP feasibility.
    """
    common = set(pts_a) & set(pts_b)
    only_a = [p for p in pts_a if p not in common]
    only_b = [p for p in pts_b if p not in common]
    if not only_a and not only_b:
        # Identical vertex sets: trivially equal hulls.
        return True
    rows, rhs = _separation_rows(only_a, only_b, sorted(common))
    return feasible(rows, rhs)


def simplices_interiors_disjoint(pts_a, pts_b) -> bool:
    """Decide that two simplices have disjoint (relative) interiors.

    A common relative-interior point exists iff some rational point has
    strictly positive barycentric coordinates in both, iff the scaled
    system {λ>=1, μ>=1, Σλp = Σμq, Σλ = Σμ} is feasible.
    """
    d = len(pts_a[0])
    na, nb = len(pts_a), len(pts_b)
    rows = []
    rhs = []
    for k in range(d):
        rows.append([p[k] for p in pts_a] + [-q[k] for q in pts_b])
        rhs.append(sum(q[k] for q in pts_b) - sum(p[k] for p in pts_a))
    rows.append([1] * na + [-1] * nb)
    rhs.append(nb - na)
    return not feasible(rows, rhs)


def polytopes_interiors_disjoint(pts_a, pts_b) -> bool:
    """Disjoint interiors for two full-dimensional V-polytopes.

    Equivalent to proper separation: an affine g <= 0 on A and >= 0 on B
    with Σ_B g - Σ_A g >= 1 (the margin rules out g identically zero on a
    full-dimensional vertex set).
    """
    d = len(pts_a[0])
    na, nb = len(pts_a), len(pts_b)
    n_slack = na + nb + 1
    rows = []
    rhs = []

    def g_row(p):
        return [Fraction(x) for x in p] + [Fraction(-x) for x in p] + [
            Fraction(1),
            Fraction(-1),
        ]

    slack = 0
    for v in pts_a:
        r = g_row(v) + [Fraction(0)] * n_slack
        r[2 * d + 2 + slack] = Fraction(1)
        slack += 1
        rows.append(r)
        rhs.append(0)
    for w in pts_b:
        r = g_row(w) + [Fraction(0)] * n_slack
        r[2 * d + 2 + slack] = Fraction(-1)
        slack += 1
        rows.append(r)
        rhs.append(0)
    margin = [Fraction(0)] * (2 * d + 2 + n_slack)
    for w in pts_b:
        gr = g_row(w)
        for j in range(2 * d + 2):
            margin[j] += gr[j]
    for v in pts_a:
        gr = g_row(v)
        for j in range(2 * d + 2):
            margin[j] -= gr[j]
    margin[2 * d + 2 + slack] = Fraction(-1)
    rows.append(margin)
    rhs.append(1)
    return feasible(rows, rhs)
