import random
from fractions import Fraction

import numpy as np

from cubetri.linalg import (
    batch_abs_det,
    det_bareiss,
    feasible,
    rank_int,
    simplices_face_to_face,
    simplices_interiors_disjoint,
)


def _det_fraction(rows):
    # plain Gaussian elimination over Fractions, as an independent reference
    n = len(rows)
    m = [[Fraction(v) for v in r] for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] * inv
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def _feasible_fraction(rows, rhs):
    m = len(rows)
    n = len(rows[0])
    tab = []
    for i in range(m):
        r = [Fraction(v) for v in rows[i]] + [Fraction(rhs[i])]
        if r[-1] < 0:
            r = [-v for v in r]
        tab.append(r)
    basis = list(range(n, n + m))
    obj = [sum(tab[i][j] for i in range(m)) for j in range(n + 1)]
    while True:
        enter = next((j for j in range(n) if obj[j] > 0), -1)
        if enter < 0:
            return obj[n] == 0
        best = None
        leave = -1
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][n] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        basis[leave] = enter
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [a - f * b for a, b in zip(obj, tab[leave])]


def test_det_matches_fraction_reference():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randrange(1, 6)
        rows = [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(n)]
        assert det_bareiss(rows) == _det_fraction(rows)


def test_batch_det_matches_scalar():
    rng = random.Random(8)
    mats = np.array(
        [
            [[rng.randrange(-3, 4) for _ in range(6)] for _ in range(6)]
            for _ in range(200)
        ],
        dtype=np.int64,
    )
    got = batch_abs_det(mats)
    for m, v in zip(mats, got):
        assert abs(det_bareiss(m.tolist())) == int(v)


def test_rank_small_cases():
    assert rank_int([[1, 2], [2, 4]]) == 1
    assert rank_int([[1, 0], [0, 1]]) == 2
    assert rank_int([[0, 0]]) == 0


def test_feasible_matches_fraction_reference():
    rng = random.Random(99)
    for _ in range(300):
        m = rng.randrange(1, 5)
        n = rng.randrange(1, 7)
        rows = [[rng.randrange(-4, 5) for _ in range(n)] for _ in range(m)]
        rhs = [rng.randrange(-6, 7) for _ in range(m)]
        assert feasible(rows, rhs) == _feasible_fraction(rows, rhs)


def test_pair_predicates_basic():
    a = [(0, 0), (1, 0), (0, 1)]
    b = [(1, 1), (1, 0), (0, 1)]  # shares the hypotenuse
    assert simplices_interiors_disjoint(a, b)
    assert simplices_face_to_face(a, b)
    c = [(0, 0), (2, 0), (0, 2)]  # contains a's interior
    assert not simplices_interiors_disjoint(a, c)
    assert not simplices_face_to_face(a, c)
    far = [(5, 5), (6, 5), (5, 6)]
    assert simplices_interiors_disjoint(a, far)
    assert simplices_face_to_face(a, far)
