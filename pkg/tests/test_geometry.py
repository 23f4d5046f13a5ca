import random

import pytest

from cubetri.geometry import (
    affine_rank,
    ambient_normalized_volume,
    config_from_label,
    cube_config,
    minkowski_config,
    normalized_volume,
    parse_label,
    product_config,
    simplex_config,
)


def test_normalized_volume_examples():
    assert normalized_volume([(0, 0), (1, 0), (0, 1)]) == 1
    assert normalized_volume([(0, 0), (2, 0), (0, 2)]) == 4
    assert normalized_volume([(0, 0), (1, 1), (2, 2)]) == 0


def test_normalized_volume_errors():
    with pytest.raises(ValueError):
        normalized_volume([(0, 0), (1, 0)])
    with pytest.raises(ValueError):
        normalized_volume([(0, 0), (1, 0, 0), (0, 1)])


def test_normalized_volume_invariances():
    rng = random.Random(11)
    for _ in range(25):
        d = rng.randrange(2, 5)
        pts = [tuple(rng.randrange(-3, 4) for _ in range(d)) for _ in range(d + 1)]
        v = normalized_volume(pts)
        shuffled = pts[:]
        rng.shuffle(shuffled)
        assert normalized_volume(shuffled) == v
        t = tuple(rng.randrange(-5, 6) for _ in range(d))
        assert normalized_volume([tuple(x + dx for x, dx in zip(p, t)) for p in pts]) == v


def test_affine_rank_examples():
    assert affine_rank([(0, 0, 0)]) == 0
    assert affine_rank([(0, 0), (1, 0), (2, 0)]) == 1
    assert affine_rank([(0, 0), (1, 0), (0, 1)]) == 2
    with pytest.raises(ValueError):
        affine_rank([])


def test_rank_volume_consistency():
    rng = random.Random(5)
    for _ in range(20):
        d = rng.randrange(2, 5)
        pts = [tuple(rng.randrange(0, 3) for _ in range(d)) for _ in range(d + 1)]
        assert (affine_rank(pts) == d) == (normalized_volume(pts) > 0)


def test_ambient_volumes():
    assert ambient_normalized_volume(parse_label("cube(3)xsimplex(1)")) == 24
    assert ambient_normalized_volume(parse_label("cube(2)xsimplex(2)")) == 12
    assert ambient_normalized_volume(parse_label("minkowski(cube(2),3)")) == 18
    assert ambient_normalized_volume(parse_label("cube(4)")) == 24
    assert ambient_normalized_volume(parse_label("simplex(5)")) == 1


def test_label_round_trip():
    for text in ["cube(3)", "simplex(2)", "cube(3)xsimplex(2)", "minkowski(cube(2),3)"]:
        assert str(parse_label(text)) == text
    with pytest.raises(ValueError):
        parse_label("dodecahedron")


def test_canonical_orders():
    c = cube_config(2)
    assert c.points == ((0, 0), (0, 1), (1, 0), (1, 1))
    s = simplex_config(2)
    assert s.points == ((0, 0), (1, 0), (0, 1))
    p = product_config(cube_config(1), simplex_config(1))
    assert p.points == ((0, 0), (0, 1), (1, 0), (1, 1))
    mk = minkowski_config(1, 2)
    assert mk.points == ((0,), (1,), (2,))
    # a product of cubes lists points exactly like the combined cube
    pc = product_config(cube_config(2), cube_config(1))
    assert pc.points == cube_config(3).points


def test_config_from_label_round_trip():
    for text in ["cube(3)", "cube(2)xsimplex(1)", "minkowski(cube(3),2)"]:
        cfg = config_from_label(parse_label(text))
        assert str(cfg.label) == text
        assert len(set(cfg.points)) == len(cfg.points)
