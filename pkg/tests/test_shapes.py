from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cayleycover.errors import ArgumentError
from cayleycover.shapes import (
    Shape,
    contains,
    enumerate_points,
    octahedron,
    order2ball,
    real_volume,
    size,
    tetrahedron,
)


def test_known_sizes():
    assert size(octahedron(3, 14)) == 4089
    assert size(tetrahedron(3, 10)) == 286
    assert size(octahedron(2, 3)) == 25
    assert size(octahedron(1, 7)) == 15
    assert size(octahedron(3, 3)) == 63
    assert size(octahedron(3, 0)) == 1
    assert size(tetrahedron(4, 0)) == 1
    assert size(order2ball(2, 3)) == 25 + 13


def test_low_dim_closed_forms():
    for k in range(12):
        assert size(octahedron(1, k)) == 2 * k + 1
        assert size(octahedron(2, k)) == 2 * k * k + 2 * k + 1
        assert size(octahedron(3, k)) == (4 * k**3 + 6 * k**2 + 8 * k + 3) // 3


def test_enumeration_small():
    assert list(enumerate_points(octahedron(1, 2))) == [(-2,), (-1,), (0,), (1,), (2,)]
    assert list(enumerate_points(tetrahedron(2, 1))) == [(0, 0), (0, 1), (1, 0)]
    assert len(list(enumerate_points(octahedron(3, 1)))) == 7


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_size_matches_enumeration(d):
    for k in range(13 if d < 4 else 8):
        for kind in ("octahedron", "tetrahedron"):
            shape = Shape(kind, d, k)
            pts = list(enumerate_points(shape))
            assert len(pts) == size(shape)
            assert len(set(pts)) == len(pts)
            assert all(contains(shape, p) for p in pts)
        if k >= 1:
            shape = order2ball(d, k)
            pts = list(enumerate_points(shape))
            assert len(pts) == size(shape)
            assert all(contains(shape, p) for p in pts)


def test_enumeration_is_lexicographic():
    pts = list(enumerate_points(octahedron(2, 4)))
    assert pts == sorted(pts)
    pts = list(enumerate_points(order2ball(2, 2)))
    assert pts == sorted(pts)


@given(st.integers(1, 4), st.integers(0, 20))
def test_octa_size_is_odd(d, k):
    # central symmetry fixes only the origin
    assert size(octahedron(d, k)) % 2 == 1


@given(st.integers(1, 4), st.integers(0, 20))
def test_tetra_octa_sandwich(d, k):
    t = size(tetrahedron(d, k))
    o = size(octahedron(d, k))
    assert t <= o <= (1 << d) * t


def test_real_volumes():
    assert real_volume(tetrahedron(3, 1)) == Fraction(1, 6)
    assert real_volume(octahedron(3, 1), Fraction(3, 2)) == Fraction(9, 2)
    assert real_volume(octahedron(1, 1), 5) == 10
    assert real_volume(tetrahedron(3, 10)) == Fraction(1000, 6)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_size_over_volume_decreases_toward_one(d):
    # the discrete count dominates the volume and the ratio shrinks in k
    previous = None
    for k in range(4, 41):
        ratio = Fraction(size(octahedron(d, k))) / real_volume(octahedron(d, k))
        assert ratio > 1
        if previous is not None:
            assert ratio <= previous
        previous = ratio


def test_validation():
    with pytest.raises(ArgumentError):
        Shape("ball", 2, 1)
    with pytest.raises(ArgumentError):
        octahedron(0, 1)
    with pytest.raises(ArgumentError):
        order2ball(2, 0)
    with pytest.raises(ArgumentError):
        real_volume(order2ball(2, 2))
