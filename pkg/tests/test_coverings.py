from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cayleycover.coverings import (
    L7_COVER_VECTORS,
    bcc_lattice,
    covers,
    efficiency_pair,
    extended_order2_lattice,
    face_cover,
    format_6dec,
    fundamental_region,
    l7_lattice,
    verify_simplex_cover_L7,
)
from cayleycover.errors import ArgumentError
from cayleycover.lattices import Lattice, det, member
from cayleycover.shapes import octahedron, order2ball, size, tetrahedron


def test_twisted_bcc_cover():
    rep = covers(Lattice(((4, 0, 0), (0, 4, 0), (2, 2, 3))), octahedron(3, 3))
    assert rep.covers and rep.index == 48 and not rep.is_tiling
    assert rep.efficiency_discrete == Fraction(48, 63)


def test_aztec_tiling():
    k = 4
    rep = covers(Lattice(((k, k + 1), (-k - 1, k)), ), octahedron(2, k))
    assert rep.covers and rep.is_tiling
    assert rep.index == size(octahedron(2, k)) == 41
    assert rep.efficiency_discrete == 1


def test_identity_lattice_covers_everything():
    rep = covers(Lattice(((1, 0), (0, 1))), octahedron(2, 0))
    assert rep.covers and rep.index == 1


def test_cover_fails_below_radius():
    rep = covers(bcc_lattice(), octahedron(3, 0))
    assert not rep.covers
    assert rep.diameter == 1  # the bcc quotient has diameter 1


def test_monotone_in_radius():
    lat = Lattice(((3, 1), (1, -3)))
    covered = [covers(lat, octahedron(2, k)).covers for k in range(6)]
    assert covered == sorted(covered)  # once covered, always covered


def test_order2_cover_d2():
    k = 3
    lat = Lattice(((2 * k + 1, 1), (-1, 2 * k - 1)))
    rep = covers(lat, order2ball(2, k), coset=(k, k))
    assert rep.covers and rep.index == 4 * k * k
    assert rep.shape_size == size(order2ball(2, k))
    assert rep.efficiency_real is None


def test_order2_requires_coset():
    lat = Lattice(((7, 1), (-1, 5)))
    with pytest.raises(ArgumentError):
        covers(lat, order2ball(2, 3))
    with pytest.raises(ArgumentError):
        covers(lat, order2ball(2, 3), coset=(1, 0))  # 2g not in L


def test_extended_lattice_index():
    lat = Lattice(((7, 1), (-1, 5)))
    ext = extended_order2_lattice(lat, (3, 3))
    assert ext.dim == 3 and ext.index == lat.index


class TestFundamentalRegion:
    def test_l7_region_has_84_points(self):
        region = fundamental_region(l7_lattice(), tetrahedron(3, 10), (1, 1, 1))
        assert len(region.points) == 84

    def test_l_tromino(self):
        region = fundamental_region(Lattice(((1, 1), (2, -1))), tetrahedron(2, 1), (1, 1))
        assert set(region.points) == {(0, 0), (1, 0), (0, 1)}

    def test_identity_lattice_keeps_one_point(self):
        region = fundamental_region(Lattice(((1, 0), (0, 1))), tetrahedron(2, 3))
        assert region.points == ((0, 0),)

    def test_tiling_region_is_whole_shape(self):
        k = 3
        lat = Lattice(((k, k + 1), (-k - 1, k)))
        region = fundamental_region(lat, octahedron(2, k), (1, 2))
        assert len(region.points) == size(octahedron(2, k))

    def test_cardinality_independent_of_direction(self):
        lat = Lattice(((4, 0, 0), (0, 4, 0), (2, 2, 3)))
        sizes = {
            len(fundamental_region(lat, octahedron(3, 3), direction).points)
            for direction in [(1, 1, 1), (1, 0, 0), (-1, 2, 5), (Fraction(1, 2), 3, 1)]
        }
        assert sizes == {48}

    def test_non_covering_rejected(self):
        with pytest.raises(ArgumentError):
            fundamental_region(Lattice(((5, 0), (0, 5))), octahedron(2, 1))


class TestSimplexCoverProof:
    def test_certificate_passes(self):
        assert verify_simplex_cover_L7()

    def test_vectors_have_bounded_sums(self):
        for vec, combo in L7_COVER_VECTORS:
            assert 1 <= sum(vec) <= 8
            assert member(l7_lattice(), vec)

    def test_dropping_late_vectors_uncovers_the_face(self):
        vecs = [vec for vec, _ in L7_COVER_VECTORS]
        result = face_cover(vecs[:7])
        assert not result and result.uncovered_cell is not None

    def test_perturbed_vector_fails(self):
        vecs = [vec for vec, _ in L7_COVER_VECTORS]
        vecs[2] = (4, 3, 0)  # no longer a lattice vector
        assert not verify_simplex_cover_L7(vecs)

    def test_discrete_cross_check(self):
        rep = covers(l7_lattice(), tetrahedron(3, 10))
        assert rep.covers and rep.index == 84


def test_efficiency_pairs_match_published_values():
    eff_d, eff_r = efficiency_pair(3, 10, 1393, "undirected")
    assert format_6dec(eff_d) == "0.892377"
    assert format_6dec(eff_r) == "0.686940"
    assert format_6dec(efficiency_pair(3, 7, 84, "directed")[1]) == "0.504000"
    assert format_6dec(efficiency_pair(3, 0, 1, "directed")[1]) == "0.222222"


def test_format_6dec_rounds_half_up():
    assert format_6dec(Fraction(55, 63)) == "0.873016"
    assert format_6dec(Fraction(1)) == "1.000000"
    assert format_6dec(Fraction(-1, 3)) == "-0.333333"


@given(st.integers(1, 6), st.integers(1, 6), st.integers(-4, 4), st.integers(0, 4))
@settings(max_examples=40, deadline=None)
def test_random_2d_cover_reports_are_consistent(a, d_, b, c):
    rows = ((a, b), (c, a + d_))
    if det(rows) == 0:
        return
    lat = Lattice(rows)
    for k in (1, 3):
        rep = covers(lat, octahedron(2, k))
        assert rep.covers == (rep.diameter <= k)
        assert rep.is_tiling == (rep.covers and rep.index == rep.shape_size)
        if rep.covers:
            assert rep.efficiency_discrete <= 1
            assert rep.density >= 1


def _covers_directly(lat, shape, coset=None):
    """Independent oracle: every residue class modulo the lattice must
    contain a shape point (shifted by the coset for the small ball)."""
    from cayleycover.shapes import enumerate_points

    d = lat.dim
    bound = max(abs(x) for row in lat.hnf for x in row) * d + 1

    def residue(pt):
        # reduce into a canonical residue via HNF back-substitution
        rem = list(pt)
        h = lat.hnf
        for j in range(d - 1, -1, -1):
            q = rem[j] // h[j][j]
            for c in range(j + 1):
                rem[c] -= q * h[j][c]
        return tuple(rem)

    hit = set()
    for pt in enumerate_points(shape):
        if shape.kind == "order2ball":
            *xs, parity = pt
            if parity:
                xs = [x + g for x, g in zip(xs, coset)]
            hit.add(residue(tuple(xs)))
        else:
            hit.add(residue(pt))
    return len(hit) == lat.index


@given(st.integers(1, 4), st.integers(1, 4), st.integers(-3, 3), st.integers(0, 3),
       st.integers(0, 3), st.sampled_from(["octahedron", "tetrahedron"]))
@settings(max_examples=60, deadline=None)
def test_quotient_bfs_agrees_with_direct_definition(a, d_, b, c, k, kind):
    # dual route: the BFS criterion must match literal coset coverage
    rows = ((a, b), (c, a + d_))
    if det(rows) == 0:
        return
    lat = Lattice(rows)
    shape = octahedron(2, k) if kind == "octahedron" else tetrahedron(2, k)
    assert covers(lat, shape).covers == _covers_directly(lat, shape)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_order2_bfs_agrees_with_direct_definition(k):
    lat = Lattice(((2 * k + 1, 1), (-1, 2 * k - 1)))
    shape = order2ball(2, k)
    assert covers(lat, shape, coset=(k, k)).covers
    assert _covers_directly(lat, shape, coset=(k, k))
    # and the smaller ball alone cannot do it
    smaller = order2ball(2, k - 1) if k > 1 else None
    if smaller is not None:
        assert not covers(lat, smaller, coset=(k, k)).covers
        assert not _covers_directly(lat, smaller, coset=(k, k))


SCALE_CASES = [
    (Lattice(((3, 4), (-4, 3))), octahedron(2, 3)),
    (Lattice(((4, 0, 0), (0, 4, 0), (2, 2, 3))), octahedron(3, 3)),
    (Lattice(((-2, 2, 2), (3, -3, 3), (4, 3, -1))), tetrahedron(3, 7)),
    (Lattice(((2, 2), (4, -2))), tetrahedron(2, 4)),
]


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("case", range(len(SCALE_CASES)))
def test_scaled_coverings_still_cover(case, m):
    from cayleycover.lattices import scale_covering
    from cayleycover.shapes import Shape

    lat, shape = SCALE_CASES[case]
    assert covers(lat, shape).covers
    scaled, new_k = scale_covering(lat, shape.radius, m, shape.kind)
    assert scaled.index == lat.index * m**lat.dim
    rep = covers(scaled, Shape(shape.kind, shape.dim, new_k))
    assert rep.covers, (case, m, new_k)


def test_rounded_real_covering_has_small_radius_penalty():
    # the efficiency-2/3 triangle lattice, blown up by t = 10 and
    # rounded: the discrete covering radius lands at t*1 + c, small c
    from fractions import Fraction as F

    from cayleycover.lattices import RationalLattice, round_real_lattice

    triangle = RationalLattice(((F(1, 3), F(1, 3)), (F(2, 3), F(-1, 3))))
    rounded = round_real_lattice(triangle, 10)
    radii = [
        c for c in (0, 1, 2, 3) if covers(rounded, tetrahedron(2, 10 + c)).covers
    ]
    assert radii and radii[0] <= 3
