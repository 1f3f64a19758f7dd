import pytest

from cayleycover.constructions import (
    build,
    interleave,
    max_wire_length,
    ring_layout,
    twisted_mesh_layout,
)
from cayleycover.errors import ArgumentError


def test_double_interleave_16_exact_sequence():
    assert interleave(16, double=True) == (
        1, 9, 16, 8, 2, 10, 15, 7, 3, 11, 14, 6, 4, 12, 13, 5,
    )


def test_single_interleave_small():
    assert interleave(6) == (1, 6, 2, 5, 3, 4)
    assert interleave(2) == (1, 2)
    with pytest.raises(ArgumentError):
        interleave(1)
    with pytest.raises(ArgumentError):
        interleave(3, double=True)


@pytest.mark.parametrize("n", range(2, 65))
def test_single_interleave_ring_bound(n):
    con = build("ring", n)
    assert max_wire_length(con, ring_layout(n, "single"), "step") <= 2


@pytest.mark.parametrize("n", [8, 12, 16, 32, 64])
def test_double_interleave_ring_bounds(n, ):
    order = interleave(n, double=True)
    pos = {label - 1: slot for slot, label in enumerate(order)}
    assert max(abs(pos[i] - pos[(i + 1) % n]) for i in range(n)) <= 4
    assert max(abs(pos[i] - pos[(i + n // 2) % n]) for i in range(n)) <= 2


def test_naive_ring_has_the_long_wire():
    con = build("ring", 8)
    assert max_wire_length(con, ring_layout(8, "naive"), "step") == 7


@pytest.mark.parametrize("d,m", [(2, 8), (2, 5), (3, 4), (3, 3)])
def test_twisted_mesh_interleave_step_bound(d, m):
    con = build("twistedmesh", m, d=d)
    layout = twisted_mesh_layout(con, "interleave")
    assert max_wire_length(con, layout, "step") <= 4


@pytest.mark.parametrize("d,m", [(2, 8), (2, 5), (3, 4), (3, 3)])
def test_twisted_mesh_shear_euclidean_bound(d, m):
    # squared distances stay exact: bound is (2 sqrt(d))^2 = 4d
    con = build("twistedmesh", m, d=d)
    layout = twisted_mesh_layout(con, "shear")
    assert max_wire_length(con, layout, "euclidean") <= 4 * d


def test_layout_must_cover_all_nodes():
    con = build("ring", 8)
    partial = ring_layout(7, "single")
    with pytest.raises(ArgumentError):
        max_wire_length(con, partial, "step")
