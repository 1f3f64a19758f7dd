import pytest
from hypothesis import given, settings, strategies as st

from cayleycover.errors import ArgumentError, OverflowLimitError, ResourceError
from cayleycover.groups import (
    AbelianGroup,
    GeneratorSet,
    cyclic,
    diameter,
    from_orders,
    moore_bound,
)
from cayleycover.shapes import octahedron, size


def gens_of(group, *values, order2=None, mode="undirected"):
    return GeneratorSet(
        tuple(group.element(v if isinstance(v, tuple) else (v,)) for v in values),
        order2=group.element(order2) if order2 else None,
        mode=mode,
    )


def test_diameter_examples():
    assert diameter(cyclic(7), gens_of(cyclic(7), 1, 2, 3)).diameter == 1
    res = diameter(cyclic(84), gens_of(cyclic(84), 2, 9, 35, mode="directed"))
    assert res.generates and res.diameter == 7
    assert diameter(cyclic(5), gens_of(cyclic(5), 1, mode="directed")).diameter == 4
    res = diameter(cyclic(6), gens_of(cyclic(6), 1, 2, order2=(3,)))
    assert res.generates and res.diameter == 1


def test_non_generating_is_not_an_error():
    res = diameter(cyclic(6), gens_of(cyclic(6), 2))
    assert not res.generates
    assert res.diameter is None
    assert res.ball_sizes[-1] < 6


def test_trivial_group():
    g = AbelianGroup((1,))
    res = diameter(g, GeneratorSet(((0,),)))
    assert res.generates and res.diameter == 0


def test_ball_sizes_shape():
    res = diameter(cyclic(84), gens_of(cyclic(84), 2, 9, 35, mode="directed"))
    sizes = res.ball_sizes
    assert sizes[0] == 1
    assert all(a < b for a, b in zip(sizes, sizes[1:]))
    assert sizes[-1] == 84
    assert res.diameter == len(sizes) - 1


def test_mismatched_element_rejected():
    with pytest.raises(ArgumentError):
        diameter(cyclic(5), GeneratorSet(((1, 0),)))
    with pytest.raises(ArgumentError):
        diameter(cyclic(6), GeneratorSet(((1,),), order2=(2,)))


def test_bfs_budget():
    with pytest.raises(ResourceError):
        diameter(cyclic(100), GeneratorSet(((1,),)), max_order=50)


def test_from_orders():
    assert from_orders((6, 4)).factors == (2, 12)
    assert from_orders((2, 2)).factors == (2, 2)
    assert from_orders((3, 5)).factors == (15,)
    assert from_orders((1, 1)).factors == (1,)
    assert from_orders((93, 3)).factors == (3, 93)


def test_invariant_factor_validation():
    with pytest.raises(ArgumentError):
        AbelianGroup((2, 3))
    with pytest.raises(ArgumentError):
        AbelianGroup((1, 4))
    with pytest.raises(ArgumentError):
        AbelianGroup(())
    with pytest.raises(OverflowLimitError):
        AbelianGroup((1 << 64,))


def test_moore_bounds():
    assert moore_bound(1, 5, "directed") == 6
    assert moore_bound(1, 5, "undirected") == 11
    assert moore_bound(3, 2, "undirected") == 37
    assert moore_bound(2, 3, "undirected", order2_count=1) == 38
    assert moore_bound(3, 0, "directed") == 1
    with pytest.raises(ArgumentError):
        moore_bound(3, 2, "directed", order2_count=1)
    with pytest.raises(OverflowLimitError):
        moore_bound(10, 25, "undirected")


@given(st.integers(2, 60), st.data())
@settings(max_examples=80, deadline=None)
def test_ball_growth_bounded_by_moore(n, data):
    d = data.draw(st.integers(1, 3))
    mode = data.draw(st.sampled_from(["directed", "undirected"]))
    gens = tuple(
        (data.draw(st.integers(1, n - 1)),) for _ in range(d)
    )
    res = diameter(cyclic(n), GeneratorSet(gens, mode=mode))
    for level, ball in enumerate(res.ball_sizes):
        try:
            bound = moore_bound(d, level, mode)
        except OverflowLimitError:
            break  # past 2^63 the bound trivially exceeds any ball here
        assert ball <= bound


@given(st.integers(3, 80), st.data())
@settings(max_examples=80, deadline=None)
def test_sign_and_permutation_invariance(n, data):
    d = data.draw(st.integers(1, 3))
    raw = [data.draw(st.integers(1, n - 1)) for _ in range(d)]
    base = diameter(cyclic(n), GeneratorSet(tuple((g,) for g in raw)))
    flipped = [(n - g) % n for g in raw]
    flip = diameter(cyclic(n), GeneratorSet(tuple((g,) for g in flipped)))
    perm = diameter(cyclic(n), GeneratorSet(tuple((g,) for g in reversed(raw))))
    assert base == flip == perm


@given(st.integers(3, 80), st.data())
@settings(max_examples=80, deadline=None)
def test_unit_multiplication_invariance(n, data):
    from math import gcd

    d = data.draw(st.integers(1, 3))
    raw = [data.draw(st.integers(1, n - 1)) for _ in range(d)]
    u = data.draw(st.integers(1, n - 1).filter(lambda x: gcd(x, n) == 1))
    mode = data.draw(st.sampled_from(["directed", "undirected"]))
    base = diameter(cyclic(n), GeneratorSet(tuple((g,) for g in raw), mode=mode))
    mult = diameter(
        cyclic(n), GeneratorSet(tuple((u * g % n,) for g in raw), mode=mode)
    )
    assert base.generates == mult.generates
    assert base.diameter == mult.diameter


@given(st.integers(2, 60), st.data())
@settings(max_examples=60, deadline=None)
def test_undirected_no_slower_than_directed(n, data):
    d = data.draw(st.integers(1, 3))
    gens = tuple((data.draw(st.integers(1, n - 1)),) for _ in range(d))
    directed = diameter(cyclic(n), GeneratorSet(gens, mode="directed"))
    undirected = diameter(cyclic(n), GeneratorSet(gens, mode="undirected"))
    if directed.generates:
        assert undirected.generates
        assert undirected.diameter <= directed.diameter


def test_general_group_bfs_matches_reference():
    # directed graph on Z_3 x Z_93 reaching every element in 12 steps
    g = AbelianGroup((3, 93))
    gens = GeneratorSet(
        (g.element((0, 1)), g.element((1, 9)), g.element((2, 10))), mode="directed"
    )
    res = diameter(g, gens)
    assert res.generates and res.diameter == 12


def test_ball_sizes_match_shape_sizes_on_free_like_graph():
    # words of length <= 4 in {1, 200, 40000} have unique values, so the
    # early balls of this large cyclic graph count like the free l1 balls
    n = 5_000_011
    res = diameter(cyclic(n), gens_of(cyclic(n), 1, 200, 40_000))
    for level in range(5):
        assert res.ball_sizes[level] == size(octahedron(3, level))
