"""Explicit graph and lattice families, plus physical layout helpers.

Each family builder returns a Construction bundling the lattice, the
quotient group with its generators, and the closed-form size/diameter
predictions, so the verification suite can BFS every instance.  The
layout half implements the interleaving tricks that keep physical wire
lengths bounded independently of the mesh size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import ArgumentError
from .coverings import L7_BASIS
from .groups import AbelianGroup, GeneratorSet, GroupElement, cyclic
from .lattices import Lattice, RationalLattice, quotient_structure


@dataclass(frozen=True)
class Construction:
    """One verifiable instance of a named family."""

    family: str
    params: dict
    lattice: Optional[Lattice]
    coset: Optional[tuple[int, ...]]  # order-2 families: g with 2g in L
    group: Optional[AbelianGroup]
    gens: Optional[GeneratorSet]
    predicted_size: Optional[int]
    predicted_diameter: Optional[int]
    diameter_exact: bool = True  # False: prediction is only an upper bound
    rational_lattice: Optional[RationalLattice] = None


def _from_lattice(
    family: str,
    params: dict,
    lattice: Lattice,
    diameter_pred: int,
    mode: str,
    exact: bool = True,
) -> Construction:
    q = quotient_structure(lattice)
    return Construction(
        family=family,
        params=params,
        lattice=lattice,
        coset=None,
        group=q.group,
        gens=GeneratorSet(q.images, mode=mode),
        predicted_size=lattice.index,
        predicted_diameter=diameter_pred,
        diameter_exact=exact,
    )


def _order2_construction(
    family: str,
    params: dict,
    lattice: Lattice,
    coset: tuple[int, ...],
    group: AbelianGroup,
    unrestricted: tuple[GroupElement, ...],
    rho: GroupElement,
    diameter_pred: int,
) -> Construction:
    return Construction(
        family=family,
        params=params,
        lattice=lattice,
        coset=coset,
        group=group,
        gens=GeneratorSet(unrestricted, order2=rho, mode="undirected"),
        predicted_size=lattice.index,
        predicted_diameter=diameter_pred,
    )


# ---------------------------------------------------------------------------
# family builders
# ---------------------------------------------------------------------------


def _build_ring(n: int, **opts) -> Construction:
    mode = opts.pop("mode", "undirected")
    _reject_extra(opts, "ring")
    if n < 1:
        raise ArgumentError("ring size must be >= 1")
    diam = n // 2 if mode == "undirected" else n - 1
    return _from_lattice("ring", {"n": n}, Lattice(((n,),)), diam, mode)


def _build_toroidal(k: int, **opts) -> Construction:
    d = opts.pop("d", 3)
    mode = opts.pop("mode", "undirected")
    _reject_extra(opts, "toroidal")
    if k < 0 or d < 1:
        raise ArgumentError("need k >= 0 and d >= 1")
    # balanced split of k over the d axes
    bs = [(k + i) // d for i in range(d)]
    sides = [2 * b + 1 for b in bs] if mode == "undirected" else [b + 1 for b in bs]
    basis = tuple(
        tuple(sides[i] if i == j else 0 for j in range(d)) for i in range(d)
    )
    return _from_lattice(
        "toroidal", {"k": k, "d": d, "sides": tuple(sides)}, Lattice(basis), k, mode
    )


def _build_twisted2d(k: int, **opts) -> Construction:
    _reject_extra(opts, "twisted2d")
    if k < 1:
        raise ArgumentError("twisted2d needs k >= 1")
    n = 2 * k * k + 2 * k + 1
    lattice = Lattice(((k, k + 1), (-k - 1, k)))
    group = cyclic(n)
    gens = GeneratorSet(((1,), (2 * k * k % n,)), mode="undirected")
    return Construction(
        family="twisted2d",
        params={"k": k},
        lattice=lattice,
        coset=None,
        group=group,
        gens=gens,
        predicted_size=n,
        predicted_diameter=k,
    )


def _directed2d_ab(k: int) -> tuple[int, int]:
    a = (k + 3) // 3  # (k+2)/3 to the nearest integer
    return a, k + 2 - 2 * a


def _build_directed2d(k: int, **opts) -> Construction:
    alternate = opts.pop("alternate", False)
    _reject_extra(opts, "directed2d")
    if k < 1:
        raise ArgumentError("directed2d needs k >= 1")
    a, b = _directed2d_ab(k)
    if alternate:
        if a == b:
            raise ArgumentError(
                "the alternate lattice exists only for k with k % 3 != 1"
            )
        basis = ((a, b), (2 * a, -a))
    else:
        basis = ((a, a), (a + b, -b))
    n = (k + 2) ** 2 // 3
    con = _from_lattice(
        "directed2d",
        {"k": k, "a": a, "b": b, "alternate": alternate},
        Lattice(basis),
        k,
        "directed",
    )
    assert con.predicted_size == n
    return con


def _build_twistedbcc3d(k: int, **opts) -> Construction:
    _reject_extra(opts, "twistedbcc3d")
    if k < 1:
        raise ArgumentError("twistedbcc3d needs k >= 1")
    a1, a2, a3 = ((2 * k + i) // 3 for i in (1, 2, 3))
    basis = ((2 * a1, 0, 0), (0, 2 * a2, 0), (a1, a2, a3))
    return _from_lattice(
        "twistedbcc3d",
        {"k": k, "a": (a1, a2, a3)},
        Lattice(basis),
        k,
        "undirected",
    )


def _theorem15_data(k: int):
    a = (2 * k + 2) // 3  # ceil(2k/3)
    if k % 3 == 0:
        basis = ((a + 1, a, a), (a, -a, a + 1), (a + 1, a - 1, -a - 1))
        n = (2 * a * a + a + 1) * (2 * a + 1)
        gens = (1, 2 * a + 1, 4 * a * a + 2 * a + 1)
    elif k % 3 == 1:
        basis = ((a, a, a), (a + 1, -a, a - 1), (a - 1, a + 1, -a))
        n = 4 * a**3 + 3 * a
        gens = (1, 2 * a * a - a + 1, 2 * a * a + a + 1)
    else:
        basis = ((a, a, a - 1), (a - 1, -a, a), (a, a - 1, -a))
        n = (2 * a * a - a + 1) * (2 * a - 1)
        gens = (1, 2 * a - 1, 4 * a * a - 2 * a + 1)
    return a, basis, n, gens


def _build_theorem15(k: int, **opts) -> Construction:
    _reject_extra(opts, "theorem15")
    if k < 0:
        raise ArgumentError("theorem15 needs k >= 0")
    a, basis, n, gens = _theorem15_data(k)
    group = cyclic(n)
    return Construction(
        family="theorem15",
        params={"k": k, "a": a},
        lattice=Lattice(basis),
        coset=None,
        group=group,
        gens=GeneratorSet(tuple((g % n,) for g in gens), mode="undirected"),
        predicted_size=n,
        predicted_diameter=k,
    )


def _build_l7_scaled(k: int, **opts) -> Construction:
    _reject_extra(opts, "l7_scaled")
    if k < 7 or (k + 3) % 10:
        raise ArgumentError("l7_scaled is defined for k = 10m - 3, m >= 1")
    m = (k + 3) // 10
    lattice = Lattice(L7_BASIS).scaled(m)
    return _from_lattice(
        "l7_scaled", {"k": k, "m": m}, lattice, k, "directed", exact=(m == 1)
    )


def _build_tetracube(k: int, **opts) -> Construction:
    _reject_extra(opts, "tetracube")
    if k < 1:
        raise ArgumentError("tetracube needs k >= 1")
    s1, s2, s3 = ((k + i) // 4 for i in (3, 4, 5))
    basis = ((2 * s1, 0, 0), (0, 2 * s2, 0), (s1, s2, -s3))
    bound = s1 + s2 + s3 + max(s1, s2, s3) - 3
    return _from_lattice(
        "tetracube",
        {"k": k, "scales": (s1, s2, s3)},
        Lattice(basis),
        bound,
        "directed",
        exact=False,
    )


def _build_sixteencell(k: int, **opts) -> Construction:
    _reject_extra(opts, "sixteencell")
    if k < 3:
        raise ArgumentError("sixteencell needs k >= 3")
    s1, s2, s3 = ((k + i) // 6 for i in (3, 4, 6))
    basis = ((s1, s2, s3), (s1, -3 * s2, s3), (s1, s2, -3 * s3))
    bound = s1 + 2 * s2 + 3 * s3 - 3
    return _from_lattice(
        "sixteencell",
        {"k": k, "scales": (s1, s2, s3)},
        Lattice(basis),
        bound,
        "directed",
        exact=False,
    )


def improved_directed_size(k: int) -> int:
    """Larger of the tetracube and sixteen-cell tiling sizes at diameter k."""
    best = _build_tetracube(k).predicted_size
    if k >= 3:
        best = max(best, _build_sixteencell(k).predicted_size)
    return best


def _build_bcc_highdim(k: int, **opts) -> Construction:
    d = opts.pop("d", 4)
    _reject_extra(opts, "bcc_highdim")
    if d < 2:
        raise ArgumentError("bcc_highdim needs d >= 2")
    q, r = divmod(2 * k + 1, d)
    if q < 1:
        raise ArgumentError(f"bcc_highdim needs 2k+1 >= d, got k={k}, d={d}")
    scales = [q + 1] * r + [q] * (d - r)
    rows = [
        [2 * scales[i] if i == j else 0 for j in range(d)] for i in range(d - 1)
    ]
    rows.append(scales)
    lattice = Lattice(tuple(tuple(row) for row in rows))
    return _from_lattice(
        "bcc_highdim",
        {"k": k, "d": d, "q": q, "r": r},
        lattice,
        k,
        "undirected",
        exact=False,
    )


def _build_twistedmesh(m: int, **opts) -> Construction:
    """Equal-scale twisted toroidal mesh Z_2m^(d-1) x Z_m, diameter
    floor(dm/2); the parameter is the half-period m."""
    d = opts.pop("d", 3)
    _reject_extra(opts, "twistedmesh")
    if m < 1 or d < 2:
        raise ArgumentError("twistedmesh needs m >= 1 and d >= 2")
    rows = [[2 * m if i == j else 0 for j in range(d)] for i in range(d - 1)]
    rows.append([m] * d)
    return _from_lattice(
        "twistedmesh",
        {"m": m, "d": d},
        Lattice(tuple(tuple(r) for r in rows)),
        d * m // 2,
        "undirected",
        exact=False,
    )


def simplex_centroid_lattice(d: int) -> RationalLattice:
    """Covering lattice for the standard d-simplex of radius 1.

    Rows are twice the centroid-to-face-centroid vectors (one per face,
    keeping d of the d+1); scaling by d(d+1) makes it integral.
    """
    if d < 1:
        raise ArgumentError("need d >= 1")
    rows = [tuple(Fraction(2, d * (d + 1)) for _ in range(d))]
    for i in range(1, d):
        rows.append(
            tuple(
                Fraction(-2, d + 1) if j == i else Fraction(2, d * (d + 1))
                for j in range(d)
            )
        )
    return RationalLattice(tuple(rows))


def _build_simplex_centroid(d: int, **opts) -> Construction:
    _reject_extra(opts, "simplex_centroid")
    rl = simplex_centroid_lattice(d)
    return Construction(
        family="simplex_centroid",
        params={"d": d, "efficiency": rl_det_efficiency(rl, d)},
        lattice=None,
        coset=None,
        group=None,
        gens=None,
        predicted_size=None,
        predicted_diameter=None,
        diameter_exact=False,
        rational_lattice=rl,
    )


def rl_det_efficiency(rl: RationalLattice, d: int) -> Fraction:
    """Efficiency of the radius-1 simplex covering: det over volume."""
    from math import factorial

    return abs(rl.det) * factorial(d)


def _build_order2_d1(k: int, **opts) -> Construction:
    _reject_extra(opts, "order2_d1")
    if k < 1:
        raise ArgumentError("order2_d1 needs k >= 1")
    return _order2_construction(
        "order2_d1",
        {"k": k},
        Lattice(((4 * k,),)),
        (2 * k,),
        cyclic(4 * k),
        ((1,),),
        (2 * k,),
        k,
    )


def _build_order2_d2(k: int, **opts) -> Construction:
    _reject_extra(opts, "order2_d2")
    if k < 1:
        raise ArgumentError("order2_d2 needs k >= 1")
    if k == 1:
        # the W-ball bound 4k^2+2 = 6 is attained only here
        return _order2_construction(
            "order2_d2",
            {"k": 1},
            Lattice(((6, 0), (-2, 1))),
            (3, 0),
            cyclic(6),
            ((1,), (2,)),
            (3,),
            1,
        )
    n = 4 * k * k
    return _order2_construction(
        "order2_d2",
        {"k": k},
        Lattice(((2 * k + 1, 1), (-1, 2 * k - 1))),
        (k, k),
        cyclic(n),
        ((1,), (2 * k - 1,)),
        (2 * k * k,),
        k,
    )


def _table4_data(k: int):
    if k % 3 == 0:
        a = 2 * k // 3
        basis = ((2 * a, 1, -1), (-1, 2 * a, -1), (1, 1, 2 * a))
        g = (a, a + 1, a - 1)
        n = (64 * k**3 + 108 * k) // 27
        unrestricted = (1, 4 * a**3 - 2 * a**2 + 2 * a - 1, 4 * a**3 - 2 * a**2 + 4 * a - 1)
        rho = 4 * a**3 + 3 * a
    elif k % 3 == 1:
        a = (2 * k + 1) // 3
        basis = ((2 * a - 1, -1, 0), (1, 2 * a, -1), (0, 1, 2 * a - 1))
        g = (a, a, a - 1)
        n = (64 * k**3 + 60 * k - 16) // 27
        unrestricted = (1, 2 * a - 1, 4 * a**2 - 2 * a + 1)
        rho = 4 * a**3 - 4 * a**2 + 3 * a - 1
    else:
        a = (2 * k - 1) // 3
        basis = ((2 * a + 1, -1, 0), (1, 2 * a, -1), (0, 1, 2 * a + 1))
        g = (a + 1, a, a)
        n = (64 * k**3 + 60 * k + 16) // 27
        unrestricted = (1, 2 * a + 1, 4 * a**2 + 2 * a + 1)
        rho = 4 * a**3 + 4 * a**2 + 3 * a + 1
    return a, basis, g, n, unrestricted, rho


def _build_order2_table4(k: int, **opts) -> Construction:
    _reject_extra(opts, "order2_table4")
    if k < 3:
        raise ArgumentError("order2_table4 needs k >= 3")
    a, basis, g, n, unrestricted, rho = _table4_data(k)
    return _order2_construction(
        "order2_table4",
        {"k": k, "a": a},
        Lattice(basis),
        g,
        cyclic(n),
        tuple((u % n,) for u in unrestricted),
        (rho % n,),
        k,
    )


def _build_product_z2(k: int, **opts) -> Construction:
    base_family = opts.pop("base_family", None)
    if base_family is None:
        raise ArgumentError("product_z2 needs base_family=<family name>")
    base = build(base_family, k - 1, **opts)
    if base.lattice is None or base.coset is not None:
        raise ArgumentError("product_z2 wraps integer-lattice families without involutions")
    d = base.lattice.dim
    rows = [tuple(row) + (0,) for row in base.lattice.basis]
    rows.append((0,) * d + (2,))
    lattice = Lattice(tuple(rows))
    q = quotient_structure(lattice)
    return Construction(
        family="product_z2",
        params={"k": k, "base_family": base_family, **base.params},
        lattice=lattice,
        coset=None,
        group=q.group,
        gens=GeneratorSet(q.images[:d], order2=q.images[d], mode="undirected"),
        predicted_size=2 * base.predicted_size,
        predicted_diameter=base.predicted_diameter + 1,
        diameter_exact=base.diameter_exact,
    )


def _reject_extra(opts: dict, family: str):
    if opts:
        raise ArgumentError(f"unknown options for {family}: {sorted(opts)}")


FAMILIES: dict[str, Callable[..., Construction]] = {
    "ring": _build_ring,
    "toroidal": _build_toroidal,
    "twisted2d": _build_twisted2d,
    "directed2d": _build_directed2d,
    "twistedbcc3d": _build_twistedbcc3d,
    "theorem15": _build_theorem15,
    "l7_scaled": _build_l7_scaled,
    "tetracube": _build_tetracube,
    "sixteencell": _build_sixteencell,
    "bcc_highdim": _build_bcc_highdim,
    "twistedmesh": _build_twistedmesh,
    "simplex_centroid": _build_simplex_centroid,
    "order2_d1": _build_order2_d1,
    "order2_d2": _build_order2_d2,
    "order2_table4": _build_order2_table4,
    "product_z2": _build_product_z2,
}


def build(family: str, k: int, **opts) -> Construction:
    """Build one instance of a family.

    The positional parameter is the diameter bound k for most families;
    for `ring` it is the cycle length, for `twistedmesh` the half-period
    m, and for `simplex_centroid` the dimension d.
    """
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise ArgumentError(
            f"unknown family {family!r}; known: {sorted(FAMILIES)}"
        ) from None
    return builder(k, **opts)


# ---------------------------------------------------------------------------
# layouts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Layout:
    """Bijection from graph nodes to integer grid positions (unit spacing)."""

    positions: dict
    spacing: int = 1


def interleave(n: int, double: bool = False) -> tuple[int, ...]:
    """Node labels 1..n in placement order.

    Single interleaving places a ring as 1, n, 2, n-1, ... so ring
    neighbours sit at most 2 apart; applying it twice also brings the
    half-ring partners i and i +- n/2 within 2 while keeping ring
    neighbours within 4.
    """
    if n < 2:
        raise ArgumentError("interleave needs n >= 2")
    if double and n < 4:
        raise ArgumentError("double interleave needs n >= 4")
    order = _interleave_list(list(range(1, n + 1)))
    if double:
        order = _interleave_list(order)
    return tuple(order)


def _interleave_list(items: list) -> list:
    out = []
    lo, hi = 0, len(items) - 1
    while lo <= hi:
        out.append(items[lo])
        if lo != hi:
            out.append(items[hi])
        lo += 1
        hi -= 1
    return out


def _axis_positions(n: int, double: bool) -> list[int]:
    """positions[x] = physical slot of ring coordinate x (0-based)."""
    order = interleave(n, double)
    pos = [0] * n
    for slot, label in enumerate(order):
        pos[label - 1] = slot
    return pos


def ring_layout(n: int, scheme: str = "single") -> Layout:
    """Lay out the n-cycle on a line: naive order or interleaved."""
    if scheme == "naive":
        return Layout({(x,): (x,) for x in range(n)})
    pos = _axis_positions(n, scheme == "double")
    return Layout({(x,): (pos[x],) for x in range(n)})


def _twistedmesh_node_map(con: Construction):
    """Natural mesh coordinates -> group elements, via the quotient images."""
    m, d = con.params["m"], con.params["d"]
    group, images = con.group, con.gens.unrestricted
    nodes = {}
    ranges = [range(2 * m)] * (d - 1) + [range(m)]

    def el(coords):
        out = group.identity
        for c, img in zip(coords, images):
            out = group.add(out, tuple((c * e) % f for e, f in zip(img, group.factors)))
        return out

    def rec(prefix):
        if len(prefix) == d:
            nodes[tuple(prefix)] = el(prefix)
            return
        for c in ranges[len(prefix)]:
            rec(prefix + [c])

    rec([])
    return nodes


def twisted_mesh_layout(con: Construction, scheme: str = "interleave") -> Layout:
    """Short-wire layouts for an equal-scale twisted toroidal mesh.

    `interleave`: double-interleave the long axes and single-interleave
    the short one (per-axis step length <= 4).  `shear`: rotate each
    short-axis level by one unit along every long axis, making all edges
    cyclically adjacent per axis, then single-interleave every axis
    (Euclidean length <= 2 sqrt(d)).
    """
    if con.family != "twistedmesh":
        raise ArgumentError("layout schemes here apply to twistedmesh constructions")
    m, d = con.params["m"], con.params["d"]
    nodes = _twistedmesh_node_map(con)
    long_single = _axis_positions(2 * m, False) if 2 * m >= 2 else [0]
    long_double = _axis_positions(2 * m, True) if 2 * m >= 4 else long_single
    short_single = _axis_positions(m, False) if m >= 2 else [0]

    positions = {}
    for coords, element in nodes.items():
        *xs, y = coords
        if scheme == "interleave":
            phys = tuple(long_double[x] for x in xs) + (short_single[y],)
        elif scheme == "shear":
            sheared = [(x + y) % (2 * m) for x in xs]
            phys = tuple(long_single[x] for x in sheared) + (short_single[y],)
        else:
            raise ArgumentError(f"unknown scheme {scheme!r}")
        positions[element] = phys
    if len(positions) != con.group.order:
        raise AssertionError("node map is not a bijection")
    return Layout(positions)


def max_wire_length(
    construction: Construction, layout: Layout, norm: str = "step"
) -> Fraction:
    """Longest wire of the laid-out Cayley graph.

    `step` is the largest per-axis separation; `euclidean` returns the
    squared Euclidean length (kept exact; compare against the square of
    the intended bound).
    """
    group, gens = construction.group, construction.gens
    if group is None or gens is None:
        raise ArgumentError("construction carries no Cayley graph")
    steps = list(gens.unrestricted)
    if gens.mode == "undirected":
        steps += [group.neg(g) for g in gens.unrestricted]
    if gens.order2 is not None:
        steps.append(gens.order2)
    worst = Fraction(0)
    for node in group.elements():
        try:
            p = layout.positions[node]
        except KeyError:
            raise ArgumentError("layout does not place every node") from None
        for g in steps:
            neighbour = group.add(node, g)
            try:
                q = layout.positions[neighbour]
            except KeyError:
                raise ArgumentError("layout does not place every node") from None
            if norm == "step":
                dist = Fraction(max(abs(a - b) for a, b in zip(p, q)))
            elif norm == "euclidean":
                dist = Fraction(sum((a - b) ** 2 for a, b in zip(p, q)))
            else:
                raise ArgumentError(f"unknown norm {norm!r}")
            if dist > worst:
                worst = dist
    return worst
