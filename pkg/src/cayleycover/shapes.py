"""Discrete balls of the word metric and their real counterparts.

Three shapes appear throughout:

* ``octahedron`` -- the l1 ball: points of Z^d with |x_1|+...+|x_d| <= k
  (words of length <= k in d generators and their inverses);
* ``tetrahedron`` -- its nonnegative part (words without inverses);
* ``order2ball`` -- the ball over Z^d x Z_2 when one extra involution
  generator is available: an octahedron of radius k at parity 0 glued to
  one of radius k-1 at parity 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Literal

from .errors import ArgumentError, ResourceError

Kind = Literal["octahedron", "tetrahedron", "order2ball"]

KINDS = ("octahedron", "tetrahedron", "order2ball")

#: enumerate() refuses to materialize more points than this
DEFAULT_POINT_BUDGET = 50_000_000


@dataclass(frozen=True)
class Shape:
    kind: Kind
    dim: int
    radius: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ArgumentError(f"unknown shape kind {self.kind!r}")
        if self.dim < 1:
            raise ArgumentError("dim must be >= 1")
        if self.radius < 0:
            raise ArgumentError("radius must be >= 0")
        if self.kind == "order2ball" and self.radius < 1:
            raise ArgumentError("order2ball needs radius >= 1")

    @property
    def total_coords(self) -> int:
        """Coordinates per enumerated point (dim, plus a parity bit)."""
        return self.dim + 1 if self.kind == "order2ball" else self.dim


def octahedron(dim: int, radius: int) -> Shape:
    return Shape("octahedron", dim, radius)


def tetrahedron(dim: int, radius: int) -> Shape:
    return Shape("tetrahedron", dim, radius)


def order2ball(dim: int, radius: int) -> Shape:
    return Shape("order2ball", dim, radius)


def size(shape: Shape) -> int:
    """Exact number of integer points in the shape.

    C(k+d, d) for tetrahedra; sum_i 2^i C(d,i) C(k,i) for octahedra
    (the classical closed form for l1 balls); octa(k) + octa(k-1)
    for the order-2 ball.
    """
    d, k = shape.dim, shape.radius
    if shape.kind == "tetrahedron":
        return comb(k + d, d)
    if shape.kind == "octahedron":
        return _octa_size(d, k)
    return _octa_size(d, k) + _octa_size(d, k - 1)


def _octa_size(d: int, k: int) -> int:
    if k < 0:
        return 0
    return sum((1 << i) * comb(d, i) * comb(k, i) for i in range(d + 1))


def contains(shape: Shape, point: tuple[int, ...]) -> bool:
    """Membership test; order2ball points carry a trailing parity bit."""
    if len(point) != shape.total_coords:
        raise ArgumentError("point has wrong number of coordinates")
    d, k = shape.dim, shape.radius
    if shape.kind == "tetrahedron":
        return all(x >= 0 for x in point) and sum(point) <= k
    if shape.kind == "octahedron":
        return sum(abs(x) for x in point) <= k
    *xs, parity = point
    if parity not in (0, 1):
        return False
    return sum(abs(x) for x in xs) <= k - parity


def enumerate_points(
    shape: Shape, budget: int = DEFAULT_POINT_BUDGET
) -> Iterator[tuple[int, ...]]:
    """Yield all points of the shape in lexicographic order.

    The order is part of the contract: fundamental-region extraction and
    SVG output rely on it being deterministic.
    """
    if size(shape) > budget:
        raise ResourceError(
            f"shape holds {size(shape)} points, over the budget of {budget}"
        )
    d, k = shape.dim, shape.radius
    if shape.kind == "tetrahedron":
        yield from _simplex_points(d, k)
    elif shape.kind == "octahedron":
        yield from _l1_points(d, k)
    else:
        for pt in _l1_points(d, k):
            yield pt + (0,)
            if sum(abs(x) for x in pt) <= k - 1:
                yield pt + (1,)


def _l1_points(d: int, k: int) -> Iterator[tuple[int, ...]]:
    if d == 1:
        for x in range(-k, k + 1):
            yield (x,)
        return
    for x in range(-k, k + 1):
        for rest in _l1_points(d - 1, k - abs(x)):
            yield (x,) + rest


def _simplex_points(d: int, k: int) -> Iterator[tuple[int, ...]]:
    if d == 1:
        for x in range(k + 1):
            yield (x,)
        return
    for x in range(k + 1):
        for rest in _simplex_points(d - 1, k - x):
            yield (x,) + rest


def real_volume(shape: Shape, radius: Fraction | int | None = None) -> Fraction:
    """Volume of the real body of the given kind at a rational radius.

    2^d r^d / d! for the l1 ball, r^d / d! for the simplex.  Defaults to
    the shape's own (integer) radius.
    """
    if shape.kind == "order2ball":
        raise ArgumentError("order2ball has no single real body")
    r = Fraction(shape.radius if radius is None else radius)
    if r <= 0:
        raise ArgumentError("radius must be positive")
    d = shape.dim
    vol = r**d / Fraction(factorial(d))
    if shape.kind == "octahedron":
        vol *= 1 << d
    return vol
