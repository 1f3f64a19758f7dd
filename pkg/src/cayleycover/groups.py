"""Finite Abelian groups and exact diameter computation.

Groups are kept in invariant-factor form (m_1 | m_2 | ... | m_r) and
elements are plain tuples of reduced coordinates.  Diameters come from a
breadth-first search over the whole group, run on Python-int bitsets:
the visited set is one big integer, and adding a generator is a cyclic
rotation of that integer (per mixed-radix dimension, via masked shifts).
This keeps a single BFS level at O(order / wordsize) word operations per
generator, which is what makes exhaustive generator-set searches viable.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Literal, Optional, Sequence

from .errors import ArgumentError, OverflowLimitError, ResourceError
from .shapes import _octa_size

GroupElement = tuple[int, ...]
Mode = Literal["directed", "undirected"]

INT64_MAX = (1 << 63) - 1

#: diameter() refuses groups larger than this unless overridden
DEFAULT_MAX_ORDER = 1 << 24


@dataclass(frozen=True)
class AbelianGroup:
    """A finite Abelian group as its chain of invariant factors."""

    factors: tuple[int, ...]

    def __post_init__(self):
        fs = tuple(int(m) for m in self.factors)
        object.__setattr__(self, "factors", fs)
        if not fs:
            raise ArgumentError("factors must be nonempty")
        if any(m < 1 for m in fs):
            raise ArgumentError("factors must be positive")
        if fs != (1,) and any(m == 1 for m in fs):
            raise ArgumentError("factor 1 is only allowed as the trivial group (1,)")
        for a, b in zip(fs, fs[1:]):
            if b % a:
                raise ArgumentError(f"invariant factors must divide: {a} | {b} fails")
        if prod(fs) > INT64_MAX:
            raise OverflowLimitError("group order exceeds 64 bits")

    @functools.cached_property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def identity(self) -> GroupElement:
        return (0,) * len(self.factors)

    @property
    def is_trivial(self) -> bool:
        return self.factors == (1,)

    @property
    def is_cyclic(self) -> bool:
        return len(self.factors) == 1

    def element(self, coords: Iterable[int]) -> GroupElement:
        cs = tuple(int(c) for c in coords)
        if len(cs) != len(self.factors):
            raise ArgumentError(
                f"element has {len(cs)} coordinates, group has {len(self.factors)}"
            )
        return tuple(c % m for c, m in zip(cs, self.factors))

    def contains(self, el: GroupElement) -> bool:
        return len(el) == len(self.factors) and all(
            0 <= c < m for c, m in zip(el, self.factors)
        )

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.factors))

    def neg(self, a: GroupElement) -> GroupElement:
        return tuple((-x) % m for x, m in zip(a, self.factors))

    def elements(self) -> Iterable[GroupElement]:
        return itertools.product(*(range(m) for m in self.factors))

    def __str__(self):
        return "Z_" + "xZ_".join(str(m) for m in self.factors)


def cyclic(n: int) -> AbelianGroup:
    return AbelianGroup((n,))


def from_orders(orders: Sequence[int]) -> AbelianGroup:
    """Invariant-factor form of a direct product of cyclic groups.

    Note this loses the coordinate system; use lattices.quotient_structure
    when the images of the product's canonical generators are needed.
    """
    rest = [int(m) for m in orders if m != 1]
    if any(m < 1 for m in rest):
        raise ArgumentError("orders must be positive")
    if not rest:
        return AbelianGroup((1,))
    chain: list[int] = []
    for m in rest:
        # fold m into the divisor chain, largest factor last
        for i in range(len(chain)):
            g = gcd(m, chain[i])
            if g != chain[i]:
                m, chain[i] = m * chain[i] // g, g
        if m != 1:
            chain.append(m)
        chain = sorted(c for c in chain if c > 1)
    return AbelianGroup(tuple(chain) if chain else (1,))


@dataclass(frozen=True)
class GeneratorSet:
    """d unrestricted generators, an optional involution, and the mode."""

    unrestricted: tuple[GroupElement, ...]
    order2: Optional[GroupElement] = None
    mode: Mode = "undirected"

    def __post_init__(self):
        if len(self.unrestricted) < 1:
            raise ArgumentError("need at least one unrestricted generator")
        if self.mode not in ("directed", "undirected"):
            raise ArgumentError(f"unknown mode {self.mode!r}")

    @property
    def d(self) -> int:
        return len(self.unrestricted)


@dataclass(frozen=True)
class DiameterResult:
    generates: bool
    diameter: Optional[int]
    ball_sizes: tuple[int, ...]


class _BitOps:
    """Cached masked-shift machinery for one group's index space.

    Element index is the mixed-radix number sum(c_j * stride_j).  Adding a
    generator rotates coordinate j by c_j, i.e. swaps the low and high
    parts of every stride-aligned block; the masks selecting those parts
    are precomputed once per (dimension, shift).
    """

    def __init__(self, factors: tuple[int, ...]):
        self.factors = factors
        self.n = prod(factors)
        self.full = (1 << self.n) - 1
        strides = [1] * len(factors)
        for j in range(len(factors) - 2, -1, -1):
            strides[j] = strides[j + 1] * factors[j + 1]
        self.strides = strides
        self._parts: dict[tuple[int, int], tuple[int, int, int, int]] = {}
        self._rotators: dict[GroupElement, object] = {}

    def _dim_part(self, j: int, c: int) -> tuple[int, int, int, int]:
        key = (j, c)
        part = self._parts.get(key)
        if part is None:
            m, stride = self.factors[j], self.strides[j]
            block = m * stride
            low_bits = (m - c) * stride
            pat_low = (1 << low_bits) - 1
            pat_high = ((1 << block) - 1) ^ pat_low
            reps = ((1 << self.n) - 1) // ((1 << block) - 1)
            part = (pat_low * reps, pat_high * reps, c * stride, low_bits)
            self._parts[key] = part
        return part

    def rotator(self, coords: GroupElement):
        """A function mapping bitset(A) to bitset(A + g)."""
        rot = self._rotators.get(coords)
        if rot is not None:
            return rot
        parts = [
            self._dim_part(j, c % m)
            for j, (c, m) in enumerate(zip(coords, self.factors))
            if c % m
        ]
        if not parts:
            rot = lambda v: v
        elif len(parts) == 1:
            lm, hm, up, down = parts[0]
            rot = lambda v: ((v & lm) << up) | ((v & hm) >> down)
        else:

            def rot(v, _parts=tuple(parts)):
                for lm, hm, up, down in _parts:
                    v = ((v & lm) << up) | ((v & hm) >> down)
                return v

        self._rotators[coords] = rot
        return rot


@functools.lru_cache(maxsize=256)
def _bitops(factors: tuple[int, ...]) -> _BitOps:
    return _BitOps(factors)


def _ball_sizes(ops: _BitOps, rotators, max_levels: int) -> tuple[list[int], int]:
    """Run BFS; returns (cumulative ball sizes, final visited bitset)."""
    v = 1
    sizes = [1]
    full = ops.full
    level = 0
    while v != full and level < max_levels:
        nv = v
        for rot in rotators:
            nv |= rot(v)
        if nv == v:
            break
        v = nv
        sizes.append(v.bit_count())
        level += 1
    return sizes, v


def _step_rotators(group: AbelianGroup, gens: GeneratorSet, ops: _BitOps):
    seen: set[GroupElement] = set()
    for g in gens.unrestricted:
        seen.add(g)
        if gens.mode == "undirected":
            seen.add(group.neg(g))
    if gens.order2 is not None:
        seen.add(gens.order2)
    seen.discard(group.identity)
    return [ops.rotator(el) for el in sorted(seen)]


def diameter(
    group: AbelianGroup,
    gens: GeneratorSet,
    max_order: int = DEFAULT_MAX_ORDER,
) -> DiameterResult:
    """Eccentricity of the identity in the Cayley graph, by bitset BFS.

    Equals the graph diameter by vertex-transitivity.  Returns
    generates=False (not an error) when the generators span a proper
    subgroup.
    """
    if group.order > max_order:
        raise ResourceError(
            f"group order {group.order} exceeds the BFS budget {max_order}"
        )
    for g in gens.unrestricted:
        if not group.contains(g):
            raise ArgumentError(f"generator {g} does not belong to {group}")
    if gens.order2 is not None:
        rho = gens.order2
        if not group.contains(rho):
            raise ArgumentError(f"order-2 generator {rho} does not belong to {group}")
        if rho == group.identity or group.add(rho, rho) != group.identity:
            raise ArgumentError(f"{rho} is not an order-2 element of {group}")

    if group.is_trivial:
        return DiameterResult(True, 0, (1,))

    ops = _bitops(group.factors)
    rotators = _step_rotators(group, gens, ops)
    sizes, v = _ball_sizes(ops, rotators, group.order)
    generates = v == ops.full
    return DiameterResult(
        generates=generates,
        diameter=len(sizes) - 1 if generates else None,
        ball_sizes=tuple(sizes),
    )


def moore_bound(d: int, k: int, mode: Mode, order2_count: int = 0) -> int:
    """Path-counting upper bound on the size of a degree/diameter graph.

    (d^{k+1}-1)/(d-1) directed and d(2d-1)^k-1 over d-1 undirected (k+1
    and 2k+1 at d=1); with one order-2 generator the bound is the size of
    the mixed ball, octa(d,k) + octa(d,k-1).
    """
    if d < 1 or k < 0:
        raise ArgumentError("need d >= 1 and k >= 0")
    if order2_count not in (0, 1):
        raise ArgumentError("order2_count must be 0 or 1")
    if order2_count:
        if mode != "undirected":
            raise ArgumentError("the order-2 bound applies to undirected graphs only")
        value = _octa_size(d, k) + _octa_size(d, k - 1)
    elif mode == "directed":
        value = k + 1 if d == 1 else (d ** (k + 1) - 1) // (d - 1)
    elif mode == "undirected":
        value = 2 * k + 1 if d == 1 else (d * (2 * d - 1) ** k - 1) // (d - 1)
    else:
        raise ArgumentError(f"unknown mode {mode!r}")
    if value > INT64_MAX:
        raise OverflowLimitError("Moore bound exceeds 64 bits")
    return value
