"""Exhaustive search for the largest Abelian Cayley graphs of diameter k.

The search scans group orders downward from a proven upper bound (ball
size, or the 3(k+3)^3/25 bound in the directed three-generator case),
enumerates canonicalized generator sets for every Abelian group of each
order, and BFS-checks the diameter.  Canonicalization never drops an
isomorphism class: level 1 keeps one representative per trivial
symmetry (sorted sets, sign flips, a divisor in every cyclic set), and
level 2 additionally discards cyclic sets that a unit multiplication
maps to something lexicographically smaller.  Level 0 exists purely as
a no-pruning oracle for soundness tests.
"""

from __future__ import annotations

import itertools
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb, gcd
from typing import Iterator, Optional

from .errors import ArgumentError, ResourceError
from .groups import (
    DEFAULT_MAX_ORDER,
    AbelianGroup,
    GeneratorSet,
    GroupElement,
    Mode,
    _bitops,
)
from .shapes import _octa_size


def ffz_bound(k: int) -> int:
    """Size bound 3(k+3)^3/25 for directed 3-generator Abelian graphs."""
    return 3 * (k + 3) ** 3 // 25


@dataclass(frozen=True)
class SearchSpec:
    d: int
    k: int
    mode: Mode = "undirected"
    order2: bool = False
    group_class: str = "abelian"  # "abelian" | "cyclic"
    n_min: int = 1
    n_max: Optional[int] = None
    canonicalization: int = 2
    max_seconds: Optional[float] = None
    max_order: int = DEFAULT_MAX_ORDER

    def __post_init__(self):
        if self.d < 1 or self.k < 0:
            raise ArgumentError("need d >= 1 and k >= 0")
        if self.group_class not in ("abelian", "cyclic"):
            raise ArgumentError("group_class must be 'abelian' or 'cyclic'")
        if self.canonicalization not in (0, 1, 2):
            raise ArgumentError("canonicalization level is 0, 1 or 2")
        if self.order2 and self.mode != "undirected":
            raise ArgumentError("order-2 searches are undirected only")

    def resolved_n_max(self) -> int:
        if self.n_max is not None:
            return self.n_max
        return default_n_max(self.d, self.k, self.mode, self.order2)


def default_n_max(d: int, k: int, mode: Mode, order2: bool = False) -> int:
    """The tightest applicable proven upper bound on the graph size."""
    if order2:
        return _octa_size(d, k) + _octa_size(d, k - 1)
    if mode == "undirected":
        return _octa_size(d, k)
    bound = comb(k + d, d)
    if d == 3 and k > 7:
        bound = min(bound, ffz_bound(k))
    return bound


@dataclass(frozen=True)
class Witness:
    group: AbelianGroup
    gens: GeneratorSet
    diameter: int


@dataclass(frozen=True)
class SearchResult:
    best_n: int
    witnesses: tuple[Witness, ...]
    exhaustive: bool
    groups_examined: int
    sets_examined: int


def _partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n as descending tuples, lexicographically largest first."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining, maximum, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, maximum), 0, -1):
            rec(remaining - part, part, prefix + [part])

    rec(n, n, [])
    return out


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def enumerate_abelian_groups(n: int) -> list[AbelianGroup]:
    """One group per isomorphism class of order n, cyclic first."""
    if n < 1:
        raise ArgumentError("order must be >= 1")
    if n == 1:
        return [AbelianGroup((1,))]
    primes = _factorize(n)
    per_prime = [_partitions(e) for _, e in primes]
    groups = []
    for combo in itertools.product(*per_prime):
        r = max(len(parts) for parts in combo)
        factors = []
        for j in range(r):
            f = 1
            for (p, _), parts in zip(primes, combo):
                if j < len(parts):
                    f *= p ** parts[j]
            factors.append(f)
        groups.append(AbelianGroup(tuple(reversed(factors))))
    groups.sort(key=lambda g: (len(g.factors), g.factors))
    return groups


# ---------------------------------------------------------------------------
# candidate generator sets
# ---------------------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _cyclic_pool(n: int, mode: Mode) -> list[int]:
    if mode == "undirected":
        return list(range(1, n // 2 + 1))
    return list(range(1, n))


def _cyclic_sets(n: int, d: int, mode: Mode, level: int) -> Iterator[tuple[int, ...]]:
    """Sorted candidate sets for Z_n under the requested pruning level."""
    pool = _cyclic_pool(n, mode)
    if level == 0:
        yield from itertools.combinations_with_replacement(range(n), d)
        return
    if len(pool) < d:
        yield from itertools.combinations_with_replacement(pool, d)
        return
    divisors = [x for x in _divisors(n) if x <= pool[-1]]
    divisor_set = set(divisors)
    for delta in divisors:
        rest = [e for e in pool if e != delta and not (e in divisor_set and e < delta)]
        for combo in itertools.combinations(rest, d - 1):
            yield tuple(sorted((delta,) + combo))


def _unit_canonical_cyclic(n: int, sset: tuple[int, ...], mode: Mode) -> bool:
    """Reject sets that some unit multiplication maps lex-strictly lower.

    Only units sending a member to 1 are tried; that is enough for a
    sound (subset) canonicalization, validated against level 0.
    """
    undirected = mode == "undirected"
    current = list(sset)
    for e in sset:
        if gcd(e, n) != 1 or e == 1:
            continue
        inv = pow(e, -1, n)
        units = (inv,) if undirected else (inv, n - inv)
        for u in units:
            if undirected:
                transformed = sorted(min(u * x % n, (n - u * x) % n) for x in sset)
            else:
                transformed = sorted(u * x % n for x in sset)
            if transformed < current:
                return False
    return True


def _general_pool(group: AbelianGroup, mode: Mode) -> list[GroupElement]:
    pool = set()
    for el in group.elements():
        if el == group.identity:
            continue
        pool.add(min(el, group.neg(el)) if mode == "undirected" else el)
    return sorted(pool)


def _order2_elements(group: AbelianGroup) -> list[GroupElement]:
    halves = [(0, m // 2) if m % 2 == 0 else (0,) for m in group.factors]
    out = [el for el in itertools.product(*halves) if any(el)]
    return sorted(out)


# ---------------------------------------------------------------------------
# per-group search
# ---------------------------------------------------------------------------


def _mod_p_spans(vectors, p: int, r: int) -> bool:
    """Do the coordinate vectors span (Z/p)^r?  Necessary for generation."""
    rows = [[c % p for c in v] for v in vectors]
    rank = 0
    for col in range(r):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            return False
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] * inv % p
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == r:
            return True
    return rank == r


def _search_group(
    group: AbelianGroup,
    d: int,
    k: int,
    mode: Mode,
    order2: bool,
    level: int,
    max_order: int,
) -> tuple[Optional[Witness], int]:
    """First-found witness (canonical enumeration order) and the set count."""
    n = group.order
    if n > max_order:
        raise ResourceError(f"order {n} exceeds the BFS budget {max_order}")
    if group.rank > d:
        return None, 0
    if n == 1:
        gens = GeneratorSet(((0,),) * d, mode=mode)
        return Witness(group, gens, 0), 1

    ops = _bitops(group.factors)
    full = ops.full
    undirected = mode == "undirected"
    examined = 0

    rho_list: list[Optional[GroupElement]] = [None]
    if order2:
        rho_list = _order2_elements(group)
        if not rho_list:
            return None, 0

    # smallest prime of the divisor chain: generation must span (Z/p)^rank
    p0 = _factorize(group.factors[0])[0][0] if group.factors[0] > 1 else None

    if group.is_cyclic:

        def make_step(e):
            ne = n - e
            if undirected and e != ne:
                return lambda v: ((v << e) | (v >> ne) | (v << ne) | (v >> e)) & full
            return lambda v: ((v << e) | (v >> ne)) & full

        steps = {}
        for rho in rho_list:
            rho_step = make_step(rho[0]) if rho else None
            for sset in _cyclic_sets(n, d, mode, level):
                if rho is not None and rho[0] in sset:
                    continue
                g0 = gcd(gcd(*sset), n)
                if rho is not None:
                    g0 = gcd(g0, rho[0])
                if g0 > 1:
                    continue
                if level >= 2 and not _unit_canonical_cyclic(n, sset, mode):
                    continue
                examined += 1
                stepset = []
                for e in set(sset):
                    if e % n == 0:
                        continue
                    st = steps.get(e)
                    if st is None:
                        st = steps[e] = make_step(e)
                    stepset.append(st)
                if rho_step is not None:
                    stepset.append(rho_step)
                diam = _bfs_at_most(stepset, full, k)
                if diam is not None:
                    gens = GeneratorSet(
                        tuple((e,) for e in sset), order2=rho, mode=mode
                    )
                    return Witness(group, gens, diam), examined
        return None, examined

    # general abelian group
    pool = _general_pool(group, mode)
    r = group.rank
    steps_cache: dict[GroupElement, object] = {}

    def general_step(el: GroupElement):
        st = steps_cache.get(el)
        if st is None:
            r1 = ops.rotator(el)
            neg = group.neg(el)
            if undirected and neg != el:
                r2 = ops.rotator(neg)
                st = lambda v: r1(v) | r2(v)
            else:
                st = r1
            steps_cache[el] = st
        return st

    for rho in rho_list:
        rho_step = general_step(rho) if rho is not None else None
        if level == 0:
            candidates = itertools.combinations_with_replacement(
                sorted(group.elements()), d
            )
        elif len(pool) < d:
            candidates = itertools.combinations_with_replacement(pool, d)
        else:
            candidates = itertools.combinations(pool, d)
        for sset in candidates:
            if rho is not None and rho in sset:
                continue
            if level >= 1 and p0 is not None:
                vecs = list(sset) + ([rho] if rho is not None else [])
                if not _mod_p_spans(vecs, p0, r):
                    continue
            examined += 1
            stepset = [general_step(el) for el in set(sset) if el != group.identity]
            if rho_step is not None:
                stepset.append(rho_step)
            diam = _bfs_at_most(stepset, full, k)
            if diam is not None:
                gens = GeneratorSet(tuple(sset), order2=rho, mode=mode)
                return Witness(group, gens, diam), examined
    return None, examined


def _bfs_at_most(steps, full: int, k: int) -> Optional[int]:
    """Diameter if it is <= k and the set generates, else None."""
    v = 1
    if v == full:
        return 0
    for level in range(1, k + 1):
        nv = v
        for st in steps:
            nv |= st(v)
        if nv == v:
            return None
        v = nv
        if v == full:
            return level
    return None


# ---------------------------------------------------------------------------
# the scan
# ---------------------------------------------------------------------------


def _groups_for(n: int, group_class: str) -> list[AbelianGroup]:
    if group_class == "cyclic":
        return [AbelianGroup((n,))]
    return enumerate_abelian_groups(n)


def _search_unit(args):
    factors, d, k, mode, order2, level, max_order = args
    group = AbelianGroup(tuple(factors))
    return _search_group(group, d, k, mode, order2, level, max_order)


def best_graph(
    spec: SearchSpec,
    checkpoint: Optional[str] = None,
    workers: int = 1,
) -> SearchResult:
    """Largest n in [n_min, n_max] admitting diameter <= k, scanning down.

    The first order with a witness is the answer, since every larger
    order was already scanned and n_max is a proven bound.  A budget
    overrun returns the partial result with exhaustive=False rather
    than guessing.
    """
    n_max = spec.resolved_n_max()
    started = time.monotonic()
    groups_examined = 0
    sets_examined = 0
    completed: set[int] = set()
    best: Optional[tuple[int, list[Witness]]] = None

    if checkpoint and os.path.exists(checkpoint):
        completed, best = _load_checkpoint(checkpoint, spec)

    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for n in range(n_max, spec.n_min - 1, -1):
            if best is not None:
                break
            if n in completed:
                continue
            if spec.max_seconds is not None:
                if time.monotonic() - started > spec.max_seconds:
                    return SearchResult(
                        best_n=0,
                        witnesses=(),
                        exhaustive=False,
                        groups_examined=groups_examined,
                        sets_examined=sets_examined,
                    )
            groups = _groups_for(n, spec.group_class)
            units = [
                (g.factors, spec.d, spec.k, spec.mode, spec.order2,
                 spec.canonicalization, spec.max_order)
                for g in groups
            ]
            if pool is not None:
                results = list(pool.map(_search_unit, units))
            else:
                results = [_search_unit(u) for u in units]
            hits = []
            for witness, count in results:
                groups_examined += 1
                sets_examined += count
                if witness is not None:
                    hits.append(witness)
            if hits:
                hits.sort(key=lambda w: (w.group.factors, w.gens.unrestricted))
                best = (n, hits)
            completed.add(n)
            if checkpoint:
                _save_checkpoint(checkpoint, spec, completed, best)
    finally:
        if pool is not None:
            pool.shutdown()

    if best is None:
        return SearchResult(0, (), True, groups_examined, sets_examined)
    return SearchResult(
        best_n=best[0],
        witnesses=tuple(best[1]),
        exhaustive=True,
        groups_examined=groups_examined,
        sets_examined=sets_examined,
    )


# ---------------------------------------------------------------------------
# checkpointing
# ---------------------------------------------------------------------------

_SPEC_KEYS = ("d", "k", "mode", "order2", "group_class", "n_min", "canonicalization")


def _witness_to_json(w: Witness) -> dict:
    return {
        "n": w.group.order,
        "group": list(w.group.factors),
        "gens": [list(g) for g in w.gens.unrestricted],
        "order2": list(w.gens.order2) if w.gens.order2 else None,
        "mode": w.gens.mode,
        "diameter": w.diameter,
    }


def _witness_from_json(data: dict) -> Witness:
    group = AbelianGroup(tuple(data["group"]))
    gens = GeneratorSet(
        tuple(tuple(g) for g in data["gens"]),
        order2=tuple(data["order2"]) if data.get("order2") else None,
        mode=data["mode"],
    )
    return Witness(group, gens, data["diameter"])


def _save_checkpoint(path: str, spec: SearchSpec, completed, best):
    payload = {
        "spec": {key: getattr(spec, key) for key in _SPEC_KEYS},
        "completed_n": sorted(completed),
        "best": None
        if best is None
        else {"n": best[0], "witnesses": [_witness_to_json(w) for w in best[1]]},
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(payload, fh, indent=1)
    os.replace(tmp, path)


def _load_checkpoint(path: str, spec: SearchSpec):
    with open(path) as fh:
        payload = json.load(fh)
    saved = payload.get("spec", {})
    mine = {key: getattr(spec, key) for key in _SPEC_KEYS}
    if saved != mine:
        raise ArgumentError(f"checkpoint {path} was written for a different search")
    best = None
    if payload.get("best"):
        best = (
            payload["best"]["n"],
            [_witness_from_json(w) for w in payload["best"]["witnesses"]],
        )
    return set(payload.get("completed_n", [])), best
