"""Integer lattices in Z^d: normal forms, kernels, quotients, rounding.

Everything here is exact: Python integers for the normal forms and
`fractions.Fraction` for rational lattices.  The Hermite form is the
lower-triangular row-style one (positive pivots, entries below a pivot
reduced into [0, pivot)), which makes it a canonical representative, so
two lattices are equal iff their HNF matrices are equal.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ArgumentError, DegeneracyError
from .groups import AbelianGroup, GroupElement

IntMatrix = tuple[tuple[int, ...], ...]


def _as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    mat = tuple(tuple(int(x) for x in row) for row in rows)
    if not mat or any(len(r) != len(mat[0]) for r in mat):
        raise ArgumentError("matrix rows must be nonempty and of equal length")
    return mat


@dataclass(frozen=True)
class Lattice:
    """Full-rank sublattice of Z^d, given by d basis rows."""

    basis: IntMatrix

    def __post_init__(self):
        mat = _as_matrix(self.basis)
        object.__setattr__(self, "basis", mat)
        if len(mat) != len(mat[0]):
            raise ArgumentError("lattice basis must be square")
        if det(mat) == 0:
            raise DegeneracyError("lattice basis is singular")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @functools.cached_property
    def index(self) -> int:
        """[Z^d : L] = |det| of the basis."""
        return abs(det(self.basis))

    @functools.cached_property
    def hnf(self) -> IntMatrix:
        return hermite_normal_form(self.basis)[0]

    def same_lattice(self, other: "Lattice") -> bool:
        return self.hnf == other.hnf

    def scaled(self, m: int) -> "Lattice":
        if m < 1:
            raise ArgumentError("scale must be >= 1")
        return Lattice(tuple(tuple(m * x for x in row) for row in self.basis))


@dataclass(frozen=True)
class RationalLattice:
    """Full-rank lattice in R^d with an exact rational basis."""

    basis: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        mat = tuple(tuple(Fraction(x) for x in row) for row in self.basis)
        object.__setattr__(self, "basis", mat)
        if not mat or any(len(r) != len(mat) for r in mat):
            raise ArgumentError("basis must be square")
        if _fraction_det(mat) == 0:
            raise DegeneracyError("rational basis is singular")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @functools.cached_property
    def det(self) -> Fraction:
        return _fraction_det(self.basis)


@dataclass(frozen=True)
class QuotientStructure:
    """Z^d/L presented on invariant factors, with the images of the e_i."""

    group: AbelianGroup
    images: tuple[GroupElement, ...]


def det(mat: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in mat]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ArgumentError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for j in range(n - 1):
        if a[j][j] == 0:
            for i in range(j + 1, n):
                if a[i][j]:
                    a[j], a[i] = a[i], a[j]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(j + 1, n):
            for c in range(j + 1, n):
                a[i][c] = (a[i][c] * a[j][j] - a[i][j] * a[j][c]) // prev
            a[i][j] = 0
        prev = a[j][j]
    return sign * a[-1][-1]


def _fraction_det(mat) -> Fraction:
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    out = Fraction(1)
    for j in range(n):
        piv = None
        for i in range(j, n):
            if a[i][j]:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != j:
            a[j], a[piv] = a[piv], a[j]
            out = -out
        out *= a[j][j]
        for i in range(j + 1, n):
            f = a[i][j] / a[j][j]
            if f:
                for c in range(j, n):
                    a[i][c] -= f * a[j][c]
    return out


def hermite_normal_form(
    rows: Sequence[Sequence[int]],
) -> tuple[IntMatrix, IntMatrix]:
    """Lower-triangular row HNF with transform: U * M = H, U unimodular.

    Columns are cleared right to left so pivots land on the trailing
    diagonal; rank-deficient rows surface as leading zero rows of H.
    For square nonsingular M this yields H lower triangular with positive
    diagonal and, below each pivot, entries reduced into [0, pivot).
    """
    mat = _as_matrix(rows)
    m, n = len(mat), len(mat[0])
    a = [list(row) for row in mat]
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    pivot = m - 1
    for col in range(n - 1, -1, -1):
        if pivot < 0:
            break
        # gcd-eliminate column `col` over rows 0..pivot, leaving row `pivot`
        while True:
            nonzero = [i for i in range(pivot + 1) if a[i][col]]
            if not nonzero:
                break
            i0 = min(nonzero, key=lambda i: abs(a[i][col]))
            if i0 != pivot:
                a[i0], a[pivot] = a[pivot], a[i0]
                u[i0], u[pivot] = u[pivot], u[i0]
            done = True
            for i in range(pivot):
                if a[i][col]:
                    q = a[i][col] // a[pivot][col]
                    _row_sub(a[i], a[pivot], q)
                    _row_sub(u[i], u[pivot], q)
                    if a[i][col]:
                        done = False
            if done:
                break
        if a[pivot][col]:
            if a[pivot][col] < 0:
                a[pivot] = [-x for x in a[pivot]]
                u[pivot] = [-x for x in u[pivot]]
            # reduce the already-placed rows below into [0, pivot)
            for i in range(pivot + 1, m):
                q = a[i][col] // a[pivot][col]
                if q:
                    _row_sub(a[i], a[pivot], q)
                    _row_sub(u[i], u[pivot], q)
            pivot -= 1
    return tuple(map(tuple, a)), tuple(map(tuple, u))


def _row_sub(row, other, q):
    for c in range(len(row)):
        row[c] -= q * other[c]


def smith_normal_form(
    rows: Sequence[Sequence[int]],
) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith form with transforms: U * M * V = D, d_1 | d_2 | ... all > 0.

    Requires M square and nonsingular.
    """
    mat = _as_matrix(rows)
    n = len(mat)
    if len(mat[0]) != n:
        raise ArgumentError("Smith form here is for square matrices")
    if det(mat) == 0:
        raise DegeneracyError("matrix is singular")
    a = [list(row) for row in mat]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_sub(j_dst, j_src, q):
        for i in range(n):
            a[i][j_dst] -= q * a[i][j_src]
            v[i][j_dst] -= q * v[i][j_src]

    def col_swap(j1, j2):
        for i in range(n):
            a[i][j1], a[i][j2] = a[i][j2], a[i][j1]
            v[i][j1], v[i][j2] = v[i][j2], v[i][j1]

    for t in range(n):
        while True:
            # move the absolutely smallest nonzero of the submatrix to (t, t)
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            bi, bj = best
            if bi != t:
                a[bi], a[t] = a[t], a[bi]
                u[bi], u[t] = u[t], u[bi]
            if bj != t:
                col_swap(bj, t)
            dirty = False
            for i in range(t + 1, n):
                q = a[i][t] // a[t][t]
                if q:
                    _row_sub(a[i], a[t], q)
                    _row_sub(u[i], u[t], q)
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                if q:
                    col_sub(j, t, q)
                if a[t][j]:
                    dirty = True
            if dirty:
                continue
            # pivot must divide every remaining entry for the divisor chain
            piv = a[t][t]
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if a[i][j] % piv:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _row_sub(a[t], a[offender], -1)
            _row_sub(u[t], u[offender], -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return tuple(map(tuple, a)), tuple(map(tuple, u)), tuple(map(tuple, v))


def kernel_lattice(group: AbelianGroup, gens: Sequence[GroupElement]) -> Lattice:
    """The relation lattice {x in Z^d : sum x_i g_i = 0 in the group}.

    Its index equals the group order exactly when the g_i generate;
    otherwise the would-be quotient is a proper subgroup and this raises.
    """
    d = len(gens)
    r = group.rank
    for g in gens:
        if not group.contains(g):
            raise ArgumentError(f"generator {g} does not belong to {group}")
    # left kernel of the stacked (d+r) x r matrix [gens; diag(factors)]
    stacked = [list(g) for g in gens] + [
        [group.factors[j] if i == j else 0 for j in range(r)] for i in range(r)
    ]
    h, u = hermite_normal_form(stacked)
    zero_rows = [i for i, row in enumerate(h) if not any(row)]
    if len(zero_rows) != d:
        raise DegeneracyError("unexpected kernel rank")  # cannot happen: diag(m) is full rank
    basis = [u[i][:d] for i in zero_rows]
    lat = Lattice(canonical_basis(basis))
    if lat.index != group.order:
        raise ArgumentError(
            f"generators span a proper subgroup of index {group.order // lat.index} in {group}"
        )
    return lat


def canonical_basis(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """HNF rows of a square integer basis (deterministic representative)."""
    return hermite_normal_form(rows)[0]


def quotient_structure(lattice: Lattice) -> QuotientStructure:
    """The group Z^d/L in invariant-factor form plus the images of the e_i.

    From U*M*V = D: a vector y lies in L iff (y V)_j == 0 mod d_j for
    every j, so y maps to (y V mod d) and the rows of V give the images
    of the canonical basis. Unit factors are dropped.
    """
    dmat, _, v = smith_normal_form(lattice.basis)
    diag = [dmat[j][j] for j in range(lattice.dim)]
    keep = [j for j, dj in enumerate(diag) if dj > 1]
    if not keep:
        group = AbelianGroup((1,))
        return QuotientStructure(group, tuple((0,) for _ in range(lattice.dim)))
    group = AbelianGroup(tuple(diag[j] for j in keep))
    images = tuple(
        tuple(v[i][j] % diag[j] for j in keep) for i in range(lattice.dim)
    )
    return QuotientStructure(group, images)


def member(lattice: Lattice, x: Sequence[int]) -> bool:
    """Whether x is an integral combination of the basis rows."""
    if len(x) != lattice.dim:
        raise ArgumentError("dimension mismatch")
    h = lattice.hnf
    n = lattice.dim
    rem = list(map(int, x))
    for j in range(n - 1, -1, -1):
        q, r = divmod(rem[j], h[j][j])
        if r:
            return False
        if q:
            for c in range(j + 1):
                rem[c] -= q * h[j][c]
    return True


def scale_covering(
    lattice: Lattice, k: int, m: int, kind: str
) -> tuple[Lattice, int]:
    """Blow a covering up by an integer factor m.

    If the radius-k ball covers Z^d against L, the scaled lattice mL is
    covered by radius mk + floor(m/2)*d (l1 balls) or mk + (m-1)*d
    (simplices): points round to the nearest / floorward point of mZ^d.
    """
    if m < 1:
        raise ArgumentError("m must be >= 1")
    d = lattice.dim
    if kind == "octahedron":
        new_k = m * k + (m // 2) * d
    elif kind == "tetrahedron":
        new_k = m * k + (m - 1) * d
    else:
        raise ArgumentError("kind must be octahedron or tetrahedron")
    return lattice.scaled(m), new_k


def round_real_lattice(lattice: RationalLattice, t) -> Lattice:
    """Round t * basis to the nearest integer matrix (ties toward +inf)."""
    t = Fraction(t)
    if t <= 0:
        raise ArgumentError("t must be positive")
    rows = tuple(
        tuple(_round_half_up(t * x) for x in row) for row in lattice.basis
    )
    if det(rows) == 0:
        raise DegeneracyError("rounded basis is singular; increase t")
    return Lattice(rows)


def _round_half_up(x: Fraction) -> int:
    # floor(x + 1/2): ties go toward +infinity, the documented convention
    return (2 * x.numerator + x.denominator) // (2 * x.denominator)
