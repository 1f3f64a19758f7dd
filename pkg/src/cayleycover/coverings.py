"""Covering and tiling verification, fundamental regions, certificates.

A lattice L covers Z^d by the radius-k ball iff the quotient Cayley
graph of Z^d/L on the canonical images has diameter <= k, so covering
checks run as bitset BFS over the quotient.  The module also carries the
two exact rational certificates of local optimality (for the
body-centered cubic covering by l1 balls and for the determinant-84
simplex covering), and the triangulated-face proof that the latter
lattice really covers R^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ArgumentError, CertificateError
from .groups import GeneratorSet, GroupElement, diameter
from .lattices import (
    Lattice,
    hermite_normal_form,
    member,
    quotient_structure,
)
from .shapes import Shape, enumerate_points, octahedron, real_volume, size

#: the body-centered cubic lattice in 3-D (all coordinates of equal parity)
BCC3_BASIS = ((2, 0, 0), (0, 2, 0), (1, 1, 1))

#: determinant-84 lattice behind the best known simplex covering of R^3
L7_BASIS = ((-2, 2, 2), (3, -3, 3), (4, 3, -1))


def bcc_lattice(dim: int = 3) -> Lattice:
    rows = [[2 * (i == j) for j in range(dim)] for i in range(dim - 1)]
    rows.append([1] * dim)
    return Lattice(tuple(tuple(r) for r in rows))


def l7_lattice() -> Lattice:
    return Lattice(L7_BASIS)


@dataclass(frozen=True)
class CoverReport:
    covers: bool
    index: int
    shape_size: int
    efficiency_discrete: Fraction
    efficiency_real: Optional[Fraction]
    is_tiling: bool
    diameter: Optional[int]

    @property
    def density(self) -> Fraction:
        """Reciprocal of the discrete efficiency (>= 1 for coverings)."""
        return 1 / self.efficiency_discrete


@dataclass(frozen=True)
class FundamentalRegion:
    points: tuple[tuple[int, ...], ...]
    order_direction: tuple[Fraction, ...]


def _real_padding(shape: Shape) -> Fraction:
    # a covering of Z^d extends to R^d after padding the radius
    if shape.kind == "octahedron":
        return Fraction(shape.dim, 2)
    return Fraction(shape.dim)


def extended_order2_lattice(lattice: Lattice, coset: Sequence[int]) -> Lattice:
    """Stack L and the coset vector g into a (d+1)-dimensional lattice.

    The result is the kernel of Z^(d+1) -> (Z^d x Z_2) / N where N is
    generated by L x {0} and (g, 1); its quotient materializes the
    order-2 Cayley graph while keeping every lattice tool applicable.
    """
    d = lattice.dim
    g = tuple(int(x) for x in coset)
    if len(g) != d:
        raise ArgumentError("coset vector has wrong dimension")
    if not member(lattice, tuple(2 * x for x in g)):
        raise ArgumentError("2g must lie in the lattice")
    rows = [tuple(row) + (0,) for row in lattice.basis]
    rows.append(g + (1,))
    rows.append((0,) * d + (2,))
    h, _ = hermite_normal_form(rows)
    basis = [row for row in h if any(row)]
    return Lattice(tuple(basis))


def covers(
    lattice: Lattice, shape: Shape, coset: Optional[Sequence[int]] = None
) -> CoverReport:
    """Does shape + L cover Z^d?  Decided by BFS over the quotient.

    For the order-2 ball the caller supplies the coset vector g with
    2g in L; the covering condition is then
    (ball_k + L) union (ball_{k-1} + g + L) = Z^d.
    """
    if shape.dim != lattice.dim:
        raise ArgumentError("shape and lattice dimensions differ")
    k = shape.radius
    if shape.kind == "order2ball":
        if coset is None:
            raise ArgumentError("order2ball covering needs the coset vector g")
        ext = extended_order2_lattice(lattice, coset)
        q = quotient_structure(ext)
        rho = q.images[-1]
        unrestricted = q.images[:-1]
        if rho == q.group.identity:
            # g in L: the extra generator collapses and the ball_k part decides
            gens = GeneratorSet(unrestricted, mode="undirected")
        else:
            gens = GeneratorSet(unrestricted, order2=rho, mode="undirected")
    else:
        if coset is not None:
            raise ArgumentError("coset vector only applies to order2ball")
        q = quotient_structure(lattice)
        mode = "undirected" if shape.kind == "octahedron" else "directed"
        gens = GeneratorSet(q.images, mode=mode)

    res = diameter(q.group, gens)
    assert res.generates  # canonical images always generate the quotient
    covered = res.diameter <= k
    index = lattice.index
    n_shape = size(shape)
    eff_real = None
    if shape.kind != "order2ball":
        eff_real = index / real_volume(shape, k + _real_padding(shape))
    return CoverReport(
        covers=covered,
        index=index,
        shape_size=n_shape,
        efficiency_discrete=Fraction(index, n_shape),
        efficiency_real=eff_real,
        is_tiling=covered and index == n_shape,
        diameter=res.diameter,
    )


def _positive_lattice_points(
    lattice: Lattice, radius: int, direction: tuple[Fraction, ...]
) -> list[tuple[int, ...]]:
    """Nonzero lattice vectors of l1 norm <= radius with v > 0 in the
    direction order (dot product, lexicographic tie-break)."""
    d = lattice.dim
    out = []
    for v in enumerate_points(octahedron(d, radius)):
        if v == (0,) * d or not member(lattice, v):
            continue
        dot = sum(Fraction(x) * w for x, w in zip(v, direction))
        if (dot, v) > (0, (0,) * d):
            out.append(v)
    return out


def fundamental_region(
    lattice: Lattice,
    shape: Shape,
    direction: Sequence[Fraction | int] = None,
) -> FundamentalRegion:
    """Carve a lattice tiling out of a covering shape.

    Keeps the points of S in no translate S + v with v > 0; the result
    has exactly [Z^d : L] points and meets every coset once.  Any vector
    of L meeting S - S has l1 norm at most 2k, so candidates are scanned
    inside the doubled ball.
    """
    if shape.kind == "order2ball":
        raise ArgumentError("fundamental regions are extracted from octahedra/tetrahedra")
    if direction is None:
        direction = (1,) * shape.dim
    direction = tuple(Fraction(x) for x in direction)
    if len(direction) != shape.dim or all(x == 0 for x in direction):
        raise ArgumentError("direction must be a nonzero d-vector")
    report = covers(lattice, shape)
    if not report.covers:
        raise ArgumentError("the shape does not cover Z^d against this lattice")

    pts = list(enumerate_points(shape))
    pt_set = set(pts)
    positives = _positive_lattice_points(lattice, 2 * shape.radius, direction)
    region = [
        x
        for x in pts
        if all(tuple(a - b for a, b in zip(x, v)) not in pt_set for v in positives)
    ]

    q = quotient_structure(lattice)
    seen: set[GroupElement] = set()
    for x in region:
        img = q.group.identity
        for c, e in zip(x, q.images):
            img = q.group.add(img, tuple((c * ei) % m for ei, m in zip(e, q.group.factors)))
        seen.add(img)
    if len(region) != lattice.index or len(seen) != lattice.index:
        raise AssertionError("tiling extraction failed the bijection check")
    return FundamentalRegion(points=tuple(region), order_direction=direction)


# ---------------------------------------------------------------------------
# The 84-point simplex covering of R^3: exact face-coverage certificate
# ---------------------------------------------------------------------------

#: the 14 short vectors, each with its combination over the basis rows
L7_COVER_VECTORS: tuple[tuple[tuple[int, int, int], tuple[int, int, int]], ...] = (
    ((-2, 2, 2), (1, 0, 0)),
    ((3, -3, 3), (0, 1, 0)),
    ((4, 3, -1), (0, 0, 1)),
    ((6, 1, -3), (-1, 0, 1)),
    ((5, -5, 1), (-1, 1, 0)),
    ((1, 6, -4), (0, -1, 1)),
    ((2, 5, 1), (1, 0, 1)),
    ((1, -1, 5), (1, 1, 0)),
    ((-1, 1, 7), (2, 1, 0)),
    ((3, 4, -6), (-1, -1, 1)),
    ((-7, 7, 1), (2, -1, 0)),
    ((-5, -2, 8), (2, 1, -1)),
    ((-1, 8, -2), (1, -1, 1)),
    ((8, -1, -5), (-2, 0, 1)),
)

FACE_RADIUS = 10


@dataclass(frozen=True)
class FaceCoverResult:
    ok: bool
    uncovered_cell: Optional[tuple[tuple[int, int, int], ...]] = None

    def __bool__(self) -> bool:
        return self.ok


def _face_cells(radius: int):
    """Unit triangles of both orientations tiling the plane section
    x+y+z = radius, x,y,z >= 0, as 3-D vertex triples."""
    r = radius
    for x in range(r):
        for y in range(r - x):
            yield ((x, y, r - x - y), (x + 1, y, r - x - y - 1), (x, y + 1, r - x - y - 1))
            if x + y <= r - 2:
                yield (
                    (x + 1, y, r - x - y - 1),
                    (x, y + 1, r - x - y - 1),
                    (x + 1, y + 1, r - x - y - 2),
                )


def face_cover(
    vectors: Sequence[tuple[int, int, int]], radius: int = FACE_RADIUS
) -> FaceCoverResult:
    """Check that shrunk translates cover the top face of the simplex.

    The translate of the radius-(r-1) simplex by v = (a,b,c) meets the
    plane x+y+z = r in the triangle {u >= v componentwise} whenever
    a+b+c >= 1; a unit cell lies inside that triangle iff all three of
    its vertices satisfy the bound, so the whole check is exact integer
    comparison, cell by cell.
    """
    vecs = [tuple(v) for v in vectors if sum(v) >= 1]
    for cell in _face_cells(radius):
        covered = any(
            all(all(u[i] >= v[i] for i in range(3)) for u in cell) for v in vecs
        )
        if not covered:
            return FaceCoverResult(False, cell)
    return FaceCoverResult(True)


def face_cover_labels(
    vectors: Sequence[tuple[int, int, int]], radius: int = FACE_RADIUS
) -> list[tuple[tuple[tuple[int, int, int], ...], Optional[int]]]:
    """Each unit cell of the top face with the 1-based index of the first
    translate containing it (None when uncovered); diagram fodder."""
    vecs = [tuple(v) for v in vectors]
    out = []
    for cell in _face_cells(radius):
        label = None
        for i, v in enumerate(vecs, start=1):
            if sum(v) >= 1 and all(all(u[j] >= v[j] for j in range(3)) for u in cell):
                label = i
                break
        out.append((cell, label))
    return out


@dataclass(frozen=True)
class SimplexCoverCertificate:
    ok: bool
    failed_check: Optional[str] = None
    uncovered_cell: Optional[tuple[tuple[int, int, int], ...]] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_simplex_cover_L7(
    vectors: Optional[Sequence[tuple[int, int, int]]] = None,
) -> SimplexCoverCertificate:
    """Exact proof that the radius-10 simplex covers R^3 against L'_7.

    Verifies (a) the 14 listed vectors lie in the lattice (with their
    stated combinations, when using the built-in list), (b) their
    coordinate sums lie in [1, 8], and (c) the shrunk radius-9
    translates cover every unit cell of the top face; covering the face
    bootstraps to all of R^3 by induction on the radius, so these
    finite checks are the whole proof.  Passing a perturbed `vectors`
    list reruns the same checks against it.
    """
    basis = L7_BASIS
    lat = Lattice(basis)
    if vectors is None:
        items = [(vec, combo) for vec, combo in L7_COVER_VECTORS]
    else:
        items = [(tuple(v), None) for v in vectors]
    for vec, combo in items:
        if combo is not None:
            built = tuple(
                sum(c * basis[r][i] for r, c in enumerate(combo)) for i in range(3)
            )
            if built != vec:
                return SimplexCoverCertificate(False, failed_check=f"combination {vec}")
        if not member(lat, vec):
            return SimplexCoverCertificate(False, failed_check=f"membership {vec}")
        if not 1 <= sum(vec) <= 8:
            return SimplexCoverCertificate(False, failed_check=f"coordinate sum {vec}")
    face = face_cover([vec for vec, _ in items])
    if not face:
        return SimplexCoverCertificate(
            False, failed_check="face coverage", uncovered_cell=face.uncovered_cell
        )
    return SimplexCoverCertificate(True)


# ---------------------------------------------------------------------------
# Local-optimality certificates (exact rational arithmetic throughout)
# ---------------------------------------------------------------------------

Vec9 = tuple[Fraction, ...]


def _fr(seq) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in seq)


@dataclass(frozen=True)
class Certificate:
    """Data certifying that a lattice locally maximizes the determinant
    among lattices whose shape translates still cover R^d.

    The base point is the concatenated basis (a 9-vector); each
    constraint normal u_i is active at the base point; the gradient of
    the determinant decomposes over the active normals with nonnegative
    coefficients; and the determinant restricted to the null directions
    w_j follows the stated polynomial curve, maximized at the origin.
    """

    label: str
    base_vectors: Vec9
    gradient: Vec9
    constraint_normals: tuple[tuple[Vec9, Fraction], ...]
    cone_decompositions: tuple[tuple[Fraction, ...], ...]
    independent_indices: tuple[int, ...]
    null_space_generators: tuple[Vec9, ...]
    det_curve: tuple[tuple[tuple[int, ...], Fraction], ...]
    curve_samples: tuple[tuple[Fraction, ...], ...]


THM16_CERTIFICATE = Certificate(
    label="thm16",
    base_vectors=_fr((1, 1, 1, 1, -1, 1, 1, 1, -1)),
    gradient=_fr((0, 2, 2, 2, -2, 0, 2, 0, -2)),
    constraint_normals=(
        (_fr((1, 1, 1, 0, 0, 0, 0, 0, 0)), Fraction(3)),
        (_fr((0, 0, 0, 1, -1, 1, 0, 0, 0)), Fraction(3)),
        (_fr((0, 0, 0, 0, 0, 0, 1, 1, -1)), Fraction(3)),
        (_fr((-1, 1, 1, 1, -1, -1, 1, -1, -1)), Fraction(3)),
        (_fr((-1, 1, 1, 2, 0, 0, 1, 1, -1)), Fraction(6)),
        (_fr((0, 2, 0, 1, -1, 1, 1, -1, -1)), Fraction(6)),
        (_fr((-1, 1, 1, 1, -1, 1, 2, 0, 0)), Fraction(6)),
        (_fr((1, 1, 1, 0, -2, 0, 1, -1, -1)), Fraction(6)),
        (_fr((0, 0, 2, 1, -1, -1, 1, 1, -1)), Fraction(6)),
        (_fr((1, 1, 1, 1, -1, -1, 0, 0, -2)), Fraction(6)),
    ),
    cone_decompositions=(
        _fr((1, 1, 1, 1, 0, 0, 0, 0, 0, 0)),
        _fr((0, 0, 0, 0, 1, 0, 0, 1, 0, 0)),
        _fr((0, 0, 0, 0, 0, 1, 0, 0, 1, 0)),
        _fr((0, 0, 0, 0, 0, 0, 1, 0, 0, 1)),
    ),
    independent_indices=(0, 1, 2, 3, 4, 5, 6),
    null_space_generators=(
        _fr((1, 0, -1, 1, 0, -1, 1, 0, 1)),
        _fr((-1, 1, 0, -1, -1, 0, -1, 1, 0)),
    ),
    # 4(1-r)(1+s)(1+r-s) expanded
    det_curve=(
        ((0, 0), Fraction(4)),
        ((1, 1), Fraction(4)),
        ((2, 0), Fraction(-4)),
        ((0, 2), Fraction(-4)),
        ((2, 1), Fraction(-4)),
        ((1, 2), Fraction(4)),
    ),
    curve_samples=tuple(
        (Fraction(a), Fraction(b))
        for a in (-2, -1, Fraction(1, 2), 3)
        for b in (-2, -1, Fraction(1, 2), 3)
    ),
)

THM20_CERTIFICATE = Certificate(
    label="thm20",
    base_vectors=_fr((-2, 2, 2, 3, -3, 3, 4, 3, -1)),
    gradient=_fr((-6, 15, 21, 8, -6, 14, 12, 12, 0)),
    constraint_normals=(
        (_fr((1, 2, 2, 1, 1, 1, 0, 0, -1)), Fraction(10)),
        (_fr((1, 1, 2, 1, 0, 1, 0, 0, 0)), Fraction(10)),
        (_fr((0, 1, 1, 1, 0, 1, 0, 0, 0)), Fraction(10)),
        (_fr((-1, 1, 0, 1, 0, 1, 0, 0, 0)), Fraction(10)),
        (_fr((-1, 0, 1, 1, 0, 0, 0, 1, 0)), Fraction(10)),
        (_fr((0, -1, 1, 0, -1, 0, 1, 1, 0)), Fraction(10)),
        (_fr((-1, 1, 1, -1, 0, 0, 1, 1, 0)), Fraction(10)),
        (_fr((1, 0, 1, 0, -1, 0, 1, 1, 0)), Fraction(10)),
        (_fr((0, 2, 1, -1, -1, 0, 1, 0, 0)), Fraction(10)),
        (_fr((-2, -1, -1, 0, 0, 1, 1, 1, 0)), Fraction(10)),
        (_fr((-1, 0, -1, 0, 0, 1, 1, 1, 0)), Fraction(10)),
        (_fr((-1, 0, 1, -1, -1, 0, 1, 1, 1)), Fraction(10)),
        (_fr((0, 1, 2, -1, -1, -1, 1, 1, 0)), Fraction(10)),
    ),
    cone_decompositions=(
        (
            Fraction(1),
            Fraction(24, 5),
            Fraction(0),
            Fraction(32, 5),
            Fraction(1),
            Fraction(8, 5),
            Fraction(16, 5),
            Fraction(17, 5),
            Fraction(1),
            Fraction(9, 5),
            Fraction(0),
            Fraction(1),
            Fraction(0),
        ),
    ),
    independent_indices=(0, 1, 3, 4, 5, 6, 7, 9),
    null_space_generators=(_fr((0, 0, 0, 1, 1, -1, 2, -1, 1)),),
    # 84 - 12 r^2
    det_curve=(((0,), Fraction(84)), ((2,), Fraction(-12))),
    curve_samples=tuple(
        (Fraction(x),)
        for x in (
            -2,
            -1,
            Fraction(-1, 2),
            Fraction(-1, 3),
            Fraction(1, 3),
            Fraction(1, 2),
            1,
            3,
        )
    ),
)

CERTIFICATES = {"thm16": THM16_CERTIFICATE, "thm20": THM20_CERTIFICATE}


@dataclass(frozen=True)
class CertificateReport:
    label: str
    det_at_base: Fraction
    checks_passed: tuple[str, ...]


def _det3(rows) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _flat_det(vec: Vec9) -> Fraction:
    return _det3((vec[0:3], vec[3:6], vec[6:9]))


def _flat_gradient(vec: Vec9) -> Vec9:
    """Gradient of the 3x3 determinant: the cofactor matrix, flattened."""
    rows = (vec[0:3], vec[3:6], vec[6:9])
    grad = []
    for i in range(3):
        for j in range(3):
            minor = [
                [rows[r][c] for c in range(3) if c != j] for r in range(3) if r != i
            ]
            cof = minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0]
            grad.append(cof if (i + j) % 2 == 0 else -cof)
    return tuple(grad)


def _rank(vectors: Sequence[Vec9]) -> int:
    a = [list(v) for v in vectors]
    rank = 0
    cols = len(a[0]) if a else 0
    for col in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col] / a[rank][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def _dot(a, b) -> Fraction:
    return sum(x * y for x, y in zip(a, b))


def _curve_value(curve, params) -> Fraction:
    total = Fraction(0)
    for exps, coeff in curve:
        term = coeff
        for e, t in zip(exps, params):
            term *= t**e
        total += term
    return total


def certify_local_optimality(cert: Certificate) -> CertificateReport:
    """Verify every identity of a local-optimality certificate exactly.

    Raises CertificateError naming the first identity that fails.
    """
    v = cert.base_vectors
    passed = []

    for idx, (u, bound) in enumerate(cert.constraint_normals, start=1):
        got = _dot(u, v)
        if got != bound:
            raise CertificateError(
                f"{cert.label}: constraint u_{idx} active at base",
                f"u_{idx}.v = {got}, expected {bound}",
            )
    passed.append("constraints-active")

    subset = [cert.constraint_normals[i][0] for i in cert.independent_indices]
    if _rank(subset) != len(subset):
        raise CertificateError(f"{cert.label}: stated normals independent")
    if _rank(cert.null_space_generators) != len(cert.null_space_generators):
        raise CertificateError(f"{cert.label}: null-space generators independent")
    if len(subset) + len(cert.null_space_generators) != 9:
        raise CertificateError(f"{cert.label}: null-space dimension")
    for w in cert.null_space_generators:
        for idx, (u, _) in enumerate(cert.constraint_normals, start=1):
            if _dot(u, w) != 0:
                raise CertificateError(
                    f"{cert.label}: u_{idx} orthogonal to null direction"
                )
    passed.append("null-space")

    for coeffs in cert.cone_decompositions:
        if len(coeffs) != len(cert.constraint_normals):
            raise CertificateError(f"{cert.label}: cone coefficient count")
        if any(c < 0 for c in coeffs):
            raise CertificateError(f"{cert.label}: cone coefficients nonnegative")
        for pos in range(9):
            got = sum(
                c * u[pos] for c, (u, _) in zip(coeffs, cert.constraint_normals)
            )
            if got != cert.gradient[pos]:
                raise CertificateError(
                    f"{cert.label}: cone decomposition reproduces gradient"
                )
    passed.append("cone-decomposition")

    det_base = _flat_det(v)
    if det_base != _curve_value(cert.det_curve, (0,) * len(cert.null_space_generators)):
        raise CertificateError(f"{cert.label}: curve constant term equals det at base")
    for params in cert.curve_samples:
        point = list(v)
        for t, w in zip(params, cert.null_space_generators):
            point = [p + t * wi for p, wi in zip(point, w)]
        direct = _flat_det(tuple(point))
        claimed = _curve_value(cert.det_curve, params)
        if direct != claimed:
            raise CertificateError(
                f"{cert.label}: determinant curve at {tuple(map(str, params))}",
                f"direct {direct} vs curve {claimed}",
            )
    passed.append("det-curve")

    if _flat_gradient(v) != cert.gradient:
        raise CertificateError(f"{cert.label}: gradient equals cofactor matrix")
    passed.append("gradient")

    return CertificateReport(cert.label, det_base, tuple(passed))


# ---------------------------------------------------------------------------
# Efficiency reporting
# ---------------------------------------------------------------------------

#: conjectured best real covering efficiencies in 3-D (unproved; recorded
#: for reporting only, never asserted by any verification here)
CONJECTURED_BEST_EFFICIENCY_3D = {
    "octahedron": Fraction(8, 9),
    "tetrahedron": Fraction(63, 125),
}


def efficiency_pair(
    d: int, k: int, n: int, mode: str
) -> tuple[Fraction, Fraction]:
    """Discrete and real covering efficiencies of a size-n quotient.

    Discrete is n over the ball size; real pads the radius by d/2
    (undirected / l1 ball) or d (directed / simplex) before taking the
    volume, matching how a Z^d covering extends to R^d.
    """
    if mode == "undirected":
        shape = Shape("octahedron", d, k)
        radius = Fraction(k) + Fraction(d, 2)
    elif mode == "directed":
        shape = Shape("tetrahedron", d, k)
        radius = Fraction(k + d)
    else:
        raise ArgumentError(f"unknown mode {mode!r}")
    return Fraction(n, size(shape)), n / real_volume(shape, radius)


def format_6dec(x: Fraction) -> str:
    """Render an exact rational with six decimals (round half up)."""
    sign = "-" if x < 0 else ""
    scaled = (abs(Fraction(x)) * 10**6 + Fraction(1, 2)).__floor__()
    whole, frac = divmod(scaled, 10**6)
    return f"{sign}{whole}.{frac:06d}"


def covering_report_rows(
    entries: Sequence[tuple[int, int]], mode: str, d: int = 3
) -> list[dict]:
    """Efficiency report rows for verified (diameter, size) pairs.

    Both efficiencies are computed as exact rationals and rendered to
    six decimals alongside.
    """
    rows = []
    for k, n in entries:
        eff_d, eff_r = efficiency_pair(d, k, n, mode)
        rows.append(
            {
                "k": k,
                "n": n,
                "eff_discrete": eff_d,
                "eff_real": eff_r,
                "eff_discrete_6dec": format_6dec(eff_d),
                "eff_real_6dec": format_6dec(eff_r),
            }
        )
    return rows
