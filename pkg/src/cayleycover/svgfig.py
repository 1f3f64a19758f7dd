"""Deterministic SVG renderings of 2-D tilings and the face-coverage diagram.

Output is plain SVG 1.1 assembled from sorted iterations and fixed
decimal formatting, so a given input always produces identical bytes.
"""

from __future__ import annotations

from math import sqrt

from .coverings import L7_COVER_VECTORS, face_cover_labels
from .errors import ArgumentError
from .lattices import Lattice, member

_CELL = 20  # pixels per unit cell


def _svg_document(width: float, height: float, body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def diamond_tiling_svg(k: int, window: int | None = None) -> str:
    """Staircase tiling of the plane by l1 balls of radius k.

    Draws the covering translates of the diamond under the tiling
    lattice ((k, k+1), (-k-1, k)): unit-square cells, with heavy edges
    wherever two neighbouring cells belong to different translates.
    """
    if k < 1:
        raise ArgumentError("need k >= 1")
    lattice = Lattice(((k, k + 1), (-k - 1, k)))
    return _cover_tiling_svg(k, lattice, order2=False, window=window)


def order2_cover_svg(k: int, window: int | None = None) -> str:
    """Covering of the plane by radius-k and radius-(k-1) diamonds.

    The mixed covering behind one extra order-2 generator: big diamonds
    on the lattice ((2k+1, 1), (-1, 2k-1)), small ones on the coset
    through (k, k).  Cells covered twice are shaded.
    """
    if k < 1:
        raise ArgumentError("need k >= 1")
    lattice = Lattice(((2 * k + 1, 1), (-1, 2 * k - 1)))
    return _cover_tiling_svg(k, lattice, order2=True, window=window)


def _cover_tiling_svg(k: int, lattice: Lattice, order2: bool, window) -> str:
    if window is None:
        window = 4 * k + 3
    g = (k, k) if order2 else None

    def owners(x: int, y: int):
        """Sorted list of (shape, v) translate keys covering the cell."""
        out = []
        reach = 3 * k + 2
        for vx in range(x - reach, x + reach + 1):
            for vy in range(y - reach, y + reach + 1):
                if not member(lattice, (vx, vy)):
                    continue
                if abs(x - vx) + abs(y - vy) <= k:
                    out.append((0, vx, vy))
                if order2 and abs(x - g[0] - vx) + abs(y - g[1] - vy) <= k - 1:
                    out.append((1, vx, vy))
        return sorted(out)

    grid = {}
    for x in range(-1, window + 1):
        for y in range(-1, window + 1):
            grid[(x, y)] = owners(x, y)

    body = ['<g stroke="#000" stroke-width="2" stroke-linecap="square">']
    height = (window + 1) * _CELL

    def px(x):
        return (x + 0.5) * _CELL

    def py(y):
        return height - (y + 0.5) * _CELL

    # shade multiply-covered cells, then outline ownership changes
    shaded = []
    for (x, y), own in sorted(grid.items()):
        if 0 <= x < window and 0 <= y < window and len(own) > 1:
            shaded.append(
                f'<rect x="{px(x) - _CELL / 2:.1f}" y="{py(y) - _CELL / 2:.1f}" '
                f'width="{_CELL}" height="{_CELL}" fill="#ccc" stroke="none"/>'
            )
    for x in range(window):
        for y in range(window):
            own = grid[(x, y)]
            if grid.get((x + 1, y)) != own:
                body.append(
                    f'<line x1="{px(x) + _CELL / 2:.1f}" y1="{py(y) - _CELL / 2:.1f}" '
                    f'x2="{px(x) + _CELL / 2:.1f}" y2="{py(y) + _CELL / 2:.1f}"/>'
                )
            if grid.get((x, y + 1)) != own:
                body.append(
                    f'<line x1="{px(x) - _CELL / 2:.1f}" y1="{py(y) - _CELL / 2:.1f}" '
                    f'x2="{px(x) + _CELL / 2:.1f}" y2="{py(y) - _CELL / 2:.1f}"/>'
                )
    body.append("</g>")
    body.append('<g fill="#444">')
    for x in range(window):
        for y in range(window):
            body.append(f'<circle cx="{px(x):.1f}" cy="{py(y):.1f}" r="1.5"/>')
    body.append("</g>")
    return _svg_document(window * _CELL + _CELL, height + _CELL, shaded + body)


def face_coverage_svg(radius: int = 10) -> str:
    """The triangulated top face of the radius-`radius` simplex, each unit
    cell labeled by the covering translate's index (1-based)."""
    labels = face_cover_labels([vec for vec, _ in L7_COVER_VECTORS], radius)
    side = 36.0
    h = side * sqrt(3) / 2
    width = (radius + 1) * side
    height = (radius + 1) * h

    def corner(x: int, y: int) -> tuple[float, float]:
        # plane point (x, y, radius-x-y) drawn in triangular coordinates
        return (side * (x + y / 2.0) + side / 2, height - h * y - h / 2)

    body = ['<g stroke="#000" stroke-width="1" fill="none">']
    for (cell, _label) in labels:
        pts = " ".join(f"{cx:.2f},{cy:.2f}" for cx, cy in (corner(u[0], u[1]) for u in cell))
        body.append(f'<polygon points="{pts}"/>')
    body.append("</g>")
    body.append('<g font-family="monospace" font-size="9" text-anchor="middle">')
    for (cell, label) in labels:
        xs = [corner(u[0], u[1]) for u in cell]
        cx = sum(p[0] for p in xs) / 3
        cy = sum(p[1] for p in xs) / 3 + 3
        text = "-" if label is None else str(label)
        body.append(f'<text x="{cx:.2f}" y="{cy:.2f}">{text}</text>')
    body.append("</g>")
    return _svg_document(width + side, height + h, body)
