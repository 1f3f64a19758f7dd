"""Command-line front end: construct, verify, search, certify, report.

Output is TSV with a header row by default, or JSON with --json.  Exit
codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import constructions, coverings, search, svgfig
from .errors import ArgumentError, CertificateError
from .groups import AbelianGroup, GeneratorSet, diameter
from .lattices import Lattice
from .reference import DIRECTED_3GEN
from .shapes import Shape, size
from .coverings import format_6dec

USAGE_ERROR = 2
VERIFY_ERROR = 1


def _parse_group(text: str) -> AbelianGroup:
    try:
        factors = tuple(int(part) for part in text.lower().split("x"))
    except ValueError:
        raise ArgumentError(f"bad group syntax {text!r}; use e.g. 84 or 93x3") from None
    return AbelianGroup(tuple(sorted(factors)))


def _parse_gens(text: str, group: AbelianGroup) -> tuple:
    gens = []
    for chunk in text.split(";"):
        coords = tuple(int(c) for c in chunk.split(","))
        if group.rank == 1 and len(coords) > 1 and ";" not in text:
            # "2,9,35" on a cyclic group means three single-coordinate generators
            return tuple(group.element((c,)) for c in coords)
        gens.append(group.element(coords))
    return tuple(gens)


def _parse_lattice(text: str) -> Lattice:
    rows = tuple(
        tuple(int(c) for c in chunk.split(",")) for chunk in text.split(";")
    )
    return Lattice(rows)


def _emit(rows: list[dict], json_mode: bool, stream=None) -> None:
    stream = stream or sys.stdout
    if json_mode:
        json.dump(rows if len(rows) != 1 else rows[0], stream, indent=1, default=str)
        stream.write("\n")
        return
    if not rows:
        return
    header = list(rows[0])
    stream.write("\t".join(header) + "\n")
    for row in rows:
        stream.write("\t".join(str(row.get(col, "")) for col in header) + "\n")


def _gens_to_text(gens: GeneratorSet) -> str:
    body = ";".join(",".join(str(c) for c in g) for g in gens.unrestricted)
    if gens.order2 is not None:
        body += " rho=" + ",".join(str(c) for c in gens.order2)
    return body


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_diameter(args) -> int:
    group = _parse_group(args.group)
    gens = _parse_gens(args.gens, group)
    order2 = group.element(tuple(int(c) for c in args.order2.split(","))) if args.order2 else None
    mode = "directed" if args.directed else "undirected"
    res = diameter(group, GeneratorSet(gens, order2=order2, mode=mode))
    if args.json:
        _emit(
            [
                {
                    "group": list(group.factors),
                    "generates": res.generates,
                    "diameter": res.diameter,
                    "ball_sizes": list(res.ball_sizes),
                }
            ],
            True,
        )
    else:
        print(res.diameter if res.generates else "does-not-generate")
    return 0 if res.generates else VERIFY_ERROR


def _cmd_construct(args) -> int:
    opts = {}
    if args.d is not None:
        opts["d"] = args.d
    if args.mode is not None:
        opts["mode"] = args.mode
    if args.alternate:
        opts["alternate"] = True
    if args.base_family:
        opts["base_family"] = args.base_family
    con = constructions.build(args.family, args.k, **opts)
    row = {
        "family": con.family,
        "params": json.dumps(con.params, default=str),
        "group": "x".join(str(m) for m in con.group.factors) if con.group else "",
        "gens": _gens_to_text(con.gens) if con.gens else "",
        "lattice": ";".join(",".join(str(x) for x in r) for r in con.lattice.basis)
        if con.lattice
        else "",
        "coset": ",".join(str(x) for x in con.coset) if con.coset else "",
        "predicted_size": con.predicted_size,
        "predicted_diameter": con.predicted_diameter,
        "diameter_exact": con.diameter_exact,
    }
    status = 0
    if args.verify:
        if con.group is None:
            row["verified"] = "no-graph"
        else:
            res = diameter(con.group, con.gens)
            ok = (
                res.generates
                and con.group.order == con.predicted_size
                and (
                    res.diameter == con.predicted_diameter
                    if con.diameter_exact
                    else res.diameter <= con.predicted_diameter
                )
            )
            row["verified"] = "ok" if ok else f"MISMATCH diameter={res.diameter}"
            status = 0 if ok else VERIFY_ERROR
    if args.json:
        row["params"] = con.params
        if con.group:
            row["group"] = list(con.group.factors)
            row["gens"] = {
                "unrestricted": [list(g) for g in con.gens.unrestricted],
                "order2": list(con.gens.order2) if con.gens.order2 else None,
                "mode": con.gens.mode,
            }
        if con.lattice:
            row["lattice"] = [list(r) for r in con.lattice.basis]
        if con.rational_lattice:
            row["rational_lattice"] = [
                [str(x) for x in r] for r in con.rational_lattice.basis
            ]
    _emit([row], args.json)
    return status


def _cmd_search(args) -> int:
    spec = search.SearchSpec(
        d=args.d,
        k=args.k,
        mode=args.mode,
        order2=args.order2,
        group_class=args.group_class,
        n_min=args.n_min,
        n_max=args.n_max,
        canonicalization=args.level,
        max_seconds=args.max_seconds,
    )
    res = search.best_graph(spec, checkpoint=args.checkpoint, workers=args.workers)
    rows = []
    for w in res.witnesses:
        rows.append(
            {
                "best_n": res.best_n,
                "exhaustive": res.exhaustive,
                "group": "x".join(str(m) for m in w.group.factors),
                "gens": _gens_to_text(w.gens),
                "diameter": w.diameter,
                "groups_examined": res.groups_examined,
                "sets_examined": res.sets_examined,
            }
        )
    if not rows:
        rows = [
            {
                "best_n": res.best_n,
                "exhaustive": res.exhaustive,
                "group": "",
                "gens": "",
                "diameter": "",
                "groups_examined": res.groups_examined,
                "sets_examined": res.sets_examined,
            }
        ]
    _emit(rows, args.json)
    return 0 if res.exhaustive else VERIFY_ERROR


def _cmd_verify_cover(args) -> int:
    lattice = _parse_lattice(args.lattice)
    shape = Shape(args.shape, lattice.dim, args.k)
    coset = tuple(int(c) for c in args.coset.split(",")) if args.coset else None
    rep = coverings.covers(lattice, shape, coset=coset)
    row = {
        "covers": rep.covers,
        "index": rep.index,
        "shape_size": rep.shape_size,
        "efficiency_discrete": format_6dec(rep.efficiency_discrete),
        "efficiency_real": format_6dec(rep.efficiency_real)
        if rep.efficiency_real is not None
        else "",
        "is_tiling": rep.is_tiling,
        "diameter": rep.diameter,
    }
    _emit([row], args.json)
    return 0 if rep.covers else VERIFY_ERROR


def _cmd_fundamental_region(args) -> int:
    lattice = _parse_lattice(args.lattice)
    shape = Shape(args.shape, lattice.dim, args.k)
    direction = (
        tuple(Fraction(c) for c in args.direction.split(","))
        if args.direction
        else None
    )
    region = coverings.fundamental_region(lattice, shape, direction)
    if args.json:
        _emit(
            [
                {
                    "count": len(region.points),
                    "points": [list(p) for p in region.points],
                }
            ],
            True,
        )
    else:
        print(f"count\t{len(region.points)}")
        for p in region.points:
            print(",".join(str(c) for c in p))
    return 0


def _cmd_certify(args) -> int:
    which = args.which
    rows = []
    status = 0
    names = ["thm16", "thm20", "simplex-cover"] if which == "all" else [which]
    for name in names:
        if name == "simplex-cover":
            res = coverings.verify_simplex_cover_L7()
            rows.append(
                {
                    "certificate": name,
                    "result": "PASS" if res.ok else f"FAIL {res.failed_check}",
                    "detail": "84-point region covers" if res.ok else "",
                }
            )
            status = status or (0 if res.ok else VERIFY_ERROR)
            continue
        try:
            rep = coverings.certify_local_optimality(coverings.CERTIFICATES[name])
            rows.append(
                {
                    "certificate": name,
                    "result": "PASS",
                    "detail": f"F(v)={rep.det_at_base}; checks: "
                    + ",".join(rep.checks_passed),
                }
            )
        except CertificateError as exc:
            rows.append({"certificate": name, "result": "FAIL", "detail": str(exc)})
            status = VERIFY_ERROR
    _emit(rows, args.json)
    return status


def _table_rows_1(kmax: int, columns: str, level: int, workers: int):
    rows = []
    for k in range(kmax + 1):
        ball = size(Shape("octahedron", 3, k))
        toroidal = constructions.build("toroidal", k, d=3, mode="undirected").predicted_size
        twisted = (
            constructions.build("twistedbcc3d", k).predicted_size if k >= 1 else ""
        )
        row = {"k": k, "ball": ball, "toroidal": toroidal, "twisted": twisted}
        if columns == "full":
            spec = search.SearchSpec(
                d=3, k=k, mode="undirected", group_class="cyclic", canonicalization=level
            )
            res = search.best_graph(spec, workers=workers)
            _fill_search_columns(row, res, k, "undirected")
        rows.append(row)
    return rows


def _table_rows_2(kmax: int, columns: str, level: int, workers: int):
    rows = []
    for k in range(kmax + 1):
        ball = size(Shape("tetrahedron", 3, k))
        row = {
            "k": k,
            "ball": ball,
            "ffz": search.ffz_bound(k) if k > 7 else "",
            "toroidal": constructions.build(
                "toroidal", k, d=3, mode="directed"
            ).predicted_size,
            "improved": constructions.improved_directed_size(k) if k >= 1 else "",
            "afg": DIRECTED_3GEN[k].afg if k < len(DIRECTED_3GEN) else "",
        }
        if columns == "full":
            spec = search.SearchSpec(
                d=3, k=k, mode="directed", group_class="cyclic", canonicalization=level
            )
            res = search.best_graph(spec, workers=workers)
            _fill_search_columns(row, res, k, "directed")
        rows.append(row)
    return rows


def _fill_search_columns(row, res, k, mode):
    star = "" if res.exhaustive else "*"
    row["best_n"] = f"{res.best_n}{star}"
    if res.witnesses:
        w = res.witnesses[0]
        row["generators"] = _gens_to_text(w.gens)
        report = coverings.covering_report_rows([(k, res.best_n)], mode)[0]
        row["eff_discrete"] = report["eff_discrete_6dec"]
        row["eff_real"] = report["eff_real_6dec"]
    else:
        row["generators"] = row["eff_discrete"] = row["eff_real"] = ""


def _table_rows_3(kmax: int, level: int, workers: int):
    rows = []
    for k in range(kmax + 1):
        spec = search.SearchSpec(
            d=3, k=k, mode="directed", group_class="abelian", canonicalization=level
        )
        res = search.best_graph(spec, workers=workers)
        row = {"k": k}
        _fill_search_columns(row, res, k, "directed")
        if res.witnesses:
            row["group"] = "x".join(str(m) for m in res.witnesses[0].group.factors)
        rows.append(row)
    return rows


def _table_rows_4(kmax: int):
    rows = []
    for k in range(3, kmax + 1):
        con = constructions.build("order2_table4", k)
        rows.append(
            {
                "k": k,
                "a": con.params["a"],
                "size": con.predicted_size,
                "lattice": ";".join(
                    ",".join(str(x) for x in r) for r in con.lattice.basis
                ),
                "coset": ",".join(str(x) for x in con.coset),
                "unrestricted": ",".join(str(g[0]) for g in con.gens.unrestricted),
                "order2": con.gens.order2[0],
            }
        )
    return rows


def _cmd_tables(args) -> int:
    if args.which == 1:
        rows = _table_rows_1(args.kmax, args.columns, args.level, args.workers)
    elif args.which == 2:
        rows = _table_rows_2(args.kmax, args.columns, args.level, args.workers)
    elif args.which == 3:
        rows = _table_rows_3(args.kmax, args.level, args.workers)
    elif args.which == 4:
        rows = _table_rows_4(args.kmax)
    else:
        raise ArgumentError("--which must be 1, 2, 3 or 4")
    _emit(rows, args.json)
    return 0


def _cmd_svg(args) -> int:
    if args.which == "diamond-tiling":
        text = svgfig.diamond_tiling_svg(args.k)
    elif args.which == "order2-cover":
        text = svgfig.order2_cover_svg(args.k)
    elif args.which == "face-coverage":
        text = svgfig.face_coverage_svg()
    else:
        raise ArgumentError(f"unknown figure {args.which!r}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleycover",
        description="Abelian Cayley graphs, lattice coverings, and their certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diameter", help="BFS diameter of a Cayley graph")
    p.add_argument("--group", required=True, help="cyclic order or factors, e.g. 84 or 93x3")
    p.add_argument("--gens", required=True, help="generators, e.g. 2,9,35 or 1,0;9,1")
    p.add_argument("--order2", help="optional order-2 generator")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_diameter)

    p = sub.add_parser("construct", help="build a named family instance")
    p.add_argument("--family", required=True, choices=sorted(constructions.FAMILIES))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--mode", choices=["directed", "undirected"])
    p.add_argument("--alternate", action="store_true")
    p.add_argument("--base-family", dest="base_family")
    p.add_argument("--verify", action="store_true", help="BFS-check the prediction")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("search", help="exhaustive best-graph search")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["directed", "undirected"], default="undirected")
    p.add_argument("--order2", action="store_true")
    p.add_argument("--group-class", choices=["cyclic", "abelian"], default="abelian")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int)
    p.add_argument("--level", type=int, default=2, help="canonicalization level 0-2")
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--checkpoint", help="JSON checkpoint path for resumable runs")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify-cover", help="check a lattice covering")
    p.add_argument("--lattice", required=True, help="rows as 2,0,0;0,2,0;1,1,1")
    p.add_argument(
        "--shape",
        required=True,
        choices=["octahedron", "tetrahedron", "order2ball"],
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--coset", help="coset vector g for order2ball")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_cover)

    p = sub.add_parser("fundamental-region", help="extract a tiling region")
    p.add_argument("--lattice", required=True)
    p.add_argument("--shape", required=True, choices=["octahedron", "tetrahedron"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--direction", help="order direction, e.g. 1,1,1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fundamental_region)

    p = sub.add_parser("certify", help="verify exact optimality certificates")
    p.add_argument(
        "--which", default="all", choices=["thm16", "thm20", "simplex-cover", "all"]
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("tables", help="regenerate the summary tables")
    p.add_argument("--which", type=int, required=True, choices=[1, 2, 3, 4])
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument(
        "--columns",
        choices=["constructions", "full"],
        default="full",
        help="constructions: skip the search-derived columns",
    )
    p.add_argument("--level", type=int, default=2)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("svg", help="render tiling/coverage diagrams")
    p.add_argument(
        "--which",
        required=True,
        choices=["diamond-tiling", "order2-cover", "face-coverage"],
    )
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_svg)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except CertificateError as exc:
        print(f"certificate invalid: {exc}", file=sys.stderr)
        return VERIFY_ERROR


if __name__ == "__main__":
    sys.exit(main())
