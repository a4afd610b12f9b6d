"""Command line interface over the structured-text file formats.

Every command prints one report (text or JSON tree) on stdout. Exit codes:
0 for success, 1 for a negative verdict (equiv says no, oracle fails),
2 for any error (bad files, law violations, exceeded bounds).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .completion import group_completion
from .dotexport import functional_graph_dot, orbit_category_dot
from .dynamics import (
    TRANSITION_MONOID_BOUND,
    cycle_type,
    eventual_image,
    limit_cycles,
    rinv_nat,
    transition_monoid,
)
from .errors import ParseError, SizeBoundExceeded, SymactError
from .fileio import Matrix, Report, Tokens, Workspace, render_report, render_report_tree
from .monoid import FiniteMonoid, idempotents, index_period, submonoid
from .mset import MAP_ENUM_BOUND, fixed_points, induce, coinduce, restrict
from .oracle import run_oracle
from .orbit import ORBIT_ALL_BOUND, build_orbit_category, hom_via_rinv, x_functor
from .replacements import (
    left_equivalence,
    linv,
    linv_rel,
    right_equivalence,
    rinv,
    rinv_rel,
)


def _csv_indices(raw: str) -> tuple[int, ...]:
    if raw.strip() == "":
        return ()
    try:
        return tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {raw!r}") from None


def _tokens(*values) -> Tokens:
    return Tokens(tuple(str(v) for v in values))


def _int_row(values) -> Tokens:
    return Tokens(tuple(str(v) for v in values))


def _matrix(rows) -> Matrix:
    return Matrix(tuple(tuple(row) for row in rows))


def _emit(args, report: Report, dot: str | None = None) -> None:
    if args.format == "tree":
        sys.stdout.write(render_report_tree(report))
    else:
        sys.stdout.write(render_report(report))
    if getattr(args, "dot", None) and dot is not None:
        Path(args.dot).write_text(dot)


def _load_monoid(ws: Workspace, path: str) -> FiniteMonoid:
    return ws.load_monoid(path)[0]


def cmd_completion(args) -> int:
    ws = Workspace()
    monoid = _load_monoid(ws, args.monoid)
    gc = group_completion(monoid)
    entries = [
        ("monoid-size", _tokens(monoid.size)),
        ("group-size", _tokens(gc.group.size)),
        ("q", _int_row(gc.q.mapping)),
        ("group-table", _matrix(gc.group.table)),
        ("kernel-classes", _matrix(gc.kernel.classes())),
        ("idempotents", _int_row(idempotents(monoid))),
    ]
    _emit(args, Report("completion", tuple(entries)))
    return 0


def _replacement_command(args, side: str) -> int:
    ws = Workspace()
    monoid = _load_monoid(ws, args.monoid)
    mset, _ = ws.load_mset(args.mset, monoid)
    entries = []
    if args.submonoid is not None:
        sub = submonoid(monoid, _csv_indices(args.submonoid))
        entries.append(("submonoid", _int_row(sub.elements)))
        result = rinv_rel(sub, mset) if side == "rinv" else linv_rel(sub, mset)
    else:
        gc = group_completion(monoid)
        result = rinv(gc, mset) if side == "rinv" else linv(gc, mset)
    entries.append(("group-size", _tokens(result.gc.group.size)))
    entries.append(("points", _tokens(result.gset.size)))
    if side == "rinv":
        if result.gset.size:
            entries.append(("kept", _int_row(result.counit.mapping)))
        iso = result.gset.size == mset.size
        entries.append(("counit-iso", _tokens("yes" if iso else "no")))
    else:
        if mset.size:
            entries.append(("unit", _int_row(result.unit.mapping)))
        iso = (
            result.gset.size == mset.size
            and len(set(result.unit.mapping)) == mset.size
        )
        entries.append(("unit-iso", _tokens("yes" if iso else "no")))
    if result.gset.size:
        entries.append(("group-action", _matrix(result.gset.action)))
    _emit(args, Report(side, tuple(entries)))
    return 0


def cmd_rinv(args) -> int:
    return _replacement_command(args, "rinv")


def cmd_linv(args) -> int:
    return _replacement_command(args, "linv")


def cmd_restrict(args) -> int:
    ws = Workspace()
    monoid = _load_monoid(ws, args.monoid)
    mset, _ = ws.load_mset(args.mset, monoid)
    sub = submonoid(monoid, _csv_indices(args.submonoid))
    restricted = restrict(mset, sub)
    entries = [
        ("submonoid", _int_row(sub.elements)),
        ("points", _tokens(restricted.size)),
    ]
    if restricted.size:
        entries.append(("action", _matrix(restricted.action)))
    _emit(args, Report("restrict", tuple(entries)))
    return 0


def cmd_induce(args) -> int:
    ws = Workspace()
    monoid = _load_monoid(ws, args.monoid)
    sub = submonoid(monoid, _csv_indices(args.submonoid))
    mset, _ = ws.load_mset(args.mset, sub.embedded)
    extension, unit = induce(sub, mset)
    entries = [
        ("submonoid", _int_row(sub.elements)),
        ("points", _tokens(extension.size)),
    ]
    if extension.size:
        entries.append(("action", _matrix(extension.action)))
    if mset.size:
        entries.append(("unit", _int_row(unit.mapping)))
    _emit(args, Report("induce", tuple(entries)))
    return 0


def cmd_coinduce(args) -> int:
    ws = Workspace()
    monoid = _load_monoid(ws, args.monoid)
    sub = submonoid(monoid, _csv_indices(args.submonoid))
    mset, _ = ws.load_mset(args.mset, sub.embedded)
    bound = args.max_enum if args.max_enum is not None else MAP_ENUM_BOUND
    extension, counit = coinduce(sub, mset, max_maps=bound)
    entries = [
        ("submonoid", _int_row(sub.elements)),
        ("points", _tokens(extension.size)),
    ]
    if extension.size:
        entries.append(("action", _matrix(extension.action)))
        entries.append(("counit", _int_row(counit.mapping)))
    _emit(args, Report("coinduce", tuple(entries)))
    return 0


def cmd_fixed(args) -> int:
    ws = Workspace()
    monoid = _load_monoid(ws, args.monoid)
    mset, _ = ws.load_mset(args.mset, monoid)
    subset = _csv_indices(args.elements)
    fixed = fixed_points(mset, subset)
    entries = [("count", _tokens(len(fixed)))]
    if subset:
        entries.insert(0, ("elements", _int_row(subset)))
    if fixed:
        entries.append(("fixed", _int_row(fixed)))
    _emit(args, Report("fixed", tuple(entries)))
    return 0


def cmd_equiv(args) -> int:
    ws = Workspace()
    emap, _, _ = ws.load_map(args.map)
    family = ws.load_family(args.family, emap.source.monoid)
    verdict = (
        right_equivalence(emap, family)
        if args.side == "right"
        else left_equivalence(emap, family)
    )
    entries: list[tuple[str, Tokens | Matrix]] = [
        ("side", _tokens(verdict.side)),
        ("equivalent", _tokens("yes" if verdict.ok else "no")),
    ]
    for entry in verdict.entries:
        tokens = (
            ["submonoid"]
            + [str(v) for v in entry.submonoid_elements]
            + ["subgroup"]
            + [str(v) for v in entry.subgroup]
            + ["bijective", "yes" if entry.bijective else "no"]
        )
        entries.append(("entry", Tokens(tuple(tokens))))
    _emit(args, Report("equiv", tuple(entries)))
    return 0 if verdict.ok else 1


def cmd_orbit_cat(args) -> int:
    ws = Workspace()
    monoid = _load_monoid(ws, args.monoid)
    family = ws.load_family(args.family, monoid) if args.family else None
    bound = args.max_enum if args.max_enum is not None else MAP_ENUM_BOUND
    cat = build_orbit_category(monoid, family, max_monoid=args.max_monoid, max_maps=bound)
    entries = [("objects", _tokens(len(cat.objects)))]
    for i, obj in enumerate(cat.objects):
        tokens = (
            [str(i), "submonoid"]
            + [str(v) for v in obj.submonoid.elements]
            + ["subgroup"]
            + [str(v) for v in obj.subgroup]
            + ["points", str(obj.realization.size)]
        )
        entries.append(("object", Tokens(tuple(tokens))))
    if cat.objects:
        entries.append(
            ("hom-counts", _matrix([[len(cell) for cell in row] for row in cat.homs]))
        )
    crossed = all(
        hom_via_rinv(cat, src, dst).bijective
        for src in range(len(cat.objects))
        for dst in range(len(cat.objects))
    )
    entries.append(("cross-check", _tokens("ok" if crossed else "fail")))
    _emit(args, Report("orbit-category", tuple(entries)), orbit_category_dot(cat))
    return 0


def cmd_xfunctor(args) -> int:
    ws = Workspace()
    monoid = _load_monoid(ws, args.monoid)
    mset, _ = ws.load_mset(args.mset, monoid)
    family = ws.load_family(args.family, monoid) if args.family else None
    bound = args.max_enum if args.max_enum is not None else MAP_ENUM_BOUND
    cat = build_orbit_category(monoid, family, max_monoid=args.max_monoid, max_maps=bound)
    diagram = x_functor(cat, mset, max_maps=bound)
    entries = [("objects", _tokens(len(cat.objects)))]
    for i, (obj, values) in enumerate(zip(cat.objects, diagram.values)):
        tokens = [str(i)] + [str(v) for v in values]
        entries.append(("value", Tokens(tuple(tokens))))
    if cat.objects:
        entries.append(
            ("hom-counts", _matrix([[len(cell) for cell in row] for row in cat.homs]))
        )
    _emit(args, Report("xfunctor", tuple(entries)))
    return 0


def cmd_dynamics(args) -> int:
    ws = Workspace()
    fg = ws.load_graph(args.graph)
    subset, _ = eventual_image(fg)
    cycles, transients = limit_cycles(fg)
    entries = [("states", _tokens(fg.size))]
    if subset:
        entries.append(("eventual-image", _int_row(subset)))
    entries.append(("cycle-count", _tokens(len(cycles))))
    for cycle in cycles:
        entries.append(("cycle", _int_row(cycle)))
    if fg.size:
        entries.append(("transients", _int_row(transients)))
    if subset:
        entries.append(("cycle-type", _int_row(cycle_type(rinv_nat(fg)))))
    notes: tuple[str, ...] = ()
    bound = args.max_enum if args.max_enum is not None else TRANSITION_MONOID_BOUND
    try:
        tmonoid, _ = transition_monoid(fg, max_size=bound)
        index, period = index_period(tmonoid, 1 if tmonoid.size > 1 else 0)
        entries.append(("transition-size", _tokens(tmonoid.size)))
        entries.append(("transition-index", _tokens(index)))
        entries.append(("transition-period", _tokens(period)))
    except SizeBoundExceeded:
        notes = (f"transition monoid exceeds bound {bound}; rerun with --max-enum",)
    _emit(args, Report("dynamics", tuple(entries), notes), functional_graph_dot(fg))
    return 0


def cmd_oracle(args) -> int:
    records = run_oracle(seed=args.seed, samples=args.samples)
    entries = [
        ("seed", _tokens(args.seed)),
        ("samples", _tokens(args.samples)),
    ]
    for record in records:
        entries.append(("check", _tokens(record.name, "pass" if record.passed else "fail")))
    ok = all(r.passed for r in records)
    entries.append(("result", _tokens("pass" if ok else "fail")))
    _emit(args, Report("oracle", tuple(entries)))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symact",
        description="Finite monoid actions: completions, replacements, orbit categories, dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, dot: bool = False) -> None:
        p.add_argument("--format", choices=("text", "tree"), default="text")
        p.add_argument("--max-monoid", type=int, default=ORBIT_ALL_BOUND,
                       help="largest monoid allowed in whole-category scopes")
        p.add_argument("--max-enum", type=int, default=None,
                       help="bound on enumeration searches (per-command default)")
        if dot:
            p.add_argument("--dot", metavar="PATH", help="also write a DOT rendering")

    p = sub.add_parser("completion", help="group completion of a monoid")
    p.add_argument("monoid")
    common(p)
    p.set_defaults(func=cmd_completion)

    for name, help_text in (("rinv", "right symmetric replacement"), ("linv", "left symmetric replacement")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("monoid")
        p.add_argument("mset")
        p.add_argument("--submonoid", metavar="CSV", default=None,
                       help="restrict to this submonoid first (comma-separated elements)")
        common(p)
        p.set_defaults(func=cmd_rinv if name == "rinv" else cmd_linv)

    p = sub.add_parser("restrict", help="restrict an action to a submonoid")
    p.add_argument("monoid")
    p.add_argument("mset")
    p.add_argument("--submonoid", metavar="CSV", required=True)
    common(p)
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("induce", help="extend a submonoid action along the inclusion")
    p.add_argument("monoid")
    p.add_argument("mset", help="action over the submonoid (no monoid reference)")
    p.add_argument("--submonoid", metavar="CSV", required=True)
    common(p)
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("coinduce", help="coextend a submonoid action along the inclusion")
    p.add_argument("monoid")
    p.add_argument("mset", help="action over the submonoid (no monoid reference)")
    p.add_argument("--submonoid", metavar="CSV", required=True)
    common(p)
    p.set_defaults(func=cmd_coinduce)

    p = sub.add_parser("fixed", help="points fixed by a set of elements")
    p.add_argument("monoid")
    p.add_argument("mset")
    p.add_argument("--elements", metavar="CSV", required=True)
    common(p)
    p.set_defaults(func=cmd_fixed)

    p = sub.add_parser("equiv", help="equivalence verdict for a map against a family")
    p.add_argument("map")
    p.add_argument("family")
    p.add_argument("--side", choices=("right", "left"), default="right")
    common(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("orbit-cat", help="orbit category of a monoid")
    p.add_argument("monoid")
    p.add_argument("--family", default=None, help="restrict objects to this family file")
    common(p, dot=True)
    p.set_defaults(func=cmd_orbit_cat)

    p = sub.add_parser("xfunctor", help="fixed-point diagram of an action over the orbit category")
    p.add_argument("monoid")
    p.add_argument("mset")
    p.add_argument("--family", default=None)
    common(p)
    p.set_defaults(func=cmd_xfunctor)

    p = sub.add_parser("dynamics", help="limit cycles and eventual image of a functional graph")
    p.add_argument("graph")
    common(p, dot=True)
    p.set_defaults(func=cmd_dynamics)

    p = sub.add_parser("oracle", help="run the randomized cross-check suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=25)
    common(p)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SymactError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
