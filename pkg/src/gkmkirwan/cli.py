"""Command line interface: ``gkmkirwan validate|betti|reduce|kernel|plot|catalog``.

Exit codes: 0 success, 1 domain error (invalid space, mu not regular, ...),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .catalog import catalog_names
from .cohomology import CohomologyError, basis, betti_series
from .expr import ExpressionError, evaluate
from .io import DocumentError, dumps, load_space, to_document
from .kirwan import (
    DomainError,
    default_directions,
    kernel_generators,
    reduce,
    require_regular,
    sample_directions,
)
from .linalg import LinalgError, format_fraction, to_fraction
from .plot import PlotError, PlotSpec, render_svg
from .space import GKMSpace, SpaceError, Subtorus, space_warnings, validate, wall_normals


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------- arguments


def parse_vector(text: str) -> Tuple[Fraction, ...]:
    try:
        return tuple(to_fraction(part.strip()) for part in text.split(","))
    except (LinalgError, ValueError, ZeroDivisionError) as err:
        raise UsageError(f"cannot read rational vector {text!r}: {err}") from None


def parse_int_vector(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"cannot read integer vector {text!r}") from None


def parse_subtorus(text: str, rank: int) -> Subtorus:
    """``full`` or columns ``a,b;c,d`` (each column a vector in g)."""
    if text == "full":
        return Subtorus.full(rank)
    cols = [parse_int_vector(c) for c in text.split(";")]
    if any(len(c) != rank for c in cols):
        raise UsageError(f"subtorus columns must have {rank} entries")
    rows = tuple(tuple(c[i] for c in cols) for i in range(rank))
    try:
        return Subtorus(rows)
    except SpaceError as err:
        raise UsageError(str(err)) from None


def _space(args) -> GKMSpace:
    space = load_space(args.space)
    problems = validate(space)
    if problems:
        raise DomainError("invalid space:\n  " + "\n  ".join(problems))
    return space


def _directions(args, space, sub, mu) -> Optional[List[Tuple[int, ...]]]:
    spec = args.directions
    if spec == "walls":
        return None
    if spec.startswith("walls+samples:"):
        try:
            n = int(spec.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad sample count in {spec!r}") from None
        return default_directions(space, sub) + sample_directions(space, mu, sub, n, args.seed)
    raise UsageError(f"--directions must be 'walls' or 'walls+samples:N', got {spec!r}")


# ---------------------------------------------------------------- commands


def cmd_validate(args, out) -> int:
    space = load_space(args.space)
    problems = validate(space)
    for p in problems:
        print(p, file=out)
    for w in space_warnings(space):
        print(f"warning: {w}", file=sys.stderr)
    if not problems:
        print(f"ok: {len(space.points)} fixed points, {len(space.edges)} edges", file=out)
    return 1 if problems else 0


def cmd_betti(args, out) -> int:
    space = _space(args)
    bound = args.degree_bound if args.degree_bound is not None else space.real_dim
    dims = betti_series(space, bound)
    degrees = list(range(0, bound + 1, 2))
    if args.json:
        out.write(dumps({"space": space.label or args.space, "degrees": degrees, "dim_equivariant": dims}))
    else:
        print(f"{'deg':>4} {'dim H_T':>8}", file=out)
        for k, d in zip(degrees, dims):
            print(f"{k:>4} {d:>8}", file=out)
    return 0


def cmd_reduce(args, out) -> int:
    space = _space(args)
    sub = parse_subtorus(args.subtorus, space.rank)
    mu = parse_vector(args.mu)
    if len(mu) != sub.rank:
        raise UsageError(f"mu must have {sub.rank} coordinates")
    require_regular(space, mu, sub)
    dirs = _directions(args, space, sub, mu)
    report = reduce(space, mu, sub, args.degree_bound, dirs, structure=args.structure)
    out.write(dumps(report.to_json()) if args.json else report.to_text() + "\n")
    return 0


def cmd_kernel(args, out) -> int:
    space = _space(args)
    sub = parse_subtorus(args.subtorus, space.rank)
    mu = parse_vector(args.mu)
    if len(mu) != sub.rank:
        raise UsageError(f"mu must have {sub.rank} coordinates")
    if args.degree < 0 or args.degree % 2:
        raise UsageError("--degree must be even and non-negative")
    require_regular(space, mu, sub)
    dirs = _directions(args, space, sub, mu)
    gens = kernel_generators(space, mu, sub, args.degree, dirs)
    B = basis(space, args.degree)
    names = space.action.names
    rows = []
    for coords, xi in gens:
        c = B.combine(coords)
        row = {
            "coordinates": [format_fraction(v) for v in coords],
            "restrictions": {p: c.at(p).to_string(names) for p in space.names},
        }
        if args.witness:
            row["witness"] = [format_fraction(v) for v in xi]
        rows.append(row)
    if args.json:
        out.write(dumps({
            "space": space.label or args.space,
            "mu": [format_fraction(v) for v in mu],
            "degree": args.degree,
            "dim_equivariant": B.dim,
            "kernel_dim": len(rows),
            "generators": rows,
        }))
        return 0
    print(f"degree {args.degree}: kernel dimension {len(rows)} of {B.dim}", file=out)
    for i, row in enumerate(rows):
        line = f"[{i}] ({', '.join(row['coordinates'])})"
        if args.witness:
            line += f"  witness xi=({', '.join(row['witness'])})"
        print(line, file=out)
    return 0


def cmd_plot(args, out) -> int:
    space = _space(args)
    mu = parse_vector(args.mu) if args.mu else None
    if args.hyperplanes == "none" or mu is None:
        hyper: Tuple[Tuple[int, ...], ...] = ()
    elif args.hyperplanes == "walls":
        hyper = tuple(n for n in wall_normals(space) if next(v for v in n if v) > 0)
    else:
        hyper = tuple(parse_int_vector(c) for c in args.hyperplanes.split(";"))
    cls = evaluate(args.cls, space) if args.cls else None
    svg = render_svg(space, PlotSpec(mu=mu, hyperplanes=hyper, draw_walls=not args.no_walls,
                                     cls=cls, class_label=args.cls or ""))
    if args.out in (None, "-"):
        out.write(svg)
    else:
        Path(args.out).write_text(svg, encoding="utf-8")
    return 0


def cmd_catalog(args, out) -> int:
    if args.name:
        out.write(dumps(to_document(load_space(f"builtin:{args.name}"))))
        return 0
    for name in catalog_names():
        print(name, file=out)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gkmkirwan",
        description="Equivariant cohomology of GKM spaces and cohomology of their symplectic reductions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_space(p):
        p.add_argument("--space", required=True, help="builtin:<name> or a path to a space document")
        return p

    def with_mu(p, required=True):
        p.add_argument("--mu", required=required, help="regular value, e.g. 5/4,5/4")
        p.add_argument("--subtorus", default="full", help="'full' or columns like 1,2 or 1,0;0,1")
        p.add_argument("--directions", default="walls", help="walls | walls+samples:N")
        p.add_argument("--seed", type=int, default=0, help="seed for sampled directions")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = with_space(sub.add_parser("validate", help="check a space document"))
    p.set_defaults(func=cmd_validate)

    p = with_space(sub.add_parser("betti", help="dimensions of equivariant cohomology by degree"))
    p.add_argument("--degree-bound", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_betti)

    p = with_space(sub.add_parser("reduce", help="cohomology of the reduced space at mu"))
    with_mu(p)
    p.add_argument("--degree-bound", type=int, default=None)
    p.add_argument("--structure", action="store_true", help="include ring structure constants")
    p.set_defaults(func=cmd_reduce)

    p = with_space(sub.add_parser("kernel", help="basis of the Kirwan kernel in one degree"))
    with_mu(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--witness", action="store_true", help="show a direction xi for each generator")
    p.set_defaults(func=cmd_kernel)

    p = with_space(sub.add_parser("plot", help="SVG picture of a rank-2 moment polytope"))
    p.add_argument("--mu", default=None)
    p.add_argument("--hyperplanes", default="none", help="none | walls | normals like 1,1;1,0 (through mu)")
    p.add_argument("--class", dest="cls", default=None, help="class expression, e.g. 't(x,x)'")
    p.add_argument("--no-walls", action="store_true")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("catalog", help="list built-in spaces or print one as a document")
    p.add_argument("name", nargs="?", default=None)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (DocumentError, UsageError, ExpressionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (DomainError, SpaceError, CohomologyError, PlotError, LinalgError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
