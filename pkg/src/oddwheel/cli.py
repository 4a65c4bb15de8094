"""Command-line front end.

Every subcommand writes one JSON document (``search`` writes JSON lines) and
exits with

  0  decided / verified as expected,
  1  a violation or a negative verdict (see each subcommand's help),
  2  bad input: unreadable or malformed JSON, invalid lengths, unmet preconditions.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .classalgebra import bipartition, build_transition_graph, enumerate_odd_solutions
from .errors import (
    CoordinateError,
    InputFormatError,
    InvalidTriangleError,
    NoClassError,
    NonIntegralError,
    PreconditionError,
    ResidualSumViolation,
    SearchLimitExceeded,
    TheoremViolation,
    TrailBreakError,
)
from .exactnum import Rotation
from .pointset import characteristic_invariance, parse_points_document, validate_integral
from .search import search_wheels
from .triangle import (
    IntTriangle,
    angle_class,
    characteristic,
    class_shortcut_sweep,
    residue_sweep,
    triangle_area,
    triangle_cos,
    triangle_sin,
)
from .wheel import (
    Certificate,
    CertificateKind,
    WheelLengths,
    certify_odd_wheel,
    class_trail_steps,
    closure_decide,
    coordinates,
    realizable,
    residual_group_check,
    wheel_angles,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class _Output:
    def __init__(self, quiet: bool) -> None:
        self.quiet = quiet

    def doc(self, obj) -> None:
        if not self.quiet:
            print(json.dumps(obj, indent=2))

    def line(self, obj) -> None:
        if not self.quiet:
            print(json.dumps(obj), flush=True)


def _load_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputFormatError("<file>", f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError("<root>", f"invalid JSON ({exc})") from None


def _load_wheel(path: str):
    return WheelLengths.from_dict(_load_json(path))


def _rotation(r: Rotation) -> dict:
    return {"cos": str(r.cos), "sin": str(r.sin), "angle": r.angle()}


def cmd_triangle(args, out: _Output) -> int:
    t = IntTriangle(args.a, args.b, args.c)
    t.check()
    cos = triangle_cos(t)
    char = characteristic(t)
    try:
        cls = angle_class(cos)
    except NoClassError:
        cls = None
    out.doc({
        "sides": [t.a, t.b, t.c],
        "cos": str(cos),
        "sin": str(triangle_sin(t)),
        "area": str(triangle_area(t)),
        "characteristic": char,
        "residual": char,
        "class": cls,
    })
    return EXIT_OK


def _violation(w: WheelLengths, signs, exc: ResidualSumViolation) -> dict:
    detail = {"residual": exc.residual, "group_rotation": exc.rotation, "message": str(exc)}
    return Certificate(CertificateKind.RESIDUAL_SUM_VIOLATION, detail, w, tuple(signs)).to_dict()


def cmd_closure(args, out: _Output) -> int:
    w, signs = _load_wheel(args.wheel)
    w.check()
    if signs is None:
        cert = realizable(w, strict=args.strict, with_coordinates=args.emit_coords)
        if cert.kind is not CertificateKind.REALIZABLE:
            out.doc(cert.to_dict())
            return EXIT_NEGATIVE
        try:
            groups = residual_group_check(w, cert.signs)
        except ResidualSumViolation as exc:
            out.doc(_violation(w, cert.signs, exc))
            return EXIT_NEGATIVE
        doc = cert.to_dict()
        doc["residual_groups"] = [g.to_dict() for g in groups]
        out.doc(doc)
        return EXIT_OK
    closes = closure_decide(w, signs)
    total = Rotation.identity()
    for r in wheel_angles(w, signs):
        total = total @ r
    doc = {"closes": closes, "total_rotation": _rotation(total), "input": w.to_dict(signs)}
    if closes:
        try:
            doc["residual_groups"] = [g.to_dict() for g in residual_group_check(w, signs)]
        except ResidualSumViolation as exc:
            out.doc(_violation(w, signs, exc))
            return EXIT_NEGATIVE
    if args.emit_coords:
        doc["coordinates"] = [
            {"x": str(x), "y": str(y), "float": [float(x), float(y)]}
            for x, y in coordinates(w, signs)
        ]
    out.doc(doc)
    return EXIT_OK if closes else EXIT_NEGATIVE


def cmd_certify(args, out: _Output) -> int:
    w, _ = _load_wheel(args.wheel)
    cert = certify_odd_wheel(w, cross_check=False if args.no_cross_check else None)
    out.doc(cert.to_dict())
    return EXIT_OK


def cmd_trail(args, out: _Output) -> int:
    w, _ = _load_wheel(args.wheel)
    try:
        trail = class_trail_steps(w)
    except TrailBreakError as exc:
        out.doc({"input": w.to_dict(), "trail_break": {"position": exc.position, "reason": str(exc)}})
        return EXIT_NEGATIVE
    doc = trail.to_dict()
    doc["input"] = w.to_dict()
    out.doc(doc)
    return EXIT_OK


def cmd_lemmas(args, out: _Output) -> int:
    triples = enumerate_odd_solutions()
    graph = build_transition_graph()
    part_a, part_b = bipartition(graph)
    sweep = residue_sweep(args.bound)
    shortcut = class_shortcut_sweep(args.class_bound)
    out.doc({
        "solutions": [list(t) for t in triples],
        "solution_count": len(triples),
        "transition_graph": graph.to_dict(),
        "bipartition": [sorted(part_a), sorted(part_b)],
        "residue_sweep": sweep,
        "class_shortcut_sweep": shortcut,
    })
    return EXIT_OK if sweep["passed"] and shortcut["passed"] else EXIT_NEGATIVE


def cmd_pointset(args, out: _Output) -> int:
    pts = parse_points_document(_load_json(args.points))
    try:
        ps = validate_integral(pts)
    except NonIntegralError as exc:
        out.doc({"valid": False, "pair": [exc.i, exc.j], "squared_distance": str(exc.squared)})
        return EXIT_NEGATIVE
    doc = ps.to_dict()
    doc["valid"] = True
    doc["characteristic"] = characteristic_invariance(ps)
    out.doc(doc)
    return EXIT_OK


def cmd_search(args, out: _Output) -> int:
    results = search_wheels(
        args.n,
        args.max,
        "all_odd" if args.odd else "any",
        cross_check=args.cross_check,
        start=args.resume,
        max_nodes=args.max_nodes,
        max_seconds=args.max_seconds,
        on_event=out.line,
    )
    try:
        for w, signs in results:
            doc = w.to_dict()
            doc["witness_signs"] = list(signs)
            out.line(doc)
    except SearchLimitExceeded:
        return EXIT_NEGATIVE
    return EXIT_OK


def _global_flags(parser: argparse.ArgumentParser, top: bool) -> None:
    default = False if top else argparse.SUPPRESS
    parser.add_argument("--json", action="store_true", default=default,
                        help="emit JSON (the default and only format)")
    parser.add_argument("--quiet", action="store_true", default=default,
                        help="suppress output; rely on the exit code")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddwheel",
        description="Exact checks for integer-edge wheel embeddings and odd-distance wheels.",
        epilog="exit codes: 0 verified, 1 negative verdict or violation, 2 input error",
    )
    parser.add_argument("--version", action="version", version=__version__)
    _global_flags(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        _global_flags(p, top=False)
        p.set_defaults(func=func)
        return p

    p = add("triangle", cmd_triangle,
            "Cosine, sine, area, characteristic, residual and class of the angle "
            "opposite side a. Exit 0, or 2 for an invalid triangle.")
    for side in ("a", "b", "c"):
        p.add_argument(side, type=int)

    p = add("closure", cmd_closure,
            "Decide closure for the given signs, or search all signs when the wheel "
            "file has none. Exit 0 if it closes / is realizable, 1 if not.")
    p.add_argument("wheel", help="wheel JSON file ('-' for stdin)")
    p.add_argument("--emit-coords", action="store_true",
                   help="print exact vertex coordinates for external plotting")
    p.add_argument("--strict", action="store_true",
                   help="reject witnesses whose rim vertices coincide")

    p = add("certify", cmd_certify,
            "Certify that an odd wheel with odd lengths cannot close. Exit 0 when the "
            "parity contradiction is produced, 1 if a theorem check fails, 2 when n is "
            "even or a length is even.")
    p.add_argument("wheel")
    p.add_argument("--no-cross-check", action="store_true",
                   help="skip the exhaustive sign-search cross-check")

    p = add("trail", cmd_trail,
            "Class trail of an all-odd wheel. Exit 0 when the full trail exists, 1 when "
            "a partial sum has no class (the wheel cannot close there).")
    p.add_argument("wheel")

    p = add("lemmas", cmd_lemmas,
            "Mod-8 solution triples, transition graph, bipartition and the odd-triangle "
            "sweeps. Exit 0 when every check passes.")
    p.add_argument("--bound", type=int, default=99, help="side bound of the 3 mod 8 sweep")
    p.add_argument("--class-bound", type=int, default=49,
                   help="side bound of the class-shortcut sweep")

    p = add("pointset", cmd_pointset,
            "Validate an integral point set and find its common characteristic. Exit 0 "
            "when valid, 1 when some distance is not an integer.")
    p.add_argument("points", help="points JSON file ('-' for stdin)")

    p = add("search", cmd_search,
            "Stream every closing wheel (one JSON object per line). Exit 0 when the "
            "search completes, 1 when stopped by a limit (resume with --resume).")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--odd", action="store_true", help="only odd lengths")
    p.add_argument("--cross-check", action="store_true",
                   help="with --odd and odd n, still run the full sign search")
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--max-seconds", type=float, default=None)
    p.add_argument("--resume", type=int, default=0, metavar="CURSOR")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Output(args.quiet)
    try:
        return args.func(args, out)
    except (InputFormatError, InvalidTriangleError, PreconditionError, CoordinateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TheoremViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
