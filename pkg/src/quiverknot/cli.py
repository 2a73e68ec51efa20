"""Command-line interface.

Subcommands cover the whole library: `quandle` (tables, axioms,
endomorphisms), `presentation` (emit or validate), `colorings`,
`quiver`, `isomorphic`, `verify`, and `sweep`.  Exit codes: 0 success,
2 usage or invalid input, 3 computation bound exceeded, 4 I/O error.
All output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .colorings import (
    ColoringSpace,
    check_congruence,
    counting_invariant,
    enumerate_colorings,
)
from .export import (
    JoinShape,
    UniformCompleteShape,
    classify_shape,
    to_dot,
    to_json,
    quiver_from_json,
    verify,
)
from .presentations import (
    QuandlePresentation,
    parse_presentation,
    serialize_presentation,
    torus_p2_presentation,
)
from .quandles import (
    FiniteQuandle,
    compose,
    dihedral_endos,
    enumerate_homs,
    homs_from_images,
    identity_hom,
    make_dihedral,
    make_from_table,
    HomSet,
)
from .quivers import (
    HypothesisNotMetError,
    QuiverTooLargeError,
    are_isomorphic,
    build_quiver,
    canonical_form,
    predicted_quiver,
)

DEFAULT_MAX_P = 24
DEFAULT_MAX_N = 24


class BoundExceededError(RuntimeError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverknot",
        description="Coloring spaces and coloring quivers of (p,2)-torus links "
        "over dihedral quandles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    def add_bounds(p):
        p.add_argument("--max-p", type=int, default=DEFAULT_MAX_P, help="bound on p (default %(default)s)")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="bound on n (default %(default)s)")

    def add_quandle_source(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--dihedral", type=int, metavar="N", help="dihedral quandle of size N")
        g.add_argument("--quandle-table", metavar="FILE", help="JSON file with an operation table")

    def add_presentation_source(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--torus", type=int, metavar="P", help="(P,2)-torus link presentation")
        g.add_argument("--presentation", metavar="FILE", help="JSON presentation file")

    p_quandle = sub.add_parser("quandle", help="show a quandle table, axioms, endomorphisms")
    add_quandle_source(p_quandle)
    p_quandle.add_argument("--endos", action="store_true", help="list all endomorphisms")
    p_quandle.add_argument(
        "--check",
        action="store_true",
        help="cross-check the endomorphism enumeration and composition closure",
    )
    p_quandle.add_argument("--format", choices=["text", "json"], default="text")
    add_bounds(p_quandle)
    add_out(p_quandle)

    p_pres = sub.add_parser("presentation", help="emit a torus presentation or validate a file")
    add_presentation_source(p_pres)
    p_pres.add_argument("--format", choices=["text", "json"], default="text")
    add_bounds(p_pres)
    add_out(p_pres)

    p_col = sub.add_parser("colorings", help="enumerate the coloring space")
    add_presentation_source(p_col)
    add_quandle_source(p_col)
    p_col.add_argument("--format", choices=["text", "json"], default="text")
    add_bounds(p_col)
    add_out(p_col)

    p_quiv = sub.add_parser("quiver", help="build the coloring quiver")
    add_presentation_source(p_quiv)
    add_quandle_source(p_quiv)
    p_quiv.add_argument(
        "--hom-set",
        default="full",
        metavar="full|identity|FILE",
        help="maps to compose with: full endomorphism set, identity only, "
        "or a JSON file listing image tuples (default full)",
    )
    p_quiv.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p_quiv.add_argument("--dot-mode", choices=["weighted", "parallel"], default="weighted")
    p_quiv.add_argument(
        "--predict",
        action="store_true",
        help="compare against the closed-form quiver (needs --torus and --dihedral)",
    )
    p_quiv.add_argument("--canonical", action="store_true", help="emit the canonical weight matrix")
    p_quiv.add_argument("--max-vertices", type=int, default=64)
    add_bounds(p_quiv)
    add_out(p_quiv)

    p_iso = sub.add_parser("isomorphic", help="decide isomorphism of two quiver JSON files")
    p_iso.add_argument("quiver1", metavar="FILE1")
    p_iso.add_argument("quiver2", metavar="FILE2")
    p_iso.add_argument("--format", choices=["text", "json"], default="text")
    p_iso.add_argument("--max-vertices", type=int, default=64)
    add_out(p_iso)

    p_ver = sub.add_parser("verify", help="check counts and quiver shape for one (p, n)")
    p_ver.add_argument("--torus", type=int, metavar="P", required=True)
    p_ver.add_argument("--dihedral", type=int, metavar="N", required=True)
    p_ver.add_argument("--format", choices=["text", "json"], default="text")
    add_bounds(p_ver)
    add_out(p_ver)

    p_sweep = sub.add_parser("sweep", help="verify a grid of (p, n) pairs")
    p_sweep.add_argument("--p-range", default="2:12", metavar="A:B", help="inclusive p range (default %(default)s)")
    p_sweep.add_argument("--n-range", default="3:12", metavar="A:B", help="inclusive n range (default %(default)s)")
    p_sweep.add_argument("--format", choices=["text", "json"], default="text")
    add_bounds(p_sweep)
    add_out(p_sweep)

    return parser


def _check_bound(value: int, bound: int, name: str) -> None:
    if value > bound:
        raise BoundExceededError(
            f"{name} = {value} exceeds the bound {bound}; raise --max-{name} to override"
        )


def _load_quandle(args) -> FiniteQuandle:
    if args.dihedral is not None:
        _check_bound(args.dihedral, args.max_n, "n")
        return make_dihedral(args.dihedral)
    with open(args.quandle_table, encoding="utf-8") as f:
        table = json.load(f)
    q = make_from_table(table)
    _check_bound(q.size, args.max_n, "n")
    return q


def _load_presentation(args) -> QuandlePresentation:
    if args.torus is not None:
        _check_bound(args.torus, args.max_p, "p")
        return torus_p2_presentation(args.torus)
    with open(args.presentation, encoding="utf-8") as f:
        text = f.read()
    pres = parse_presentation(text)
    _check_bound(pres.generator_count, args.max_p, "p")
    return pres


def _full_homs(q: FiniteQuandle) -> HomSet:
    if q.kind == "dihedral" and q.size >= 3:
        return dihedral_endos(q.size)
    return enumerate_homs(q)


def _load_hom_set(args, q: FiniteQuandle) -> HomSet:
    if args.hom_set == "full":
        return _full_homs(q)
    if args.hom_set == "identity":
        return HomSet(q, (identity_hom(q.size),))
    with open(args.hom_set, encoding="utf-8") as f:
        image_lists = json.load(f)
    if not isinstance(image_lists, list):
        raise ValueError("hom set file must be a JSON array of image arrays")
    return homs_from_images(q, image_lists)


def _shape_str(shape) -> str:
    if isinstance(shape, UniformCompleteShape):
        return f"uniform_complete({shape.weight})"
    if isinstance(shape, JoinShape):
        s, w = shape.sizes, shape.weights
        return f"join(({s[0]}, {s[1]}), ({w[0]}, {w[1]}, {w[2]}))"
    return "unclassified"


def _table_lines(q: FiniteQuandle) -> list[str]:
    return [
        "  " + " ".join(str(q.op(x, y)) for y in range(q.size)) for x in range(q.size)
    ]


def _cmd_quandle(args) -> str:
    q = _load_quandle(args)
    endos = None
    if args.endos or args.check:
        endos = _full_homs(q)
    checks = {}
    if args.check:
        brute = enumerate_homs(q)
        checks["endo_enumeration_match"] = {h.images for h in endos} == {
            h.images for h in brute
        }
        members = {h.images for h in endos}
        checks["composition_closed"] = all(
            compose(f, g).images in members for f in endos for g in endos
        )
    if args.format == "json":
        data = {
            "format_version": 1,
            "kind": q.kind,
            "size": q.size,
            "table": [list(row) for row in q.table],
        }
        if args.endos:
            data["endos"] = [list(h.images) for h in endos]
        if args.check:
            data["checks"] = checks
        return json.dumps(data, indent=2) + "\n"
    lines = [f"kind: {q.kind}", f"size: {q.size}", "axioms: ok", "table:"]
    lines.extend(_table_lines(q))
    if args.endos:
        lines.append(f"endomorphisms: {len(endos)}")
        lines.extend(f"  {h.images}" for h in endos)
    if args.check:
        lines.append(
            "endo enumeration cross-check: "
            + ("ok" if checks["endo_enumeration_match"] else "MISMATCH")
        )
        lines.append(
            "composition closure: " + ("ok" if checks["composition_closed"] else "BROKEN")
        )
    return "\n".join(lines) + "\n"


def _cmd_presentation(args) -> str:
    pres = _load_presentation(args)
    if args.format == "json":
        return serialize_presentation(pres)
    names = pres.generator_names
    lines = ["generators: " + " ".join(names), "relations:"]
    lines.extend(
        f"  {names[i - 1]} ▷ {names[j - 1]} = {names[k - 1]}"
        for i, j, k in pres.relations
    )
    return "\n".join(lines) + "\n"


def _space_text(space: ColoringSpace, args) -> str:
    trivial = set(space.trivial_indices)
    lines = [
        f"colorings: {counting_invariant(space.presentation, space.quandle)}",
        f"trivial: {len(trivial)}",
        f"nontrivial: {len(space) - len(trivial)}",
    ]
    lines.extend(
        f"  {c.assignment}" + (" trivial" if i in trivial else "")
        for i, c in enumerate(space.colorings)
    )
    if args.torus is not None and args.dihedral is not None:
        ok = all(
            check_congruence(c, args.torus, args.dihedral) for c in space.colorings
        )
        lines.append("congruence check: " + ("ok" if ok else "VIOLATED"))
    return "\n".join(lines) + "\n"


def _cmd_colorings(args) -> str:
    pres = _load_presentation(args)
    q = _load_quandle(args)
    space = enumerate_colorings(pres, q)
    if args.format == "json":
        return to_json(space)
    return _space_text(space, args)


def _cmd_quiver(args) -> str:
    pres = _load_presentation(args)
    q = _load_quandle(args)
    space = enumerate_colorings(pres, q)
    homset = _load_hom_set(args, q)
    quiver = build_quiver(space, homset)
    prediction_line = None
    if args.predict:
        if args.torus is None or args.dihedral is None:
            raise ValueError("--predict requires --torus and --dihedral")
        try:
            predicted = predicted_quiver(args.torus, args.dihedral)
        except HypothesisNotMetError as e:
            prediction_line = f"prediction: not applicable ({e})"
        else:
            iso, _ = are_isomorphic(quiver, predicted, args.max_vertices)
            prediction_line = "prediction: match" if iso else "prediction: MISMATCH"
    if prediction_line is not None and args.format != "text":
        print(prediction_line, file=sys.stderr)
    if args.canonical:
        matrix = canonical_form(quiver, args.max_vertices)
        if args.format == "json":
            data = {"format_version": 1, "canonical_weights": [list(r) for r in matrix]}
            return json.dumps(data, indent=2) + "\n"
        if args.format == "dot":
            raise ValueError("--canonical supports text or json output")
        return "\n".join("  " + " ".join(str(w) for w in row) for row in matrix) + "\n"
    if args.format == "json":
        return to_json(quiver)
    if args.format == "dot":
        return to_dot(quiver, args.dot_mode)
    lines = [
        f"vertices: {quiver.vertex_count}",
        f"maps: {quiver.hom_set_size}",
        f"shape: {_shape_str(classify_shape(quiver))}",
        "weights:",
    ]
    lines.extend("  " + " ".join(str(w) for w in row) for row in quiver.weights)
    if prediction_line is not None:
        lines.append(prediction_line)
    return "\n".join(lines) + "\n"


def _cmd_isomorphic(args) -> str:
    quivers = []
    for path in (args.quiver1, args.quiver2):
        with open(path, encoding="utf-8") as f:
            quivers.append(quiver_from_json(f.read()))
    iso, witness = are_isomorphic(quivers[0], quivers[1], args.max_vertices)
    if args.format == "json":
        data = {"format_version": 1, "isomorphic": iso, "witness": witness}
        return json.dumps(data, indent=2) + "\n"
    lines = [f"isomorphic: {'yes' if iso else 'no'}"]
    if iso:
        lines.append("witness: " + " ".join(str(v) for v in witness))
    return "\n".join(lines) + "\n"


def _report_text(report) -> str:
    shape_match = "n/a" if report.shape_match is None else ("yes" if report.shape_match else "NO")
    lines = [
        f"p={report.p} n={report.n}",
        f"count: computed {report.computed_count}, predicted {report.predicted_count}, "
        f"match: {'yes' if report.count_match else 'NO'}",
        f"shape: {_shape_str(report.quiver_shape)}",
        f"prediction applicable: {'yes' if report.prediction_applicable else 'no'}",
        f"shape match: {shape_match}",
    ]
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> str:
    _check_bound(args.torus, args.max_p, "p")
    _check_bound(args.dihedral, args.max_n, "n")
    report = verify(args.torus, args.dihedral)
    if args.format == "json":
        return to_json(report)
    return _report_text(report)


def _parse_range(spec: str, name: str) -> range:
    parts = spec.split(":")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"{name}: expected A:B or a single integer, got {spec!r}") from None
    if lo > hi:
        raise ValueError(f"{name}: empty range {spec!r}")
    return range(lo, hi + 1)


def _cmd_sweep(args) -> str:
    p_range = _parse_range(args.p_range, "--p-range")
    n_range = _parse_range(args.n_range, "--n-range")
    _check_bound(p_range.stop - 1, args.max_p, "p")
    _check_bound(n_range.stop - 1, args.max_n, "n")
    reports = [verify(p, n) for p in p_range for n in n_range]
    if args.format == "json":
        data = {
            "format_version": 1,
            "reports": [json.loads(to_json(r)) for r in reports],
        }
        return json.dumps(data, indent=2) + "\n"
    lines = ["p n count predicted count_match shape shape_match"]
    for r in reports:
        shape_match = "n/a" if r.shape_match is None else ("yes" if r.shape_match else "NO")
        lines.append(
            f"{r.p} {r.n} {r.computed_count} {r.predicted_count} "
            f"{'yes' if r.count_match else 'NO'} {_shape_str(r.quiver_shape)} {shape_match}"
        )
    return "\n".join(lines) + "\n"


_HANDLERS = {
    "quandle": _cmd_quandle,
    "presentation": _cmd_presentation,
    "colorings": _cmd_colorings,
    "quiver": _cmd_quiver,
    "isomorphic": _cmd_isomorphic,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
}


def run(argv) -> int:
    """Entry point returning the exit code; never raises for expected errors."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        text = _HANDLERS[args.command](args)
    except (BoundExceededError, QuiverTooLargeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except (ValueError, KeyError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as f:
                f.write(text)
        else:
            sys.stdout.write(text)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
