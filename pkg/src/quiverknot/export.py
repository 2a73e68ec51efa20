"""Serialization to DOT and JSON, and end-to-end verification reports.

All JSON documents carry "format_version": 1 and use stable key order,
so repeated runs are byte-identical.  `verify` runs the whole pipeline
for one (p, n) pair and compares the computed coloring count and quiver
shape against the closed forms.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .colorings import (
    Coloring,
    ColoringSpace,
    enumerate_colorings,
    predicted_count,
)
from .presentations import parse_presentation, torus_p2_presentation
from .quandles import dihedral_endos, make_dihedral, quandle_from_parts
from .quivers import (
    NotAJoinError,
    Quiver,
    QuiverVertex,
    _is_prime,
    build_quiver,
    join_decompose,
)

FORMAT_VERSION = 1


@dataclass(frozen=True)
class UniformCompleteShape:
    """Every weight, loops included, equals `weight`."""

    weight: int


@dataclass(frozen=True)
class JoinShape:
    """Join of two uniform blocks: sizes (trivial, nontrivial), weights
    (trivial block, nontrivial block, nontrivial→trivial cross)."""

    sizes: tuple[int, int]
    weights: tuple[int, int, int]


@dataclass(frozen=True)
class UnclassifiedShape:
    """Empirical fallback: distinct weights seen in each block, keyed
    trivial_trivial / trivial_nontrivial / nontrivial_trivial /
    nontrivial_nontrivial."""

    blocks: tuple[tuple[str, tuple[int, ...]], ...]


QuiverShape = UniformCompleteShape | JoinShape | UnclassifiedShape


@dataclass(frozen=True)
class VerificationReport:
    """Computed-versus-predicted summary for one (p, n) pair."""

    p: int
    n: int
    computed_count: int
    predicted_count: int
    count_match: bool
    quiver_shape: QuiverShape
    prediction_applicable: bool
    shape_match: bool | None


def classify_shape(q: Quiver) -> QuiverShape:
    """Empirical shape of a quiver: uniform complete, join, or unclassified."""
    flat = [w for row in q.weights for w in row]
    if flat and len(set(flat)) == 1:
        return UniformCompleteShape(flat[0])
    try:
        dec = join_decompose(q)
    except NotAJoinError:
        return UnclassifiedShape(_block_summary(q))
    return JoinShape(
        (len(dec.trivial_block), len(dec.nontrivial_block)),
        (dec.trivial_weight, dec.nontrivial_weight, dec.cross_weight),
    )


def _block_summary(q: Quiver) -> tuple[tuple[str, tuple[int, ...]], ...]:
    trivial = [i for i, v in enumerate(q.vertices) if v.trivial]
    nontrivial = [i for i, v in enumerate(q.vertices) if not v.trivial]
    blocks = (
        ("trivial_trivial", trivial, trivial),
        ("trivial_nontrivial", trivial, nontrivial),
        ("nontrivial_trivial", nontrivial, trivial),
        ("nontrivial_nontrivial", nontrivial, nontrivial),
    )
    return tuple(
        (name, tuple(sorted({q.weights[u][v] for u in rows for v in cols})))
        for name, rows, cols in blocks
    )


def verify(p: int, n: int) -> VerificationReport:
    """Run the full pipeline for (p, n) and compare against the closed forms.

    Failures are recorded in the report fields, never raised.
    """
    pres = torus_p2_presentation(p)
    quandle = make_dihedral(n)
    space = enumerate_colorings(pres, quandle)
    computed = len(space)
    predicted = predicted_count(p, n)
    quiver = build_quiver(space, dihedral_endos(n))
    shape = classify_shape(quiver)
    c = math.gcd(p, n)
    applicable = c == 1 or _is_prime(c)
    if not applicable:
        expected = None
        shape_match = None
    elif c == 1:
        expected = UniformCompleteShape(n)
        shape_match = shape == expected
    else:
        expected = JoinShape((n, n * (c - 1)), (n, n // c, n // c))
        shape_match = shape == expected
    return VerificationReport(
        p, n, computed, predicted, computed == predicted, shape, applicable, shape_match
    )


def to_dot(q: Quiver, mode: str = "weighted") -> str:
    """Render a quiver as a DOT digraph.

    mode "weighted" emits one labeled edge per nonzero weight; mode
    "parallel" emits weight-many unlabeled edges.  Vertices are named
    c<index> with the coloring in the tooltip; trivial vertices are
    drawn as boxes.  Statement order is vertices ascending, then edges
    row-major, so output is deterministic.
    """
    if mode not in ("weighted", "parallel"):
        raise ValueError(f"unknown DOT mode {mode!r}")
    lines = ["digraph quiver {"]
    for i, v in enumerate(q.vertices):
        shape = "box" if v.trivial else "circle"
        if v.assignment is None:
            tip = "trivial" if v.trivial else "nontrivial"
        else:
            tip = "(" + ", ".join(str(x) for x in v.assignment) + ")"
        lines.append(f'  c{i} [shape={shape}, tooltip="{tip}"];')
    for u in range(q.vertex_count):
        for v in range(q.vertex_count):
            w = q.weights[u][v]
            if w == 0:
                continue
            if mode == "weighted":
                lines.append(f"  c{u} -> c{v} [label={w}];")
            else:
                lines.extend([f"  c{u} -> c{v};"] * w)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _shape_to_data(shape: QuiverShape) -> dict:
    if isinstance(shape, UniformCompleteShape):
        return {"kind": "uniform_complete", "k": shape.weight}
    if isinstance(shape, JoinShape):
        return {
            "kind": "join",
            "sizes": list(shape.sizes),
            "weights": list(shape.weights),
        }
    return {
        "kind": "unclassified",
        "blocks": {name: list(ws) for name, ws in shape.blocks},
    }


def _shape_from_data(data: dict) -> QuiverShape:
    kind = data["kind"]
    if kind == "uniform_complete":
        return UniformCompleteShape(data["k"])
    if kind == "join":
        return JoinShape(tuple(data["sizes"]), tuple(data["weights"]))
    if kind == "unclassified":
        return UnclassifiedShape(
            tuple((name, tuple(ws)) for name, ws in data["blocks"].items())
        )
    raise ValueError(f"unknown shape kind {kind!r}")


def to_json(obj: Quiver | ColoringSpace | VerificationReport) -> str:
    """Stable JSON for quivers, coloring spaces, and verification reports."""
    if isinstance(obj, Quiver):
        data = {
            "format_version": FORMAT_VERSION,
            "vertex_count": obj.vertex_count,
            "vertices": [
                {
                    "assignment": None if v.assignment is None else list(v.assignment),
                    "trivial": v.trivial,
                }
                for v in obj.vertices
            ],
            "weights": [list(row) for row in obj.weights],
        }
    elif isinstance(obj, ColoringSpace):
        pres = obj.presentation
        names = pres.generator_names
        data = {
            "format_version": FORMAT_VERSION,
            "presentation": {
                "generators": list(names),
                "relations": [
                    [names[i - 1], names[j - 1], names[k - 1]]
                    for i, j, k in pres.relations
                ],
            },
            "quandle": {
                "kind": obj.quandle.kind,
                "size": obj.quandle.size,
                "table": [list(row) for row in obj.quandle.table],
            },
            "colorings": [list(c.assignment) for c in obj.colorings],
            "trivial_indices": list(obj.trivial_indices),
        }
    elif isinstance(obj, VerificationReport):
        data = {
            "format_version": FORMAT_VERSION,
            "parameters": {"p": obj.p, "n": obj.n},
            "computed_count": obj.computed_count,
            "predicted_count": obj.predicted_count,
            "count_match": obj.count_match,
            "quiver_shape": _shape_to_data(obj.quiver_shape),
            "prediction_applicable": obj.prediction_applicable,
            "shape_match": obj.shape_match,
        }
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(data, indent=2) + "\n"


def _load(text: str, kind: str) -> dict:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError(f"{kind}: top level must be an object")
    if data.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"{kind}: unsupported format_version {data.get('format_version')!r}")
    return data


def quiver_from_json(text: str) -> Quiver:
    """Parse a quiver document; the inverse of to_json on quivers.

    The hom set size is recovered from the row sums, which equal the
    number of maps for every row of a well-formed quiver.
    """
    data = _load(text, "quiver")
    vertices = tuple(
        QuiverVertex(
            None if v["assignment"] is None else tuple(v["assignment"]),
            bool(v["trivial"]),
        )
        for v in data["vertices"]
    )
    weights = tuple(tuple(row) for row in data["weights"])
    hom_set_size = sum(weights[0]) if weights else 0
    return Quiver(data["vertex_count"], weights, vertices, hom_set_size)


def coloring_space_from_json(text: str) -> ColoringSpace:
    """Parse a coloring space document; the inverse of to_json on spaces."""
    data = _load(text, "coloring space")
    pres_data = data["presentation"]
    pres = parse_presentation(
        json.dumps(
            {"generators": pres_data["generators"], "relations": pres_data["relations"]}
        )
    )
    q = quandle_from_parts(
        data["quandle"]["kind"], data["quandle"]["size"], data["quandle"]["table"]
    )
    colorings = tuple(Coloring(tuple(a)) for a in data["colorings"])
    return ColoringSpace(pres, q, colorings, tuple(data["trivial_indices"]))


def report_from_json(text: str) -> VerificationReport:
    """Parse a verification report document; the inverse of to_json on reports."""
    data = _load(text, "report")
    return VerificationReport(
        data["parameters"]["p"],
        data["parameters"]["n"],
        data["computed_count"],
        data["predicted_count"],
        data["count_match"],
        _shape_from_data(data["quiver_shape"]),
        data["prediction_applicable"],
        data["shape_match"],
    )
