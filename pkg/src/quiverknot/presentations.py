"""Finite quandle presentations with relations of the form a ▷ b = c.

The (p,2)-torus link is the closure of the two-strand braid with p
crossings; labeling its p arcs x1..xp from the bottom right and reading
one relation per crossing gives the presentation

    x2 ▷ x1 = xp,   x1 ▷ xp = x_{p-1},   x_i ▷ x_{i-1} = x_{i-2}  (3 <= i <= p).

Presentations are also read from and written to a small JSON format,
documented in `parse_presentation`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class PresentationError(ValueError):
    """Base class for invalid presentations and presentation files."""


class PresentationParseError(PresentationError):
    """Malformed presentation file (bad JSON, wrong shapes or types)."""


class UnknownGeneratorError(PresentationError):
    """A relation refers to a generator name that was not declared."""


class GeneratorIndexError(PresentationError):
    """A relation index lies outside 1..generator_count."""


@dataclass(frozen=True)
class QuandlePresentation:
    """Generators plus relations (i, j, k) meaning x_i ▷ x_j = x_k (1-based)."""

    generator_count: int
    generator_names: tuple[str, ...]
    relations: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        m = self.generator_count
        if m < 1:
            raise PresentationError("presentation needs at least one generator")
        if len(self.generator_names) != m:
            raise PresentationError(
                f"{m} generators declared but {len(self.generator_names)} names given"
            )
        if len(set(self.generator_names)) != m:
            raise PresentationError("generator names must be distinct")
        seen = set()
        for rel in self.relations:
            for idx in rel:
                if not 1 <= idx <= m:
                    raise GeneratorIndexError(f"relation index {idx} outside 1..{m}")
            if rel in seen:
                raise PresentationError(f"duplicate relation {rel}")
            seen.add(rel)


def torus_p2_presentation(p: int) -> QuandlePresentation:
    """Presentation of the fundamental quandle of the (p,2)-torus link.

    p generators and p relations; p = 2 gives the Hopf link.
    """
    if p < 2:
        raise ValueError(f"torus presentation needs p >= 2, got {p}")
    names = tuple(f"x{i}" for i in range(1, p + 1))
    relations = [(2, 1, p), (1, p, p - 1)]
    relations.extend((i, i - 1, i - 2) for i in range(3, p + 1))
    return QuandlePresentation(p, names, tuple(relations))


def is_torus_presentation(pres: QuandlePresentation) -> bool:
    """True when the relation set is exactly the (p,2)-torus family."""
    p = pres.generator_count
    if p < 2:
        return False
    return set(pres.relations) == set(torus_p2_presentation(p).relations)


def parse_presentation(text: str) -> QuandlePresentation:
    """Parse the JSON presentation format.

    The format is an object with keys "generators" (array of distinct
    strings) and "relations" (array of 3-element arrays, each entry a
    generator name or 1-based index, meaning a ▷ b = c).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PresentationParseError(f"line {e.lineno}, column {e.colno}: {e.msg}") from e
    if not isinstance(data, dict):
        raise PresentationParseError("top level must be an object")
    for key in ("generators", "relations"):
        if key not in data:
            raise PresentationParseError(f"missing key {key!r}")
    names = data["generators"]
    if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
        raise PresentationParseError("generators: expected an array of strings")
    index_of = {name: i + 1 for i, name in enumerate(names)}
    if len(index_of) != len(names):
        raise PresentationParseError("generators: names must be distinct")

    def resolve(entry, where: str) -> int:
        if isinstance(entry, str):
            if entry not in index_of:
                raise UnknownGeneratorError(f"{where}: unknown generator {entry!r}")
            return index_of[entry]
        if isinstance(entry, int) and not isinstance(entry, bool):
            if not 1 <= entry <= len(names):
                raise GeneratorIndexError(
                    f"{where}: index {entry} outside 1..{len(names)}"
                )
            return entry
        raise PresentationParseError(f"{where}: expected a name or index, got {entry!r}")

    rels = data["relations"]
    if not isinstance(rels, list):
        raise PresentationParseError("relations: expected an array")
    triples = []
    for r, rel in enumerate(rels):
        where = f"relations[{r}]"
        if not isinstance(rel, list) or len(rel) != 3:
            raise PresentationParseError(f"{where}: expected a 3-element array")
        triples.append(tuple(resolve(entry, where) for entry in rel))
    return QuandlePresentation(len(names), tuple(names), tuple(triples))


def serialize_presentation(pres: QuandlePresentation) -> str:
    """Write a presentation in the JSON format accepted by parse_presentation."""
    names = pres.generator_names
    data = {
        "generators": list(names),
        "relations": [[names[i - 1], names[j - 1], names[k - 1]] for i, j, k in pres.relations],
    }
    return json.dumps(data, indent=2) + "\n"
