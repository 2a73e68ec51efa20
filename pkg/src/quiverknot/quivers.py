"""Coloring quivers: weighted digraphs on the coloring space of a link.

Given a set S of endomorphisms of the coloring quandle, the quiver has
one vertex per coloring and weight(u, v) = number of maps in S whose
composite with coloring u equals coloring v.  For (p,2)-torus links over
the dihedral quandle of size n with the full endomorphism set:

  * gcd(p, n) = 1: the complete directed graph on n vertices with every
    weight (loops included) equal to n;
  * gcd(p, n) = c prime: the join of two complete directed graphs, the
    n trivial vertices with internal weight n and the n(c-1) nontrivial
    vertices with internal weight d = n/c, plus weight-d edges from
    every nontrivial vertex to every trivial one and none back.

`predicted_quiver` synthesizes those matrices directly; `join_decompose`
and `is_uniform_complete` verify them on computed quivers.  Isomorphism
is decided by weighted color refinement followed by a backtracking
search within refinement cells, and `canonical_form` produces a matrix
equal for two quivers exactly when they are isomorphic.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass

from .colorings import ColoringSpace
from .quandles import HomSet

DEFAULT_MAX_VERTICES = 64


class CompositeNotInSpaceError(RuntimeError):
    """A composite coloring fell outside the space; impossible for a
    complete space and genuine endomorphisms, so it signals a bug."""


class NotAJoinError(ValueError):
    """The quiver is not a join of two uniform complete blocks.

    Attributes:
        block: which block failed ("trivial", "nontrivial", "cross",
            "reverse", or "empty").
        witness: offending vertex pair, when one exists.
    """

    def __init__(self, block: str, witness: tuple | None, message: str):
        super().__init__(message)
        self.block = block
        self.witness = witness


class HypothesisNotMetError(ValueError):
    """No closed-form quiver is known for composite gcd(p, n) > 1."""


class QuiverTooLargeError(RuntimeError):
    """Vertex count exceeds the search bound and invariants did not resolve."""


@dataclass(frozen=True)
class QuiverVertex:
    """Vertex metadata: the coloring assignment (None for synthesized
    quivers, where only the trivial/nontrivial tag is determined)."""

    assignment: tuple[int, ...] | None
    trivial: bool


@dataclass(frozen=True)
class Quiver:
    """Weighted digraph on colorings; weights[u][v] counts maps sending u to v."""

    vertex_count: int
    weights: tuple[tuple[int, ...], ...]
    vertices: tuple[QuiverVertex, ...]
    hom_set_size: int

    def __post_init__(self):
        v = self.vertex_count
        if len(self.weights) != v or any(len(row) != v for row in self.weights):
            raise ValueError(f"weight matrix is not {v}x{v}")
        if len(self.vertices) != v:
            raise ValueError("vertex metadata length mismatch")
        for u, row in enumerate(self.weights):
            if sum(row) != self.hom_set_size:
                raise ValueError(
                    f"row {u} sums to {sum(row)}, expected {self.hom_set_size}"
                )


@dataclass(frozen=True)
class JoinDecomposition:
    """Block structure of a join quiver over the trivial/nontrivial split."""

    trivial_block: tuple[int, ...]
    nontrivial_block: tuple[int, ...]
    trivial_weight: int
    nontrivial_weight: int
    cross_weight: int
    reverse_edges_absent: bool


def build_quiver(space: ColoringSpace, homset: HomSet) -> Quiver:
    """Quiver of the coloring space with respect to the maps in homset.

    For each coloring u and map phi, the composite coloring phi∘u is
    located in the space and weight(u, index of composite) incremented.
    """
    if homset.quandle.table != space.quandle.table:
        raise ValueError("hom set and coloring space use different quandles")
    index = {c.assignment: i for i, c in enumerate(space.colorings)}
    v_count = len(space.colorings)
    weights = [[0] * v_count for _ in range(v_count)]
    for u, coloring in enumerate(space.colorings):
        for phi in homset:
            composite = tuple(phi.images[x] for x in coloring.assignment)
            v = index.get(composite)
            if v is None:
                raise CompositeNotInSpaceError(
                    f"composite {composite} of vertex {u} is not a known coloring"
                )
            weights[u][v] += 1
    vertices = tuple(
        QuiverVertex(c.assignment, c.is_trivial()) for c in space.colorings
    )
    return Quiver(v_count, tuple(tuple(row) for row in weights), vertices, len(homset))


def is_uniform_complete(q: Quiver, k: int) -> bool:
    """True iff every weight, loops included, equals k."""
    return all(w == k for row in q.weights for w in row)


def join_decompose(q: Quiver) -> JoinDecomposition:
    """Split by the trivial tag and check the four weight blocks.

    Requires constant weights on trivial×trivial, nontrivial×nontrivial
    and nontrivial→trivial, and zero weights trivial→nontrivial; raises
    NotAJoinError naming the offending block otherwise.
    """
    trivial = tuple(i for i, v in enumerate(q.vertices) if v.trivial)
    nontrivial = tuple(i for i, v in enumerate(q.vertices) if not v.trivial)
    if not trivial:
        raise NotAJoinError("empty", None, "no trivial vertices")
    if not nontrivial:
        raise NotAJoinError("empty", None, "no nontrivial vertices")
    w = q.weights

    def constant_block(rows, cols, name):
        ref = w[rows[0]][cols[0]]
        for u in rows:
            for v in cols:
                if w[u][v] != ref:
                    raise NotAJoinError(
                        name,
                        (u, v),
                        f"{name} block not constant: weight({u},{v}) = {w[u][v]} != {ref}",
                    )
        return ref

    trivial_weight = constant_block(trivial, trivial, "trivial")
    nontrivial_weight = constant_block(nontrivial, nontrivial, "nontrivial")
    cross_weight = constant_block(nontrivial, trivial, "cross")
    for u in trivial:
        for v in nontrivial:
            if w[u][v] != 0:
                raise NotAJoinError(
                    "reverse", (u, v), f"unexpected edge trivial {u} -> nontrivial {v}"
                )
    return JoinDecomposition(
        trivial, nontrivial, trivial_weight, nontrivial_weight, cross_weight, True
    )


def _is_prime(c: int) -> bool:
    if c < 2:
        return False
    d = 2
    while d * d <= c:
        if c % d == 0:
            return False
        d += 1
    return True


def predicted_quiver(p: int, n: int) -> Quiver:
    """Synthesize the closed-form full quiver without enumerating colorings.

    Defined when gcd(p, n) is 1 or prime; raises HypothesisNotMetError
    for composite gcd, where no closed form is known.  Vertices carry
    trivial tags but no concrete colorings; the trivial block comes first.
    """
    if p < 2:
        raise ValueError(f"need p >= 2, got {p}")
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    c = math.gcd(p, n)
    if c == 1:
        weights = tuple(tuple(n for _ in range(n)) for _ in range(n))
        vertices = tuple(QuiverVertex(None, True) for _ in range(n))
        return Quiver(n, weights, vertices, n * n)
    if not _is_prime(c):
        raise HypothesisNotMetError(
            f"gcd({p}, {n}) = {c} is composite; no closed form applies"
        )
    d = n // c
    v_count = n * c
    rows = []
    for u in range(v_count):
        if u < n:
            rows.append(tuple(n if v < n else 0 for v in range(v_count)))
        else:
            rows.append(tuple(d for _ in range(v_count)))
    vertices = tuple(QuiverVertex(None, u < n) for u in range(v_count))
    return Quiver(v_count, tuple(rows), vertices, n * n)


def _normalize_keys(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine_colors(matrices) -> list[list[int]]:
    """Color refinement over one or more weight matrices on a shared palette.

    Vertices start from the invariant (loop weight, sorted out-weights,
    sorted in-weights) and are repeatedly split by the multiset of
    (neighbor color, weight) pairs in both directions until stable.
    Corresponding vertices of isomorphic quivers always receive equal
    colors; a color histogram mismatch proves non-isomorphism.
    """
    sizes = [len(m) for m in matrices]
    keys = []
    for m in matrices:
        v_count = len(m)
        for v in range(v_count):
            keys.append(
                (
                    m[v][v],
                    tuple(sorted(m[v])),
                    tuple(sorted(m[u][v] for u in range(v_count))),
                )
            )
    colors = _normalize_keys(keys)
    while True:
        new_keys = []
        offset = 0
        for m in matrices:
            v_count = len(m)
            local = colors[offset : offset + v_count]
            for v in range(v_count):
                out_profile = tuple(sorted(zip(local, m[v])))
                in_profile = tuple(
                    sorted((local[u], m[u][v]) for u in range(v_count))
                )
                new_keys.append((colors[offset + v], out_profile, in_profile))
            offset += v_count
        new_colors = _normalize_keys(new_keys)
        if new_colors == colors:
            break
        colors = new_colors
    split = []
    offset = 0
    for v_count in sizes:
        split.append(colors[offset : offset + v_count])
        offset += v_count
    return split


def are_isomorphic(
    q1: Quiver, q2: Quiver, max_vertices: int = DEFAULT_MAX_VERTICES
) -> tuple[bool, list[int] | None]:
    """Decide weight-preserving vertex bijection; return (flag, witness).

    The witness maps q1 vertex indices to q2 indices and satisfies
    weights1[u][v] == weights2[pi[u]][pi[v]] for all u, v.  Refinement
    rejections are free at any size; the cell-wise backtracking search
    raises QuiverTooLargeError past max_vertices.
    """
    if q1.vertex_count != q2.vertex_count:
        return False, None
    v_count = q1.vertex_count
    if v_count == 0:
        return True, []
    w1, w2 = q1.weights, q2.weights
    c1, c2 = _refine_colors([w1, w2])
    if sorted(c1) != sorted(c2):
        return False, None
    cells2 = defaultdict(list)
    for u, color in enumerate(c2):
        cells2[color].append(u)
    largest = max(len(cell) for cell in cells2.values())
    if v_count > max_vertices and largest > 1:
        raise QuiverTooLargeError(
            f"{v_count} vertices exceed the bound {max_vertices}"
        )
    order = sorted(range(v_count), key=lambda v: (len(cells2[c1[v]]), c1[v], v))
    mapping = [-1] * v_count
    used = [False] * v_count

    def search(i: int) -> bool:
        if i == v_count:
            return True
        v = order[i]
        for u in cells2[c1[v]]:
            if used[u]:
                continue
            ok = w1[v][v] == w2[u][u]
            if ok:
                for x in order[:i]:
                    mx = mapping[x]
                    if w1[v][x] != w2[u][mx] or w1[x][v] != w2[mx][u]:
                        ok = False
                        break
            if ok:
                mapping[v] = u
                used[u] = True
                if search(i + 1):
                    return True
                mapping[v] = -1
                used[u] = False
        return False

    if search(0):
        return True, list(mapping)
    return False, None


def _swap_fixes(w, a: int, b: int) -> bool:
    # Transposing a and b is an automorphism of the weight matrix.
    if w[a][a] != w[b][b] or w[a][b] != w[b][a]:
        return False
    for x in range(len(w)):
        if x == a or x == b:
            continue
        if w[a][x] != w[b][x] or w[x][a] != w[x][b]:
            return False
    return True


def canonical_form(
    q: Quiver, max_vertices: int = DEFAULT_MAX_VERTICES
) -> tuple[tuple[int, ...], ...]:
    """Canonical weight matrix: equal for two quivers iff they are isomorphic.

    Vertices are grouped into refinement cells, cells laid out in
    descending color order (which puts the heavier-looped trivial block
    of a join first), and the matrix minimized over within-cell
    orderings.  The search compares placements by the L-shaped layer of
    weights each new vertex adds, prunes branches that exceed the best
    prefix, and skips candidates interchangeable with an already tried
    one by a transposition automorphism, which collapses the search on
    block-uniform quivers.
    """
    v_count = q.vertex_count
    if v_count > max_vertices:
        raise QuiverTooLargeError(f"{v_count} vertices exceed the bound {max_vertices}")
    if v_count == 0:
        return ()
    w = q.weights
    colors = _refine_colors([w])[0]
    cells = defaultdict(list)
    for v, color in enumerate(colors):
        cells[color].append(v)
    position_cell: list[list[int]] = []
    for color in sorted(cells, reverse=True):
        position_cell.extend([cells[color]] * len(cells[color]))

    used = [False] * v_count
    placed: list[int] = []
    layers: list[tuple[int, ...]] = []
    best_layers: list[tuple[int, ...]] | None = None
    best_order: list[int] | None = None

    def search(already_less: bool) -> None:
        nonlocal best_layers, best_order
        i = len(placed)
        if i == v_count:
            if best_layers is None or already_less:
                best_layers = list(layers)
                best_order = list(placed)
            return
        reps: list[int] = []
        for v in position_cell[i]:
            if used[v]:
                continue
            if any(_swap_fixes(w, v, r) for r in reps):
                continue
            reps.append(v)
        for v in reps:
            layer = (
                tuple(w[v][x] for x in placed)
                + (w[v][v],)
                + tuple(w[x][v] for x in placed)
            )
            now_less = already_less
            if best_layers is not None and not already_less:
                if layer > best_layers[i]:
                    continue
                if layer < best_layers[i]:
                    now_less = True
            used[v] = True
            placed.append(v)
            layers.append(layer)
            search(now_less)
            layers.pop()
            placed.pop()
            used[v] = False

    search(False)
    assert best_order is not None
    return tuple(tuple(w[a][b] for b in best_order) for a in best_order)
