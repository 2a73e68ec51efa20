"""Finite quandles given by explicit operation tables.

A quandle is a set with a binary operation x ▷ y that is idempotent
(x ▷ x = x), right-invertible (for each y the map x ↦ x ▷ y is a
permutation), and self-distributive ((x ▷ y) ▷ z = (x ▷ z) ▷ (y ▷ z)).
The dihedral quandle on {0, ..., n-1} has x ▷ y = (2y - x) mod n.

Besides table validation, this module enumerates the endomorphisms of a
finite quandle.  For dihedral quandles every endomorphism is determined
by the images of 0 and 1 via phi(k) = phi(k-2) ▷ phi(k-1), so the full
endomorphism set has exactly n*n elements and can be built recursively;
a generic backtracking enumerator serves as the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass


class AxiomError(ValueError):
    """An operation table violates one of the three quandle axioms.

    Attributes:
        axiom: 1 idempotence, 2 right-invertibility, 3 self-distributivity.
        witness: elements exhibiting the violation; (x,) for axiom 1,
            (y,) for axiom 2, (x, y, z) for axiom 3.
    """

    def __init__(self, axiom: int, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


def _check_axioms(table: tuple[tuple[int, ...], ...]) -> None:
    n = len(table)
    for x in range(n):
        if table[x][x] != x:
            raise AxiomError(1, (x,), f"not idempotent: {x} ▷ {x} = {table[x][x]}")
    for y in range(n):
        if len({table[x][y] for x in range(n)}) != n:
            raise AxiomError(2, (y,), f"column {y} is not a permutation")
    for x in range(n):
        for y in range(n):
            xy = table[x][y]
            for z in range(n):
                if table[xy][z] != table[table[x][z]][table[y][z]]:
                    raise AxiomError(
                        3, (x, y, z), f"self-distributivity fails at ({x}, {y}, {z})"
                    )


@dataclass(frozen=True, repr=False)
class FiniteQuandle:
    """A finite quandle as an n×n operation table, table[x][y] = x ▷ y."""

    size: int
    table: tuple[tuple[int, ...], ...]
    kind: str = "custom"

    def op(self, x: int, y: int) -> int:
        if not (0 <= x < self.size and 0 <= y < self.size):
            raise ValueError(f"element out of range: ({x}, {y}) for size {self.size}")
        return self.table[x][y]

    def __repr__(self) -> str:
        return f"FiniteQuandle({self.kind}, size={self.size})"


def make_dihedral(n: int) -> FiniteQuandle:
    """Dihedral quandle on 0..n-1 with x ▷ y = (2y - x) mod n."""
    if n < 2:
        raise ValueError(f"dihedral quandle needs size >= 2, got {n}")
    table = tuple(tuple((2 * y - x) % n for y in range(n)) for x in range(n))
    _check_axioms(table)
    return FiniteQuandle(n, table, "dihedral")


def make_from_table(table) -> FiniteQuandle:
    """Validate an explicit operation table and wrap it as a quandle.

    Raises AxiomError naming the first failing axiom and a witness;
    raises ValueError for tables that are not square arrays over 0..n-1.
    """
    rows = tuple(tuple(row) for row in table)
    n = len(rows)
    if n == 0:
        raise ValueError("empty operation table")
    for row in rows:
        if len(row) != n:
            raise ValueError("operation table is not square")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise ValueError(f"table entry {v!r} outside 0..{n - 1}")
    _check_axioms(rows)
    return FiniteQuandle(n, rows, "custom")


def quandle_from_parts(kind: str, size: int, table) -> FiniteQuandle:
    """Rebuild a quandle from serialized parts, revalidating everything."""
    q = make_from_table(table)
    if q.size != size:
        raise ValueError(f"declared size {size} does not match table size {q.size}")
    if kind == "dihedral":
        if q.table != make_dihedral(size).table:
            raise ValueError("table does not match the dihedral operation")
        return FiniteQuandle(size, q.table, "dihedral")
    if kind != "custom":
        raise ValueError(f"unknown quandle kind {kind!r}")
    return q


@dataclass(frozen=True)
class Hom:
    """A self-map of a quandle's elements, stored as the tuple of images."""

    images: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.images)


@dataclass(frozen=True)
class HomSet:
    """Homomorphisms of a quandle, sorted lexicographically by images.

    The enumeration constructors return the full endomorphism set;
    subsets (identity only, user-supplied lists) use the same container.
    """

    quandle: FiniteQuandle
    homs: tuple[Hom, ...]

    def __len__(self) -> int:
        return len(self.homs)

    def __iter__(self):
        return iter(self.homs)

    def __getitem__(self, i: int) -> Hom:
        return self.homs[i]


def identity_hom(size: int) -> Hom:
    return Hom(tuple(range(size)))


def is_endomorphism(q: FiniteQuandle, images) -> bool:
    """Check the homomorphism law f(x ▷ y) = f(x) ▷ f(y) on all pairs."""
    t = q.table
    n = q.size
    if len(images) != n or any(not 0 <= v < n for v in images):
        return False
    return all(
        images[t[x][y]] == t[images[x]][images[y]] for x in range(n) for y in range(n)
    )


def enumerate_homs(q: FiniteQuandle) -> HomSet:
    """All endomorphisms of q, by backtracking over partial image tuples.

    A candidate value for position k is kept only if every constraint
    whose participants x, y, x ▷ y are all assigned holds; each pair is
    therefore checked exactly once, which keeps the search complete
    while pruning far below the n**n map count.  Output is lexicographic.
    """
    n = q.size
    t = q.table
    checks = [[] for _ in range(n)]
    for x in range(n):
        for y in range(n):
            checks[max(x, y, t[x][y])].append((x, y, t[x][y]))
    images = [-1] * n
    homs: list[Hom] = []

    def extend(k: int) -> None:
        if k == n:
            homs.append(Hom(tuple(images)))
            return
        for v in range(n):
            images[k] = v
            if all(t[images[x]][images[y]] == images[z] for x, y, z in checks[k]):
                extend(k + 1)
        images[k] = -1

    extend(0)
    return HomSet(q, tuple(homs))


def dihedral_endos(n: int) -> HomSet:
    """The n*n endomorphisms of the dihedral quandle of size n >= 3.

    Each map is generated from the seed (phi(0), phi(1)) through
    phi(k) = phi(k-2) ▷ phi(k-1).  The two wrap-around constraints
    phi(n-2) ▷ phi(n-1) = phi(0) and phi(n-1) ▷ phi(0) = phi(1) hold
    automatically for the dihedral operation; they are asserted as a
    guard against implementation error, not used as a filter.
    """
    if n < 3:
        raise ValueError(f"recursive endomorphism construction needs size >= 3, got {n}")
    q = make_dihedral(n)
    t = q.table
    homs = []
    for a in range(n):
        for b in range(n):
            img = [a, b]
            for k in range(2, n):
                img.append(t[img[k - 2]][img[k - 1]])
            assert t[img[n - 2]][img[n - 1]] == img[0]
            assert t[img[n - 1]][img[0]] == img[1]
            homs.append(Hom(tuple(img)))
    return HomSet(q, tuple(homs))


def compose(f: Hom, g: Hom) -> Hom:
    """The composite f∘g; a homomorphism whenever f and g are."""
    if f.size != g.size:
        raise ValueError(f"size mismatch: {f.size} vs {g.size}")
    return Hom(tuple(f.images[v] for v in g.images))


def homs_from_images(q: FiniteQuandle, image_lists) -> HomSet:
    """Build a HomSet from explicit image tuples, validating each map."""
    homs = []
    seen = set()
    for images in image_lists:
        tup = tuple(images)
        if not is_endomorphism(q, tup):
            raise ValueError(f"{list(tup)} is not an endomorphism of {q!r}")
        if tup in seen:
            raise ValueError(f"duplicate map {list(tup)}")
        seen.add(tup)
        homs.append(Hom(tup))
    homs.sort(key=lambda h: h.images)
    return HomSet(q, tuple(homs))
