import itertools

import pytest

from quiverknot import (
    AxiomError,
    Hom,
    HomSet,
    compose,
    dihedral_endos,
    enumerate_homs,
    homs_from_images,
    identity_hom,
    is_endomorphism,
    make_dihedral,
    make_from_table,
)

TRIVIAL_2 = [[0, 0], [1, 1]]


def brute_force_homs(q):
    """Oracle: test the homomorphism law directly on every n**n map."""
    n, t = q.size, q.table
    out = []
    for images in itertools.product(range(n), repeat=n):
        if all(
            images[t[x][y]] == t[images[x]][images[y]]
            for x in range(n)
            for y in range(n)
        ):
            out.append(images)
    return out


@pytest.mark.parametrize("n", range(2, 13))
def test_dihedral_axioms_hold(n):
    q = make_dihedral(n)
    assert q.size == n
    assert q.kind == "dihedral"
    # revalidating through the table entry point must also succeed
    assert make_from_table(q.table).table == q.table


def test_dihedral_formula_spot_values():
    assert make_dihedral(3).op(0, 1) == 2
    assert make_dihedral(3).op(2, 1) == 0
    assert make_dihedral(4).op(1, 3) == 1
    assert make_dihedral(6).op(1, 4) == 1


def test_idempotence():
    q = make_dihedral(5)
    for x in range(5):
        assert q.op(x, x) == x


def test_op_rejects_out_of_range():
    q = make_dihedral(3)
    with pytest.raises(ValueError):
        q.op(3, 0)
    with pytest.raises(ValueError):
        q.op(0, -1)


def test_dihedral_size_too_small():
    with pytest.raises(ValueError):
        make_dihedral(1)


def test_from_table_accepts_valid_tables():
    assert make_from_table([[0, 2, 1], [2, 1, 0], [1, 0, 2]]).size == 3
    q = make_from_table(TRIVIAL_2)
    assert q.kind == "custom"
    assert q.op(0, 1) == 0


def test_from_table_idempotence_violation():
    table = [[1, 0], [1, 1]]
    with pytest.raises(AxiomError) as exc:
        make_from_table(table)
    assert exc.value.axiom == 1
    assert exc.value.witness == (0,)


def test_from_table_invertibility_violation():
    table = [[0, 1], [1, 1]]
    with pytest.raises(AxiomError) as exc:
        make_from_table(table)
    assert exc.value.axiom == 2
    assert exc.value.witness == (1,)


def test_from_table_self_distributivity_violation():
    # idempotent with permutation columns, but not self-distributive
    table = [[0, 0, 1], [2, 1, 0], [1, 2, 2]]
    with pytest.raises(AxiomError) as exc:
        make_from_table(table)
    assert exc.value.axiom == 3
    x, y, z = exc.value.witness
    assert table[table[x][y]][z] != table[table[x][z]][table[y][z]]


def test_from_table_shape_errors():
    with pytest.raises(ValueError):
        make_from_table([])
    with pytest.raises(ValueError):
        make_from_table([[0, 1], [0]])
    with pytest.raises(ValueError):
        make_from_table([[0, 2], [1, 1]])


@pytest.mark.parametrize("n", range(2, 9))
def test_columns_are_permutations_fixing_y(n):
    q = make_dihedral(n)
    for y in range(n):
        column = [q.op(x, y) for x in range(n)]
        assert sorted(column) == list(range(n))
        assert column[y] == y


def test_endo_count_and_seed_values():
    endos = dihedral_endos(3)
    assert len(endos) == 9
    images = {h.images for h in endos}
    assert (0, 1, 2) in images
    # seed (0, 2) propagates to 0 ▷ 2 = 1
    assert (0, 2, 1) in images
    assert (0, 2, 1) in set(brute_force_homs(make_dihedral(3)))


def test_endos_require_size_three():
    with pytest.raises(ValueError):
        dihedral_endos(2)


@pytest.mark.parametrize("n", range(3, 9))
def test_recursive_endos_equal_backtracking(n):
    recursive = {h.images for h in dihedral_endos(n)}
    backtracked = {h.images for h in enumerate_homs(make_dihedral(n))}
    assert recursive == backtracked
    assert len(recursive) == n * n


@pytest.mark.parametrize("n", [3, 4, 5])
def test_backtracking_matches_exhaustive_oracle(n):
    q = make_dihedral(n)
    assert [h.images for h in enumerate_homs(q)] == brute_force_homs(q)


def test_enumeration_is_sorted_without_duplicates():
    homs = [h.images for h in enumerate_homs(make_dihedral(6))]
    assert homs == sorted(set(homs))


def test_identity_and_constants_are_endomorphisms():
    for q in (make_dihedral(4), make_dihedral(5), make_from_table(TRIVIAL_2)):
        images = {h.images for h in enumerate_homs(q)}
        assert identity_hom(q.size).images in images
        for c in range(q.size):
            assert (c,) * q.size in images


def test_trivial_quandle_has_all_maps_as_homs():
    assert len(enumerate_homs(make_from_table(TRIVIAL_2))) == 4


def test_compose():
    f = Hom((0, 2, 1))
    assert compose(f, f).images == (0, 1, 2)
    g = Hom((1, 2, 0))
    assert compose(identity_hom(3), g) == g
    assert compose(g, identity_hom(3)) == g
    const = Hom((2, 2, 2))
    assert compose(const, g) == const
    with pytest.raises(ValueError):
        compose(Hom((0, 1)), g)


def test_hom_set_closed_under_composition():
    endos = dihedral_endos(5)
    members = {h.images for h in endos}
    for f in endos:
        for g in endos:
            assert compose(f, g).images in members


def test_composition_associative_on_sample():
    endos = list(dihedral_endos(4))
    sample = endos[::3]
    for f in sample:
        for g in sample:
            for h in sample:
                assert compose(compose(f, g), h) == compose(f, compose(g, h))


@pytest.mark.parametrize("n", range(3, 8))
def test_any_consecutive_pair_determines_endo(n):
    q = make_dihedral(n)
    for phi in dihedral_endos(n):
        for k in range(n):
            rebuilt = [-1] * n
            rebuilt[k] = phi.images[k]
            rebuilt[(k + 1) % n] = phi.images[(k + 1) % n]
            for step in range(2, n):
                i = (k + step) % n
                rebuilt[i] = q.table[rebuilt[(i - 2) % n]][rebuilt[(i - 1) % n]]
            assert tuple(rebuilt) == phi.images


def test_homs_from_images():
    q = make_dihedral(3)
    hs = homs_from_images(q, [[2, 2, 2], [0, 1, 2]])
    assert [h.images for h in hs] == [(0, 1, 2), (2, 2, 2)]
    with pytest.raises(ValueError):
        homs_from_images(q, [[0, 1, 1]])
    with pytest.raises(ValueError):
        homs_from_images(q, [[0, 1, 2], [0, 1, 2]])


def test_is_endomorphism_rejects_bad_shapes():
    q = make_dihedral(3)
    assert not is_endomorphism(q, (0, 1))
    assert not is_endomorphism(q, (0, 1, 3))


def test_hom_set_container_protocols():
    endos = dihedral_endos(3)
    assert len(endos) == 9
    assert endos[0] == Hom((0, 0, 0))
    assert sum(1 for _ in endos) == 9
    assert isinstance(endos, HomSet)
