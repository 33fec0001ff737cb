import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catcat.monoid import (CatalanMap, CellClass, IdempotentSpec, LatticePath, Word, all_idempotent_specs,
                           catalan_number, cell_action, check_relations, compose, constant_one,
                           enumerate_monoid, eval_word, from_lattice_path, generator, identity,
                           idempotent, leq, to_lattice_path, two_sided_ideal, word_for)


def brute_force_elements(n):
    """Filter all maps {1..n} -> {1..n} by the defining properties."""
    out = []
    for vals in itertools.product(range(1, n + 1), repeat=n):
        if all(vals[i] <= i + 1 for i in range(n)) and all(a <= b for a, b in zip(vals, vals[1:])):
            out.append(CatalanMap(vals))
    return sorted(out)


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_brute_force(n):
    assert list(enumerate_monoid(n)) == brute_force_elements(n)


@pytest.mark.parametrize("n,size", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132), (7, 429), (8, 1430)])
def test_cardinality(n, size):
    assert len(enumerate_monoid(n)) == size == catalan_number(n)


def test_generators_in_c3():
    assert generator(3, 1).values == (1, 1, 3)
    assert generator(3, 2).values == (1, 2, 2)
    assert eval_word((1, 2), 3).values == (1, 1, 1)
    assert eval_word((2, 1), 3).values == (1, 1, 2)


def test_composition_is_right_to_left():
    f, g = generator(3, 1), generator(3, 2)
    h = compose(f, g)
    assert all(h(j) == f(g(j)) for j in range(1, 4))


def test_invalid_maps():
    with pytest.raises(ValueError):
        CatalanMap((2, 2))
    with pytest.raises(ValueError):
        CatalanMap((1, 2, 1))
    with pytest.raises(ValueError):
        Word(3, (3,))
    with pytest.raises(ValueError):
        enumerate_monoid(13)


@pytest.mark.parametrize("n", range(2, 8))
def test_relations(n):
    assert all(r.passed for r in check_relations(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_lattice_paths_roundtrip(n):
    elems = enumerate_monoid(n)
    paths = {to_lattice_path(f) for f in elems}
    assert len(paths) == len(elems)
    assert all(from_lattice_path(to_lattice_path(f)) == f for f in elems)


def test_lattice_path_validation():
    with pytest.raises(ValueError):
        LatticePath(3, (2, 1))
    with pytest.raises(ValueError):
        LatticePath(3, (0,))


def test_identity_and_constant():
    assert identity(4).values == (1, 2, 3, 4)
    c = constant_one(4)
    assert all(compose(c, f) == c == compose(f, c) for f in enumerate_monoid(4))


@pytest.mark.parametrize("n", range(2, 6))
def test_word_for_evaluates(n):
    assert all(eval_word(word_for(f)) == f for f in enumerate_monoid(n))


@pytest.mark.parametrize("n", range(2, 6))
def test_j_trivial(n):
    elems = enumerate_monoid(n)
    ideals = {two_sided_ideal(f) for f in elems}
    assert len(ideals) == len(elems)


@given(st.data())
def test_associativity(data):
    n = data.draw(st.integers(1, 6))
    elems = enumerate_monoid(n)
    f, g, h = (data.draw(st.sampled_from(elems)) for _ in range(3))
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@pytest.mark.parametrize("n", range(2, 7))
def test_cell_action(n):
    for spec in all_idempotent_specs(n):
        for i in range(1, n):
            assert (cell_action(i, spec) is CellClass.IDENTITY) == (i in spec.X)


def test_idempotents_are_idempotent():
    for spec in all_idempotent_specs(5):
        e = idempotent(spec)
        assert compose(e, e) == e


def test_cell_action_lower_means_below():
    spec = IdempotentSpec(4, frozenset({2}))
    assert cell_action(1, spec) is CellClass.LOWER
    assert leq(compose(generator(4, 1), idempotent(spec)), idempotent(spec))


def test_json_roundtrip():
    f = CatalanMap((1, 1, 2, 4))
    assert CatalanMap.from_json(f.to_json()) == f
    assert CatalanMap.from_json("[1, 1, 2, 4]") == f
