import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catcat import reps
from catcat.functors import (Decomposability, FunctorWord, all_words, apply_F, apply_G,
                             apply_word, apply_word_direct, apply_word_intervals, exactness_defect,
                             functor_tuple, g_interval, grothendieck_matrix, indecomposable_or_zero,
                             multiset_str, partial_approximation, phi_orientation, right_derived_G,
                             semigroup_check, words_agree_with_monoid)
from catcat.groth import BasisTag, Orientation, matrix_generator
from catcat.quiver_rep import (Interval, all_intervals, decompose_intervals, injective, interval,
                               projective, random_rep, simple)

I = Interval


def test_g_on_simples_table():
    n = 5
    assert decompose_intervals(apply_G(3, simple(n, 3))) == ()
    assert decompose_intervals(apply_G(2, simple(n, 3))) == (I(2, 3),)
    assert decompose_intervals(apply_G(1, simple(n, 3))) == (I(3, 3),)


def test_g_on_projectives_table():
    n = 5
    assert decompose_intervals(apply_G(1, projective(n, 2))) == (I(1, 4),)
    assert decompose_intervals(apply_G(4, projective(n, 2))) == (I(2, 3),)
    assert decompose_intervals(apply_G(4, projective(n, 4))) == ()
    assert decompose_intervals(apply_G(2, projective(n, 1))) == (I(1, 4),)


def test_f_on_small_modules():
    assert decompose_intervals(apply_F(2, interval(4, 1, 2))) == (I(1, 1),)
    assert decompose_intervals(apply_F(1, interval(4, 1, 2))) == (I(1, 2),)


@pytest.mark.parametrize("n", range(2, 7))
def test_three_constructions_agree(n):
    for i in range(1, n):
        for iv in all_intervals(n):
            M = interval(n, *iv)
            c = g_interval(i, iv)
            want = (c,) if c else ()
            assert decompose_intervals(apply_G(i, M)) == want
            assert decompose_intervals(partial_approximation(i, M)) == want


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 5), st.integers(0, 10 ** 6))
def test_constructions_agree_on_random_modules(n, seed):
    rng = random.Random(seed)
    M = random_rep(n, rng)
    i = rng.randint(1, n - 1)
    assert decompose_intervals(apply_G(i, M)) == decompose_intervals(partial_approximation(i, M))


@pytest.mark.parametrize("n", range(2, 6))
def test_derived_vanishing(n):
    rng = random.Random(n)
    mods = [interval(n, *iv) for iv in all_intervals(n)] + [random_rep(n, rng) for _ in range(60)]
    for M in mods:
        for i in range(1, n):
            assert right_derived_G(i, 1, M).is_zero()
            assert right_derived_G(i, 2, M).is_zero()


@pytest.mark.parametrize("seed", range(25))
def test_exactness_on_short_sequences(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    M, N = random_rep(n, rng), random_rep(n, rng)
    basis = reps.hom_basis(M, N)
    if not basis:
        return
    phi = basis[rng.randrange(len(basis))]
    _, inc = reps.kernel(phi)
    _, proj = reps.cokernel(inc)
    for i in range(1, n):
        assert exactness_defect(i, inc, proj) == (0,) * (n - 1)


def test_g_equals_f_on_injectives():
    n = 5
    for i in range(1, n):
        for j in range(1, n):
            assert decompose_intervals(apply_G(i, injective(n, j))) == \
                decompose_intervals(apply_F(i, injective(n, j)))


@pytest.mark.parametrize("seed", range(10))
def test_word_shortcut_matches_direct(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    M = random_rep(n, rng)
    w = FunctorWord(n, [rng.randint(1, n - 1) for _ in range(rng.randint(0, 4))])
    assert decompose_intervals(apply_word(w, M)) == decompose_intervals(apply_word_direct(w, M))


@pytest.mark.parametrize("n", range(2, 6))
def test_words_respect_monoid_relations(n):
    assert words_agree_with_monoid(n, 4) == []


def test_word_order_is_right_to_left():
    w = FunctorWord(4, (1, 2))
    # G_2 first: L_3 -> [2,3], then G_1: [2,3] -> [1,3]
    assert apply_word_intervals(w, [I(3, 3)]) == (I(1, 3),)
    assert apply_word_intervals(FunctorWord(4, (2, 1)), [I(3, 3)]) == (I(2, 3),)


def test_functor_tuple_examples():
    assert functor_tuple(FunctorWord(3, ())) == (1, 2)
    assert functor_tuple(FunctorWord(3, (1,))) == (0, 2)
    assert functor_tuple(FunctorWord(3, (2,))) == (1, 1)
    assert functor_tuple(FunctorWord(3, (2, 1))) == (0, 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_decategorification(n):
    for basis in BasisTag:
        for i in range(1, n):
            assert grothendieck_matrix(FunctorWord(n, (i,)), basis) == matrix_generator(n, i, basis)


@pytest.mark.parametrize("n", range(2, 6))
def test_orientation_and_table(n):
    assert phi_orientation(n) is Orientation.COVARIANT
    assert semigroup_check(n).passed


def test_orientation_bound():
    with pytest.raises(ValueError):
        phi_orientation(40)
    with pytest.raises(ValueError):
        phi_orientation(1)


def test_contravariant_table_fails():
    assert not semigroup_check(3, Orientation.CONTRAVARIANT).passed


@pytest.mark.parametrize("n", range(2, 5))
def test_indecomposable_or_zero(n):
    for w in all_words(n, 4):
        assert indecomposable_or_zero(w) in set(Decomposability)


def test_zero_examples():
    assert indecomposable_or_zero(FunctorWord(3, (2, 1))) is Decomposability.INDECOMPOSABLE
    assert indecomposable_or_zero(FunctorWord(2, (1,))) is Decomposability.ZERO
    assert indecomposable_or_zero(FunctorWord(3, ())) is Decomposability.INDECOMPOSABLE


def test_word_validation_and_str():
    with pytest.raises(ValueError):
        FunctorWord(3, (3,))
    with pytest.raises(ValueError):
        FunctorWord(3, ()) + FunctorWord(4, ())
    assert str(FunctorWord(4, (1, 3))) == "G1G3"
    assert str(FunctorWord(4)) == "Id"
    assert multiset_str([I(1, 2), I(1, 2)]).startswith("2*")
    assert multiset_str([]) == "0"
