"""Acceptance criteria, one test per criterion.

Each test carries a ``criterion`` marker; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import random

import pytest

from catcat.bimodule import (all_ttuples, functor_name, hom_dim_onemorphisms, hom_indicator,
                             orientation_report, theta, theta_inv)
from catcat.functors import (Decomposability, FunctorWord, all_words, apply_G, apply_word_intervals,
                             g_interval, grothendieck_matrix, indecomposable_or_zero,
                             partial_approximation, phi_orientation, right_derived_G,
                             semigroup_check)
from catcat.groth import (BasisTag, faithfulness_check, matrix_generator, matrix_weighted,
                          relation_failures)
from catcat.koszul import (check_bang_relations, counterexample_eq57, dual_simple,
                           right_derived_G_bang, self_duality_n3)
from catcat.monoid import (CellClass, all_idempotent_specs, cell_action, check_relations,
                           enumerate_monoid, eval_word)
from catcat.quiver_rep import (Interval, all_intervals, decompose_intervals, interval, projective,
                               random_rep, simple)
from catcat.rewriting import presentation_completeness

criterion = pytest.mark.criterion


@criterion(1, "cardinality of C_n for n = 1..8")
def test_cardinality():
    assert [len(enumerate_monoid(n)) for n in range(1, 9)] == [1, 2, 5, 14, 42, 132, 429, 1430]


@criterion(2, "defining relations in C_n, three bases and weighted matrices")
def test_relations():
    rng = random.Random(2)
    for n in range(2, 7):
        assert all(r.passed for r in check_relations(n))
        for basis in BasisTag:
            assert not relation_failures(n, lambda i: matrix_generator(n, i, basis))
        for _ in range(5):
            z = tuple(rng.randint(1, 50) for _ in range(n - 2))
            assert not relation_failures(n, lambda i: matrix_weighted(n, i, z))


@criterion(3, "completed presentation has |C_n| normal forms, n <= 4")
def test_presentation():
    for n in range(1, 5):
        rep = presentation_completeness(n)
        assert rep.passed and rep.normal_forms == len(enumerate_monoid(n))


@criterion(4, "functor words decategorify to the generator matrices, n <= 6")
def test_decategorification():
    for n in range(2, 7):
        for basis in BasisTag:
            for i in range(1, n):
                assert grothendieck_matrix(FunctorWord(n, (i,)), basis) == matrix_generator(n, i, basis)


@criterion(5, "matrix representation is faithful in all bases, n <= 5")
def test_faithfulness():
    for n in range(1, 6):
        for basis in BasisTag:
            assert faithfulness_check(n, basis)


@criterion(6, "G_i on simples and projectives, n <= 6")
def test_functor_lemmas():
    for n in range(2, 7):
        for i in range(1, n):
            for j in range(1, n):
                got = decompose_intervals(apply_G(i, simple(n, j)))
                if i == j:
                    want = ()
                elif i == j - 1:
                    want = (Interval(j - 1, j),)
                else:
                    want = (Interval(j, j),)
                assert got == want, (n, i, j)
                got = decompose_intervals(apply_G(i, projective(n, j)))
                if i == j - 1:
                    want = (Interval(j - 1, n - 1),)
                elif i == n - 1:
                    want = (Interval(j, n - 2),) if j <= n - 2 else ()
                else:
                    want = (Interval(j, n - 1),)
                assert got == want, (n, i, j)


@criterion(7, "higher derived G vanish on intervals and 200 random modules, n <= 5")
def test_exactness():
    for n in range(2, 6):
        rng = random.Random(700 + n)
        mods = [interval(n, *iv) for iv in all_intervals(n)] + [random_rep(n, rng) for _ in range(200)]
        for M in mods:
            for i in range(1, n):
                for k in (1, 2):
                    assert right_derived_G(i, k, M).is_zero()


@criterion(8, "three constructions of G_i agree on intervals, n <= 6")
def test_oracles():
    for n in range(2, 7):
        for i in range(1, n):
            for iv in all_intervals(n):
                M = interval(n, *iv)
                c = g_interval(i, iv)
                want = (c,) if c else ()
                assert decompose_intervals(apply_G(i, M)) == want
                assert decompose_intervals(partial_approximation(i, M)) == want


@criterion(9, "composites are indecomposable or zero, words of length <= 6, n <= 5")
def test_indecomposability():
    labels = set(Decomposability)
    for n in range(2, 6):
        for w in all_words(n, 6):
            assert indecomposable_or_zero(w) in labels


@criterion(10, "theta is a bijection with a fixed order orientation; tuple counts")
def test_theta():
    for n in range(1, 9):
        assert len(all_ttuples(n)) == len(enumerate_monoid(n))
    for n in range(1, 6):
        ts = all_ttuples(n)
        assert sorted(theta(t) for t in ts) == sorted(enumerate_monoid(n))
        assert all(theta_inv(theta(t)) == t for t in ts)
    assert {orientation_report(n)["order_orientation"] for n in range(2, 6)} == {"reversing"}


@criterion(11, "homs between quotients are 0 or 1 dimensional and match the indicator, n <= 4")
def test_hom_spaces():
    for n in range(2, 5):
        ts = all_ttuples(n)
        for t in ts:
            for s in ts:
                d = hom_dim_onemorphisms(t, s)
                assert d in (0, 1) and d == hom_indicator(t, s)


@criterion(12, "functor names agree with bimodule quotients on injectives, length <= 5, n <= 4")
def test_functor_names():
    for n in range(2, 5):
        for w in all_words(n, 5):
            t = functor_name(w)
            for j in range(1, n):
                got = apply_word_intervals(w, [Interval(1, j)])
                assert got == ((Interval(1, t.t[j - 1]),) if t.t[j - 1] else ())


@criterion(13, "composition of names matches the C_n table, n <= 4")
def test_semigroup():
    for n in range(2, 5):
        assert semigroup_check(n, phi_orientation(n)).passed
        for w in all_words(n, 3):
            assert theta(functor_name(w)) == eval_word(w.letters, n)


@criterion(14, "derived dual functors G4, G1 do not commute; R^1 G4 L2 = L4")
def test_koszul_counterexample():
    for n in (5, 6):
        rep = counterexample_eq57(n)
        assert rep["non_isomorphic"]
        assert bool(rep["degree1_G4_after_G1"]) != bool(rep["degree1_G1_after_G4"])
    assert decompose_intervals(right_derived_G_bang(4, 1, dual_simple(5, 2))) == (Interval(4, 4),)


@criterion(15, "derived dual relation families on I! and simples, n <= 6")
def test_koszul_relations():
    failures = []
    for n in range(2, 7):
        for row in check_bang_relations(n):
            if not row["pass"]:
                failures.append((n, row["relation"], row["lhs"], row["rhs"], row["probe"]))
    assert not failures, failures


@criterion(16, "cell action fixes eps_X exactly for i in X, n <= 6")
def test_cell_action():
    for n in range(1, 7):
        for spec in all_idempotent_specs(n):
            for i in range(1, n):
                assert (cell_action(i, spec) is CellClass.IDENTITY) == (i in spec.X)


@criterion(17, "n = 3 dual computations match G under vertex relabelling")
def test_self_duality():
    assert self_duality_n3(5) == []
