import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catcat import reps
from catcat.exact import Matrix
from catcat.quiver_rep import (Interval, all_intervals, conjugate, decompose_intervals, hom_dim,
                               injective, injective_copresentation, interval, interval_hom_dim,
                               interval_sum, normalize, projective, quiver_rep, random_interval_sum,
                               random_invertible, random_rep, rep_from_json, rep_to_json, simple,
                               trace_of_simple)


def test_interval_names():
    assert decompose_intervals(simple(5, 2)) == (Interval(2, 2),)
    assert decompose_intervals(projective(5, 2)) == (Interval(2, 4),)
    assert decompose_intervals(injective(5, 3)) == (Interval(1, 3),)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.integers(0, 10 ** 6))
def test_decomposition_of_disguised_sums(n, seed):
    ivs, M = random_interval_sum(n, random.Random(seed))
    assert decompose_intervals(M) == ivs


@pytest.mark.parametrize("n", range(2, 6))
def test_hom_dims_match_closed_form(n):
    for s in all_intervals(n):
        for t in all_intervals(n):
            assert hom_dim(interval(n, *s), interval(n, *t)) == interval_hom_dim(s, t)


def test_hom_dim_is_isomorphism_invariant():
    rng = random.Random(3)
    M = interval_sum(4, [(1, 2), (2, 3)])
    N = conjugate(M, [random_invertible(d, rng) for d in M.dims])
    assert hom_dim(M, injective(4, 3)) == hom_dim(N, injective(4, 3))


@pytest.mark.parametrize("seed", range(40))
def test_copresentation(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    M = random_rep(n, rng)
    cop = injective_copresentation(M)
    cop.check()
    # every term is a sum of injectives
    for Q in (cop.embed.target, cop.map.target):
        assert all(a == 1 for a, _ in decompose_intervals(Q))


def test_copresentation_examples():
    cop = injective_copresentation(projective(4, 2))
    assert cop.q0 == (3,) and cop.q1 == (1,)
    cop = injective_copresentation(simple(4, 3))
    assert cop.q0 == (3,) and cop.q1 == (2,)


def test_trace_of_simple_is_socle_part():
    M = interval_sum(4, [(1, 2), (2, 2), (2, 3)])
    T, inc = trace_of_simple(2, M)
    assert T.dims == (0, 2, 0)
    assert inc.is_injective()


def test_kernel_and_cokernel_dimensions():
    rng = random.Random(5)
    for _ in range(20):
        M = random_rep(4, rng)
        N = random_rep(4, rng)
        basis = reps.hom_basis(M, N)
        if not basis:
            continue
        phi = basis[0]
        K, _ = reps.kernel(phi)
        C, _ = reps.cokernel(phi)
        for k in range(3):
            r = phi.comps[k].rank()
            assert K.dims[k] == M.dims[k] - r
            assert C.dims[k] == N.dims[k] - r


def test_json_roundtrip():
    rng = random.Random(9)
    M = random_rep(5, rng)
    assert rep_from_json(rep_to_json(M)) == M
    with pytest.raises(ValueError):
        rep_from_json({"n": 3, "dims": [1], "arrows": []})


def test_invalid_shapes():
    with pytest.raises(ValueError):
        quiver_rep(3, [1, 1], [Matrix.zeros(2, 1)])
    with pytest.raises(ValueError):
        interval(3, 2, 3)


def test_normalize_sorts():
    assert normalize([(2, 3), (1, 1)]) == (Interval(1, 1), Interval(2, 3))
