"""Representations of the linear quiver ``1 -> 2 -> ... -> n-1``.

Isomorphism classes are handled through interval multisets: every
representation of a linearly oriented path is a direct sum of interval
modules, and the multiplicities are read off from ranks of composite maps.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from . import reps
from .exact import Matrix, matrix_from_strings, matrix_to_strings
from .errors import InvariantError
from .reps import ChainQuiver, Morphism, Rep


class Interval(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


IntervalMultiset = tuple[Interval, ...]


@lru_cache(maxsize=None)
def linear_quiver(n: int) -> ChainQuiver:
    return ChainQuiver(n, forward=True)


def quiver_rep(n: int, dims: Sequence[int], arrows: Sequence) -> Rep:
    """Build a representation from ``arrows[k]: V_{k+1} -> V_{k+2}`` (row-major data)."""
    q = linear_quiver(n)
    mats = []
    for k, a in enumerate(arrows):
        if isinstance(a, Matrix):
            mats.append(a)
        else:
            mats.append(Matrix(a, dims[k + 1], dims[k]))
    return Rep(q, dims, mats)


def interval(n: int, a: int, b: int) -> Rep:
    return reps.interval_rep(linear_quiver(n), a, b)


def simple(n: int, i: int) -> Rep:
    return interval(n, i, i)


def projective(n: int, i: int) -> Rep:
    return interval(n, i, n - 1)


def injective(n: int, i: int) -> Rep:
    return interval(n, 1, i)


def interval_sum(n: int, intervals: Iterable[Interval]) -> Rep:
    q = linear_quiver(n)
    return reps.direct_sum(q, [reps.interval_rep(q, a, b) for a, b in intervals])


def all_intervals(n: int) -> list[Interval]:
    return [Interval(a, b) for a in range(1, n) for b in range(a, n)]


def normalize(intervals: Iterable) -> IntervalMultiset:
    return tuple(sorted(Interval(*iv) for iv in intervals))


def rank_function(M: Rep) -> dict[tuple[int, int], int]:
    """``r(a, b)`` = rank of the composite map between vertices ``a <= b``."""
    n = M.quiver.n
    return {(a, b): reps.path_rank(M, a, b) for a in range(1, n) for b in range(a, n)}


def decompose_intervals(M: Rep) -> IntervalMultiset:
    """Interval multiplicities by inclusion-exclusion on composite ranks.

    Works for any chain quiver orientation: ``r(a, b)`` counts the intervals
    containing ``[a, b]`` whichever way the arrows point.
    """
    n = M.quiver.n
    r = rank_function(M)

    def rk(a, b):
        if a < 1 or b > n - 1:
            return 0
        return r[(a, b)]

    out = []
    for a in range(1, n):
        for b in range(a, n):
            m = rk(a, b) - rk(a - 1, b) - rk(a, b + 1) + rk(a - 1, b + 1)
            if m < 0:
                raise InvariantError(f"negative multiplicity for [{a},{b}]")
            out.extend([Interval(a, b)] * m)
    return tuple(out)


def is_isomorphic(M: Rep, N: Rep) -> bool:
    return decompose_intervals(M) == decompose_intervals(N)


def dim_vector(intervals: Iterable[Interval], n: int) -> tuple[int, ...]:
    dv = [0] * (n - 1)
    for a, b in intervals:
        for v in range(a, b + 1):
            dv[v - 1] += 1
    return tuple(dv)


def trace_of_simple(i: int, M: Rep) -> tuple[Rep, Morphism]:
    """``Tr_{L_i}(M)``: the kernel of the arrow at ``i``, placed at ``i``."""
    if not 1 <= i <= M.quiver.n - 1:
        raise ValueError(f"vertex {i} out of range")
    return reps.trace_of_simple(M, i)


def kernel(phi: Morphism) -> Rep:
    return reps.kernel(phi)[0]


def cokernel(phi: Morphism) -> Rep:
    return reps.cokernel(phi)[0]


def hom_dim(M: Rep, N: Rep) -> int:
    return reps.hom_dim(M, N)


def interval_hom_dim(src: Interval, tgt: Interval) -> int:
    """Closed form for ``dim Hom(M[a,b], M[c,d])`` on the linear quiver."""
    (a, b), (c, d) = src, tgt
    return int(c <= a <= d <= b)


def natural_projection(n: int, j: int) -> Morphism:
    """The surjection ``I_j -> I_{j-1}`` (zero onto ``I_0 = 0``)."""
    src = injective(n, j)
    tgt = injective(n, j - 1) if j > 1 else reps.zero_rep(linear_quiver(n))
    comps = [Matrix.identity(1) if v < j else Matrix.zeros(tgt.dims[v - 1], src.dims[v - 1])
             for v in range(1, n)]
    return Morphism(src, tgt, comps)


@dataclass(frozen=True)
class InjCopresentation:
    """``0 -> M -> Q0 -> Q1 -> 0`` with ``Q0``, ``Q1`` sums of injectives ``I_j``."""

    M: Rep
    q0: tuple[int, ...]
    q1: tuple[int, ...]
    embed: Morphism
    map: Morphism

    def check(self) -> None:
        if not self.embed.is_injective():
            raise InvariantError("embedding is not injective")
        if not self.map.is_surjective():
            raise InvariantError("copresentation map is not surjective")
        if not (self.map @ self.embed).is_zero():
            raise InvariantError("composite is nonzero")
        for k, (e, m) in enumerate(zip(self.embed.comps, self.map.comps)):
            if e.rank() != m.cols - m.rank():
                raise InvariantError(f"image != kernel at vertex {k + 1}")


def injective_copresentation(M: Rep) -> InjCopresentation:
    """Two-step injective coresolution built from socle-driven envelopes."""
    if M.quiver != linear_quiver(M.quiver.n):
        raise ValueError("expected a linear-quiver representation")
    q0, embed = reps.injective_envelope(M)
    C, proj = reps.cokernel(embed)
    q1, embed1 = reps.injective_envelope(C)
    if not embed1.is_surjective():
        raise InvariantError("cokernel of an injective envelope is not injective")
    return InjCopresentation(M, q0, q1, embed, embed1 @ proj)


# -- random generation -------------------------------------------------------

def random_rep(n: int, rng: random.Random, max_dim: int = 3, density: float = 0.6) -> Rep:
    """A random representation with small integer entries (many zero ranks)."""
    dims = [rng.randint(0, max_dim) for _ in range(n - 1)]
    arrows = []
    for k in range(n - 2):
        rows, cols = dims[k + 1], dims[k]
        if rng.random() < 0.5 and rows and cols:
            # low-rank product makes non-generic ranks common
            r = rng.randint(0, min(rows, cols))
            A = Matrix([[rng.randint(-2, 2) for _ in range(r)] for _ in range(rows)], rows, r)
            B = Matrix([[rng.randint(-2, 2) for _ in range(cols)] for _ in range(r)], r, cols)
            arrows.append(A @ B)
        else:
            arrows.append(Matrix([[rng.choice((-1, 1, 2)) if rng.random() < density else 0
                                   for _ in range(cols)] for _ in range(rows)], rows, cols))
    return quiver_rep(n, dims, arrows)


def random_invertible(d: int, rng: random.Random) -> Matrix:
    while True:
        m = Matrix([[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)], d, d)
        if m.rank() == d:
            return m


def conjugate(M: Rep, changes: Sequence[Matrix]) -> Rep:
    """Apply a change of basis ``g_v`` at each vertex: arrows become ``g_t A g_s^-1``."""
    idx = M.quiver.index
    maps = [changes[idx[t]] @ M.maps[e] @ changes[idx[s]].inverse()
            for e, (s, t) in enumerate(M.quiver.arrows)]
    return Rep(M.quiver, M.dims, maps)


def random_interval_sum(n: int, rng: random.Random, max_count: int = 5) -> tuple[IntervalMultiset, Rep]:
    ivs = normalize(rng.choice(all_intervals(n)) for _ in range(rng.randint(0, max_count)))
    M = interval_sum(n, ivs)
    return ivs, conjugate(M, [random_invertible(d, rng) for d in M.dims])


# -- serialization -----------------------------------------------------------

def rep_to_json(M: Rep) -> dict:
    return {"n": M.quiver.n, "dims": list(M.dims),
            "arrows": [matrix_to_strings(a) for a in M.maps]}


def rep_from_json(obj) -> Rep:
    if isinstance(obj, str):
        obj = json.loads(obj)
    n, dims = int(obj["n"]), [int(d) for d in obj["dims"]]
    if len(dims) != n - 1:
        raise ValueError("dims must have n-1 entries")
    arrows = obj.get("arrows", [])
    if len(arrows) != max(n - 2, 0):
        raise ValueError("arrows must have n-2 entries")
    mats = [matrix_from_strings(a, dims[k + 1], dims[k]) for k, a in enumerate(arrows)]
    return quiver_rep(n, dims, mats)


def intervals_to_json(ivs: Iterable[Interval]) -> list[list[int]]:
    return [[a, b] for a, b in ivs]
