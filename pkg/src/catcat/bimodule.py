"""Subbimodules of the injective cogenerator bimodule ``I`` and their quotients.

As a left module ``I = I_1 + ... + I_{n-1}``; the right action is carried by
the surjections ``I_{i+1} -> I_i``.  Every space involved is at most one
dimensional per vertex, so ``I`` is a representation of a grid quiver with
vertices ``(i, u)``, ``1 <= u <= i <= n-1``:

* left arrows ``(i, u) -> (i, u+1)`` inside the component ``I_i``;
* right arrows ``(i+1, u) -> (i, u)`` from the surjection onto ``I_i``.

A subbimodule ``X`` is recorded by the tuple ``t`` with ``I_i / (X n I_i) = I_{t_i}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from . import reps
from .config import BOUNDS
from .errors import InvariantError
from .exact import Matrix
from .monoid import CatalanMap, eval_word, leq
from .quiver_rep import Interval, decompose_intervals, quiver_rep
from .reps import Quiver, Rep


@dataclass(frozen=True, order=True)
class TTuple:
    n: int
    t: tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(x) for x in self.t)
        object.__setattr__(self, "t", t)
        if len(t) != self.n - 1:
            raise ValueError(f"need {self.n - 1} entries for n={self.n}")
        for i, x in enumerate(t, start=1):
            if not 0 <= x <= i:
                raise ValueError(f"t_{i} = {x} outside 0..{i}")
        if any(a > b for a, b in zip(t, t[1:])):
            raise ValueError(f"{list(t)} is not weakly increasing")

    def is_zero_quotient(self) -> bool:
        return not any(self.t)

    def to_json(self) -> list[int]:
        return list(self.t)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.t)) + ")"


def _tuples(n: int, i: int, lo: int) -> Iterator[tuple[int, ...]]:
    if i == n:
        yield ()
        return
    for x in range(lo, i + 1):
        for rest in _tuples(n, i + 1, x):
            yield (x,) + rest


def all_ttuples(n: int) -> list[TTuple]:
    if n < 1:
        raise ValueError("n must be positive")
    if n > BOUNDS.max_ttuple_n:
        raise ValueError(f"n = {n} exceeds the tuple bound {BOUNDS.max_ttuple_n}")
    return [TTuple(n, t) for t in _tuples(n, 1, 0)]


def theta(t: TTuple) -> CatalanMap:
    return CatalanMap((1,) + tuple(1 + x for x in t.t))


def theta_inv(f: CatalanMap) -> TTuple:
    if f(1) != 1:
        raise ValueError(f"{f} does not fix 1")
    return TTuple(f.n, tuple(f(i) - 1 for i in range(2, f.n + 1)))


def subbimodule_leq(t: TTuple, s: TTuple) -> bool:
    """``X_t`` is contained in ``X_s``."""
    if t.n != s.n:
        raise ValueError("comparing tuples for different n")
    return all(a >= b for a, b in zip(t.t, s.t))


# -- the grid model ----------------------------------------------------------

@lru_cache(maxsize=None)
def grid_quiver(n: int) -> Quiver:
    vertices = tuple((i, u) for i in range(1, n) for u in range(1, i + 1))
    arrows = [((i, u), (i, u + 1)) for i in range(1, n) for u in range(1, i)]
    arrows += [((i + 1, u), (i, u)) for i in range(1, n - 1) for u in range(1, i + 1)]
    return Quiver(vertices, tuple(arrows))


def _grid_rep(n: int, support) -> Rep:
    """The grid representation with ``k`` at the given vertices and identities between them."""
    q = grid_quiver(n)
    dims = [int(v in support) for v in q.vertices]
    idx = q.index
    maps = [Matrix.identity(1) if dims[idx[s]] and dims[idx[t]]
            else Matrix.zeros(dims[idx[t]], dims[idx[s]]) for s, t in q.arrows]
    return Rep(q, dims, maps)


@lru_cache(maxsize=None)
def bimodule_I(n: int) -> Rep:
    return _grid_rep(n, set(grid_quiver(n).vertices))


def _sub_support(t: TTuple) -> set:
    # X n I_i is the socle part [t_i + 1, i]
    return {(i, u) for i, u in grid_quiver(t.n).vertices if u > t.t[i - 1]}


def subbimodule_bases(t: TTuple) -> list[Matrix]:
    sup = _sub_support(t)
    return [Matrix.identity(1) if v in sup else Matrix.zeros(1, 0) for v in grid_quiver(t.n).vertices]


def subbimodule_rep(t: TTuple) -> tuple[Rep, reps.Morphism]:
    """``X_t`` as a genuine subrepresentation of ``I`` (raises if not closed)."""
    return reps.subrep(bimodule_I(t.n), subbimodule_bases(t))


@lru_cache(maxsize=None)
def quotient_rep(t: TTuple) -> Rep:
    return reps.quotient(bimodule_I(t.n), subbimodule_bases(t))[0]


def quotient_component(Q: Rep, n: int, i: int) -> Rep:
    """The left module carried by the ``i``-th component, on the linear quiver."""
    idx = Q.quiver.index
    dims = [Q.dims[idx[(i, u)]] if u <= i else 0 for u in range(1, n)]
    arrows = []
    for u in range(1, n - 1):
        if u < i:
            e = Q.quiver.arrows.index(((i, u), (i, u + 1)))
            arrows.append(Q.maps[e])
        else:
            arrows.append(Matrix.zeros(dims[u], dims[u - 1]))
    return quiver_rep(n, dims, arrows)


@dataclass(frozen=True)
class BimoduleQuotient:
    """``I / X_t`` described by its components ``I_{q_i}``."""

    n: int
    q: tuple[int, ...]

    @classmethod
    def of(cls, t: TTuple) -> "BimoduleQuotient":
        return cls(t.n, t.t)

    def component(self, i: int) -> Interval | None:
        return Interval(1, self.q[i - 1]) if self.q[i - 1] else None

    def chain_map_rank(self, i: int) -> int:
        """Rank of the map from component ``i+1`` onto component ``i``."""
        return 1 if self.q[i - 1] else 0


def materialized_inclusion(t: TTuple, s: TTuple) -> bool:
    """Subspace containment ``X_t <= X_s`` checked vertex by vertex."""
    for bt, bs in zip(subbimodule_bases(t), subbimodule_bases(s)):
        if bt.cols and Matrix.hstack([bs, bt]).rank() != bs.rank():
            return False
    return True


def closed_supports(n: int) -> list[frozenset]:
    """Brute force: every vertex set of the grid closed under arrows."""
    q = grid_quiver(n)
    verts = q.vertices
    out = []
    for k in range(len(verts) + 1):
        for sub in combinations(verts, k):
            s = set(sub)
            if all(t in s for a, t in q.arrows if a in s):
                out.append(frozenset(s))
    return out


def orientation_report(n: int) -> dict:
    """How inclusion of subbimodules compares with the pointwise order of names."""
    ts = all_ttuples(n)
    preserving = reversing = True
    for t in ts:
        for s in ts:
            inc = materialized_inclusion(t, s)
            if inc != subbimodule_leq(t, s):
                raise InvariantError(f"componentwise rule disagrees with inclusion for {t}, {s}")
            preserving &= inc == leq(theta(t), theta(s))
            reversing &= inc == leq(theta(s), theta(t))
    if preserving == reversing:
        raise InvariantError(f"order orientation undetermined for n={n}")
    return {"order_orientation": "preserving" if preserving else "reversing", "evidence_n": n}


# -- homs and names ----------------------------------------------------------

def hom_dim_onemorphisms(t: TTuple, s: TTuple) -> int:
    if t.n != s.n:
        raise ValueError("tuples for different n")
    d = reps.hom_dim(quotient_rep(t), quotient_rep(s))
    if d > 1:
        raise InvariantError(f"Hom(I/X{t}, I/X{s}) has dimension {d}")
    return d


def hom_indicator(t: TTuple, s: TTuple) -> int:
    """The expected hom dimension: a projection exists onto a nonzero target."""
    return int(subbimodule_leq(t, s) and not s.is_zero_quotient())


@lru_cache(maxsize=None)
def endomorphism_dim(t: TTuple) -> int:
    return reps.hom_dim(quotient_rep(t), quotient_rep(t))


def evaluated_name(w) -> CatalanMap:
    """The name read directly off the functor's values on injectives."""
    from .functors import functor_tuple
    return theta(TTuple(w.n, functor_tuple(w)))


def functor_name(w) -> TTuple:
    """``theta_inv(eval_word(w))``, checked against the functor's values.

    Each component of ``I / X`` must be the image of the corresponding
    injective under ``G_w``; a mismatch raises ``InvariantError``.
    """
    from .functors import apply_word_intervals

    n = w.n
    t = theta_inv(eval_word(w.letters, n))
    Q = quotient_rep(t)
    for j in range(1, n):
        got = apply_word_intervals(w, [Interval(1, j)])
        want = decompose_intervals(quotient_component(Q, n, j))
        if got != want:
            raise InvariantError(f"{w} on I_{j} gives {got}, quotient component is {want}")
    return t
