"""The Catalan monoid of order-decreasing, order-preserving maps on ``1..n``.

Elements are stored as their value sequences.  Composition is right to
left: ``compose(f, g)(j) == f(g(j))``, and a word ``[i1, ..., ik]`` evaluates
to ``alpha_i1 o ... o alpha_ik``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .config import BOUNDS
from .errors import InvariantError


@dataclass(frozen=True, order=True)
class CatalanMap:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("a Catalan map needs n >= 1")
        for i, v in enumerate(vals, start=1):
            if not 1 <= v <= i:
                raise ValueError(f"f({i}) = {v} violates 1 <= f(i) <= i")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"{list(vals)} is not order-preserving")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __matmul__(self, other: "CatalanMap") -> "CatalanMap":
        return compose(self, other)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.values)) + "]"

    def to_json(self) -> list[int]:
        return list(self.values)

    @classmethod
    def from_json(cls, data) -> "CatalanMap":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data))


@dataclass(frozen=True)
class LatticePath:
    """Below-diagonal path, recorded by the maximal height ``ymax[i-1]`` at ``x = i``."""

    n: int
    ymax: tuple[int, ...]

    def __post_init__(self):
        ym = tuple(int(y) for y in self.ymax)
        object.__setattr__(self, "ymax", ym)
        if len(ym) != self.n - 1:
            raise ValueError("a lattice path for n needs n-1 heights")
        for i, y in enumerate(ym, start=1):
            if not 0 <= y <= i:
                raise ValueError(f"height {y} at x={i} is above the diagonal or negative")
        if any(a > b for a, b in zip(ym, ym[1:])):
            raise ValueError("heights must be weakly increasing")

    def to_json(self) -> list[int]:
        return list(self.ymax)


@dataclass(frozen=True)
class Word:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        bad = [x for x in letters if not 1 <= x <= self.n - 1]
        if bad:
            raise ValueError(f"letters {bad} outside 1..{self.n - 1}")

    def __add__(self, other: "Word") -> "Word":
        if self.n != other.n:
            raise ValueError("concatenating words for different n")
        return Word(self.n, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class IdempotentSpec:
    n: int
    X: frozenset[int] = frozenset()

    def __post_init__(self):
        X = frozenset(int(x) for x in self.X)
        object.__setattr__(self, "X", X)
        if any(not 1 <= x <= self.n - 1 for x in X):
            raise ValueError(f"X must be a subset of 1..{self.n - 1}")


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def identity(n: int) -> CatalanMap:
    return CatalanMap(tuple(range(1, n + 1)))


def constant_one(n: int) -> CatalanMap:
    return CatalanMap((1,) * n)


def generator(n: int, i: int) -> CatalanMap:
    """``alpha_i``: sends ``i+1`` to ``i`` and fixes everything else."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} outside 1..{n - 1}")
    vals = list(range(1, n + 1))
    vals[i] = i
    return CatalanMap(tuple(vals))


def compose(f: CatalanMap, g: CatalanMap) -> CatalanMap:
    if f.n != g.n:
        raise ValueError(f"cannot compose maps on {f.n} and {g.n} points")
    fv = f.values
    return CatalanMap(tuple(fv[x - 1] for x in g.values))


def _as_word(w, n: int | None = None) -> Word:
    if isinstance(w, Word):
        return w
    if n is None:
        raise ValueError("n is required for a bare letter sequence")
    return Word(n, tuple(w))


def eval_word(w: Word | Sequence[int], n: int | None = None) -> CatalanMap:
    w = _as_word(w, n)
    f = identity(w.n)
    for i in w.letters:
        f = compose(f, generator(w.n, i))
    return f


@lru_cache(maxsize=16)
def _closure(n: int) -> tuple[tuple[CatalanMap, ...], dict]:
    gens = [generator(n, i) for i in range(1, n)]
    start = identity(n)
    words = {start: ()}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for i, g in enumerate(gens, start=1):
            h = compose(f, g)
            if h not in words:
                words[h] = words[f] + (i,)
                queue.append(h)
    return tuple(sorted(words)), words


def enumerate_monoid(n: int, max_n: int | None = None) -> tuple[CatalanMap, ...]:
    """All elements of ``C_n`` by breadth-first product closure, sorted by values."""
    bound = BOUNDS.max_enumerate_n if max_n is None else max_n
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise ValueError(f"n = {n} exceeds the enumeration bound {bound}")
    if n == 1:
        return (identity(1),)
    return _closure(n)[0]


def word_for(f: CatalanMap) -> Word:
    """A shortest word (first found breadth-first) evaluating to ``f``."""
    if f.n == 1:
        return Word(1, ())
    return Word(f.n, _closure(f.n)[1][f])


def to_lattice_path(f: CatalanMap) -> LatticePath:
    return LatticePath(f.n, tuple(f(i + 1) - 1 for i in range(1, f.n)))


def from_lattice_path(p: LatticePath) -> CatalanMap:
    return CatalanMap((1,) + tuple(y + 1 for y in p.ymax))


def leq(f: CatalanMap, g: CatalanMap) -> bool:
    if f.n != g.n:
        raise ValueError("comparing maps on different n")
    return all(a <= b for a, b in zip(f.values, g.values))


def idempotent(spec: IdempotentSpec) -> CatalanMap:
    """``eps_X``: the product of ``alpha_i`` over ``X`` in increasing order."""
    return eval_word(Word(spec.n, tuple(sorted(spec.X))))


def all_idempotent_specs(n: int) -> Iterator[IdempotentSpec]:
    gens = range(1, n)
    for k in range(n):
        for X in combinations(gens, k):
            yield IdempotentSpec(n, frozenset(X))


# -- relations ---------------------------------------------------------------

@dataclass(frozen=True)
class RelationInstance:
    kind: str  # "idempotent", "braid", "commute"
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]

    def __str__(self) -> str:
        def fmt(w):
            return "".join(f"a{i}" for i in w) or "1"
        return f"{self.kind}: {fmt(self.lhs)} = {fmt(self.rhs)}"


def relation_instances(n: int) -> list[RelationInstance]:
    """Every instance of the three defining relation schemas for ``n``."""
    out = []
    for i in range(1, n):
        out.append(RelationInstance("idempotent", (i, i), (i,)))
    for i in range(1, n - 1):
        out.append(RelationInstance("braid", (i, i + 1, i), (i, i + 1)))
        out.append(RelationInstance("braid", (i + 1, i, i + 1), (i, i + 1)))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append(RelationInstance("commute", (i, j), (j, i)))
    return out


@dataclass(frozen=True)
class RelationResult:
    relation: RelationInstance
    passed: bool
    lhs_value: CatalanMap
    rhs_value: CatalanMap


def check_relations(n: int) -> list[RelationResult]:
    if n < 2:
        raise ValueError("relations need n >= 2")
    out = []
    for rel in relation_instances(n):
        lv, rv = eval_word(rel.lhs, n), eval_word(rel.rhs, n)
        out.append(RelationResult(rel, lv == rv, lv, rv))
    return out


# -- cell action -------------------------------------------------------------

class CellClass(Enum):
    IDENTITY = "IdentityClass"
    LOWER = "LowerClass"


def cell_action(i: int, spec: IdempotentSpec) -> CellClass:
    """Does ``alpha_i`` fix ``eps_X`` under left multiplication, or push it strictly down?"""
    eps = idempotent(spec)
    prod = compose(generator(spec.n, i), eps)
    if prod == eps:
        return CellClass.IDENTITY
    if leq(prod, eps):
        return CellClass.LOWER
    raise InvariantError(f"alpha_{i} eps_X is neither eps_X nor below it")


def two_sided_ideal(f: CatalanMap) -> frozenset[CatalanMap]:
    elems = enumerate_monoid(f.n)
    left = {compose(a, f) for a in elems}
    return frozenset(compose(x, b) for x in left for b in elems)
