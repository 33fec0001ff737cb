"""Integer matrices for the generators acting on the Grothendieck group.

Matrices act on coordinate columns: column ``j`` holds the coordinates of
the image of the ``j``-th basis class.  Three bases are supported, each with
a fixed ordering of its basis modules:

* injective: ``I_1, ..., I_{n-1}``
* simple: ``L_{n-1}, ..., L_1`` (descending)
* projective: ``P_1, ..., P_{n-1}``
"""

from __future__ import annotations

import csv
import io
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

from .config import BOUNDS
from .errors import InvariantError
from .exact import Matrix
from .monoid import CatalanMap, enumerate_monoid, generator, identity, relation_instances, word_for
from .quiver_rep import Interval

IntMatrix = Matrix


class Orientation(Enum):
    COVARIANT = "Covariant"
    CONTRAVARIANT = "Contravariant"


class BasisTag(Enum):
    INJECTIVE = "InjectiveBasis"
    SIMPLE = "SimpleBasis"
    PROJECTIVE = "ProjectiveBasis"

    @classmethod
    def parse(cls, s: str) -> "BasisTag":
        key = s.strip().lower()
        for tag in cls:
            if key in (tag.value.lower(), tag.name.lower(), tag.name.lower()[0]):
                return tag
        raise ValueError(f"unknown basis {s!r}")

    def modules(self, n: int) -> list[Interval]:
        """The basis modules, as intervals, in the fixed order."""
        if self is BasisTag.INJECTIVE:
            return [Interval(1, j) for j in range(1, n)]
        if self is BasisTag.SIMPLE:
            return [Interval(j, j) for j in range(n - 1, 0, -1)]
        return [Interval(j, n - 1) for j in range(1, n)]

    def coordinates(self, intervals: Iterable[Interval], n: int) -> list[int]:
        """Coordinates of the class of a sum of intervals."""
        vec = [0] * (n - 1)
        for a, b in intervals:
            if not 1 <= a <= b <= n - 1:
                raise ValueError(f"interval [{a},{b}] out of range for n={n}")
            if self is BasisTag.INJECTIVE:
                # [a,b] = I_b - I_{a-1}
                vec[b - 1] += 1
                if a > 1:
                    vec[a - 2] -= 1
            elif self is BasisTag.SIMPLE:
                for k in range(a, b + 1):
                    vec[n - 1 - k] += 1
            else:
                # [a,b] = P_a - P_{b+1}, with P_n = 0
                vec[a - 1] += 1
                if b + 1 <= n - 1:
                    vec[b] -= 1
        return vec


def _check_index(n: int, i: int) -> None:
    if n < 2:
        raise ValueError("generators need n >= 2")
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} outside 1..{n - 1}")


def _injective_matrix(n: int, i: int, weight: int = 1) -> Matrix:
    d = n - 1
    rows = [[int(r == c) for c in range(d)] for r in range(d)]
    rows[i - 1] = [0] * d
    if i >= 2:
        rows[i - 2][i - 1] = weight
    return Matrix(rows, d, d)


@lru_cache(maxsize=None)
def matrix_generator(n: int, i: int, basis: BasisTag = BasisTag.INJECTIVE) -> IntMatrix:
    _check_index(n, i)
    if basis is BasisTag.INJECTIVE:
        return _injective_matrix(n, i)
    if basis is BasisTag.SIMPLE:
        return _injective_matrix(n, n - i).T
    if i != n - 1:
        return _injective_matrix(n, i + 1)
    d = n - 1
    rows = [[int(r == c) for c in range(d)] for r in range(d - 1)]
    rows.append([-1] * (d - 1) + [0])
    return Matrix(rows, d, d)


@dataclass(frozen=True)
class WeightVector:
    z: tuple[int, ...]

    def __post_init__(self):
        z = tuple(int(x) for x in self.z)
        object.__setattr__(self, "z", z)
        if any(x < 1 for x in z):
            raise ValueError("weights must be positive integers")

    @classmethod
    def units(cls, n: int) -> "WeightVector":
        return cls((1,) * max(n - 2, 0))


def matrix_weighted(n: int, i: int, z: WeightVector | Sequence[int]) -> IntMatrix:
    """``M_i`` with the entry above the diagonal at column ``i`` set to ``z_{i-1}``."""
    if not isinstance(z, WeightVector):
        z = WeightVector(tuple(z))
    _check_index(n, i)
    if len(z.z) != n - 2:
        raise ValueError(f"need {n - 2} weights for n={n}, got {len(z.z)}")
    return _injective_matrix(n, i, z.z[i - 2] if i >= 2 else 1)


def product(mats: Sequence[Matrix], d: int) -> Matrix:
    out = Matrix.identity(d)
    for m in mats:
        out = out @ m
    return out


def word_matrix(letters: Sequence[int], n: int, gen, orientation: Orientation = Orientation.COVARIANT) -> Matrix:
    """Matrix of a word with generator matrices ``gen(i)``.

    Covariant means ``rep(f o g) = rep(f) rep(g)``, so the word's matrices
    multiply in reading order.
    """
    mats = [gen(i) for i in letters]
    if orientation is Orientation.CONTRAVARIANT:
        mats.reverse()
    return product(mats, n - 1)


def relation_failures(n: int, gen) -> list:
    """Relation instances whose two sides evaluate to different matrices."""
    return [rel for rel in relation_instances(n)
            if word_matrix(rel.lhs, n, gen) != word_matrix(rel.rhs, n, gen)]


def default_orientation() -> Orientation:
    """The orientation found by comparing functor compositions with the monoid."""
    from .functors import phi_orientation
    return phi_orientation(3)


@lru_cache(maxsize=None)
def _element_table(n: int, basis: BasisTag, orientation: Orientation) -> dict[CatalanMap, Matrix]:
    """Every element's matrix, built along the right Cayley graph.

    Each time an already-seen element is reached by another path its two
    matrices are compared, which covers every pair of equal words.
    """
    gens = {i: generator(n, i) for i in range(1, n)}
    mats = {i: matrix_generator(n, i, basis) for i in range(1, n)}
    start = identity(n)
    table = {start: Matrix.identity(n - 1)}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for i, g in gens.items():
            h = f @ g
            m = table[f] @ mats[i] if orientation is Orientation.COVARIANT else mats[i] @ table[f]
            if h in table:
                if table[h] != m:
                    raise InvariantError(f"two words for {h} give different matrices")
            else:
                table[h] = m
                queue.append(h)
    return table


def rep_of_element(f: CatalanMap, basis: BasisTag = BasisTag.INJECTIVE,
                   orientation: Orientation | None = None) -> IntMatrix:
    n = f.n
    if n == 1:
        return Matrix.zeros(0, 0)
    orientation = default_orientation() if orientation is None else orientation
    if n <= BOUNDS.max_faithful_n:
        return _element_table(n, basis, orientation)[f]
    return word_matrix(word_for(f).letters, n, lambda i: matrix_generator(n, i, basis), orientation)


def faithfulness_check(n: int, basis: BasisTag = BasisTag.INJECTIVE,
                       orientation: Orientation | None = None) -> bool:
    if n > BOUNDS.max_faithful_n:
        raise ValueError(f"n = {n} exceeds the faithfulness bound {BOUNDS.max_faithful_n}")
    elems = enumerate_monoid(n)
    return len({rep_of_element(f, basis, orientation) for f in elems}) == len(elems)


# -- output ------------------------------------------------------------------

def int_rows(m: Matrix) -> list[list[int]]:
    if not m.is_integral():
        raise InvariantError("expected an integer matrix")
    return [[int(x) for x in r] for r in m.tolist()]


def matrix_to_csv(m: Matrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in int_rows(m):
        w.writerow(r)
    return buf.getvalue()
