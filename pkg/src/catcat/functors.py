"""Projection functors ``F_i`` and partial approximations ``G_i``.

``F_i`` quotients a representation by the trace of the simple ``L_i``.
``G_i`` is computed on an injective copresentation ``0 -> M -> Q0 -> Q1 -> 0``
as the kernel of ``F_i Q0 -> F_i Q1``.  A second, independent construction
(:func:`partial_approximation`) and a closed-form table on intervals serve
as oracles for it.

Words act right to left: ``FunctorWord(n, (i1, i2, i3))`` is
``G_i1 o G_i2 o G_i3`` and ``G_i3`` is applied first.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product as iproduct
from typing import Iterable, Iterator

from . import reps
from .config import BOUNDS
from .errors import InvariantError
from .exact import Matrix
from .groth import BasisTag, IntMatrix, Orientation
from .monoid import CatalanMap, compose, enumerate_monoid, eval_word, word_for
from .quiver_rep import (Interval, IntervalMultiset, decompose_intervals, injective_copresentation,
                         interval, interval_sum, normalize)
from .reps import Morphism, Rep


@dataclass(frozen=True)
class FunctorWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        bad = [x for x in letters if not 1 <= x <= self.n - 1]
        if bad:
            raise ValueError(f"letters {bad} outside 1..{self.n - 1}")

    def __add__(self, other: "FunctorWord") -> "FunctorWord":
        if self.n != other.n:
            raise ValueError("concatenating words for different n")
        return FunctorWord(self.n, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(f"G{i}" for i in self.letters) or "Id"


def all_words(n: int, max_len: int) -> Iterator[FunctorWord]:
    for k in range(max_len + 1):
        for letters in iproduct(range(1, n), repeat=k):
            yield FunctorWord(n, letters)


def _check_vertex(i: int, M: Rep) -> None:
    if not 1 <= i <= M.quiver.n - 1:
        raise ValueError(f"vertex {i} outside 1..{M.quiver.n - 1}")


# -- F_i ---------------------------------------------------------------------

def apply_F(i: int, M: Rep) -> Rep:
    _check_vertex(i, M)
    return reps.trace_quotient(M, i)[0]


def apply_F_morphism(i: int, phi: Morphism) -> Morphism:
    """``F_i`` on a morphism: the trace is a subfunctor, so ``phi`` descends."""
    _, ps = reps.trace_quotient(phi.source, i)
    _, pt = reps.trace_quotient(phi.target, i)
    return reps.induced_on_quotients(phi, ps, pt)


# -- G_i ---------------------------------------------------------------------

def _g_complex(i: int, M: Rep) -> Morphism:
    cop = injective_copresentation(M)
    return apply_F_morphism(i, cop.map)


def apply_G(i: int, M: Rep) -> Rep:
    _check_vertex(i, M)
    return reps.kernel(_g_complex(i, M))[0]


def right_derived_G(i: int, k: int, M: Rep) -> Rep:
    """Degree-``k`` homology of ``F_i`` applied to the copresentation of ``M``."""
    _check_vertex(i, M)
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return apply_G(i, M)
    if k == 1:
        return reps.cokernel(_g_complex(i, M))[0]
    return reps.zero_rep(M.quiver)


def g_interval(i: int, iv: Interval) -> Interval | None:
    """Closed form for ``G_i`` of an interval module (``None`` for zero)."""
    a, b = iv
    if i == a - 1:
        return Interval(a - 1, b)
    if i == b and b > a:
        return Interval(a, b - 1)
    if i == a == b:
        return None
    return Interval(a, b)


def _reject(N: Rep, i: int) -> list[Matrix]:
    """Per-vertex bases of the common kernel of all maps ``N -> I_j``, ``j != i``.

    A map into ``I_j`` is a functional on ``N_j`` pulled back along path maps,
    so the kernel at ``u`` is cut out by the path maps ``u -> j``.
    """
    q = N.quiver
    bases = []
    for u in q.vertices:
        blocks = [N.path_map(u, j) for j in q.vertices if j != i and q.path(u, j) is not None]
        d = N.dim(u)
        bases.append(Matrix.vstack(blocks, d).nullspace() if blocks else Matrix.identity(d))
    return bases


def partial_approximation(i: int, M: Rep) -> Rep:
    """``M'/M''`` built from an injective envelope ``M -> I_M``.

    ``M'`` is the preimage in ``I_M`` of the reject of ``Q_i = (+)_{j != i} I_j``
    in ``I_M/M``, and ``M''`` is the reject of ``Q_i`` in ``M'``.
    """
    _check_vertex(i, M)
    _, embed = reps.injective_envelope(M)
    C, pi = reps.cokernel(embed)
    rej = _reject(C, i)
    pre = []
    for S, p in zip(rej, pi.comps):
        ann = S.left_nullspace() if S.cols else Matrix.identity(S.rows)
        pre.append((ann @ p).nullspace())
    Mp, _ = reps.subrep(embed.target, pre)
    return reps.quotient(Mp, _reject(Mp, i))[0]


# -- words -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _g_on_interval(n: int, i: int, a: int, b: int) -> IntervalMultiset:
    return decompose_intervals(apply_G(i, interval(n, a, b)))


def apply_word_intervals(w: FunctorWord, intervals: Iterable[Interval]) -> IntervalMultiset:
    """Apply ``G_w`` to a sum of intervals, working up to isomorphism.

    ``G_i`` is additive, so it is enough to know it on each interval; those
    values come from the genuine kernel construction and are cached.
    """
    cur = list(intervals)
    for i in reversed(w.letters):
        nxt: list[Interval] = []
        for a, b in cur:
            nxt.extend(_g_on_interval(w.n, i, a, b))
        cur = nxt
    return normalize(cur)


def apply_word(w: FunctorWord, M: Rep) -> Rep:
    if M.quiver.n != w.n:
        raise ValueError("word and module have different n")
    if not w.letters:
        return M
    return interval_sum(w.n, apply_word_intervals(w, decompose_intervals(M)))


def apply_word_direct(w: FunctorWord, M: Rep) -> Rep:
    """Apply ``G_w`` by running the kernel construction at every step."""
    for i in reversed(w.letters):
        M = apply_G(i, M)
    return M


def functor_tuple(w: FunctorWord) -> tuple[int, ...]:
    """``t`` with ``G_w I_j = I_{t_j}`` (``I_0 = 0``), for ``j = 1..n-1``."""
    out = []
    for j in range(1, w.n):
        val = apply_word_intervals(w, [Interval(1, j)])
        if not val:
            out.append(0)
        elif len(val) == 1 and val[0].a == 1:
            out.append(val[0].b)
        else:
            raise InvariantError(f"{w} sends I_{j} to {list(map(str, val))}, not an injective")
    return tuple(out)


def grothendieck_matrix(w: FunctorWord, basis: BasisTag = BasisTag.INJECTIVE) -> IntMatrix:
    n = w.n
    cols = []
    for mod in basis.modules(n):
        cols.append(basis.coordinates(apply_word_intervals(w, [mod]), n))
    return Matrix.from_columns(cols, n - 1)


# -- monoid comparison -------------------------------------------------------

@lru_cache(maxsize=None)
def phi_orientation(n: int) -> Orientation:
    """Which way functor composition matches composition in the monoid.

    Every pair of elements is tested through the names of the functors of
    their shortest words.  When both orders fit (``n <= 2``, a commutative
    monoid) the covariant answer is returned.
    """
    from .bimodule import evaluated_name

    if n < 2:
        raise ValueError("orientation needs n >= 2")
    if n > BOUNDS.max_phi_n:
        raise ValueError(f"n = {n} exceeds the orientation bound {BOUNDS.max_phi_n}")
    elems = enumerate_monoid(n)
    words = {f: FunctorWord(n, word_for(f).letters) for f in elems}
    cov = contra = True
    for f, g in iproduct(elems, repeat=2):
        name = evaluated_name(words[f] + words[g])
        cov &= name == compose(f, g)
        contra &= name == compose(g, f)
    if cov:
        return Orientation.COVARIANT
    if contra:
        return Orientation.CONTRAVARIANT
    raise InvariantError(f"neither orientation is consistent for n={n}")


@dataclass(frozen=True)
class SemigroupReport:
    n: int
    names_bijective: bool
    table_matches: bool
    mismatches: tuple

    @property
    def passed(self) -> bool:
        return self.names_bijective and self.table_matches


def semigroup_check(n: int, orientation: Orientation | None = None) -> SemigroupReport:
    """Compare the table of functor names with the monoid's multiplication table."""
    from .bimodule import evaluated_name

    orientation = phi_orientation(n) if orientation is None else orientation
    elems = enumerate_monoid(n)
    words = {f: FunctorWord(n, word_for(f).letters) for f in elems}
    names = {f: evaluated_name(words[f]) for f in elems}
    bij = len(set(names.values())) == len(elems) and all(names[f] == f for f in elems)
    bad = []
    for f, g in iproduct(elems, repeat=2):
        lhs = evaluated_name(words[f] + words[g])
        want = names[f] @ names[g] if orientation is Orientation.COVARIANT else names[g] @ names[f]
        if lhs != want:
            bad.append((f, g))
    return SemigroupReport(n, bij, not bad, tuple(bad))


class Decomposability(Enum):
    INDECOMPOSABLE = "Indecomposable"
    ZERO = "Zero"


def indecomposable_or_zero(w: FunctorWord) -> Decomposability:
    """Classify ``G_w`` through its bimodule ``I / X_t``.

    Zero if the quotient vanishes; otherwise the endomorphism algebra must be
    one-dimensional, and anything larger raises ``InvariantError``.
    """
    from .bimodule import TTuple, endomorphism_dim

    t = TTuple(w.n, functor_tuple(w))
    if t.is_zero_quotient():
        return Decomposability.ZERO
    d = endomorphism_dim(t)
    if d == 1:
        return Decomposability.INDECOMPOSABLE
    raise InvariantError(f"{w} has a {d}-dimensional endomorphism algebra")


def words_agree_with_monoid(n: int, max_len: int) -> list[tuple[FunctorWord, FunctorWord]]:
    """Pairs of words equal in the monoid whose values differ on some interval."""
    from .quiver_rep import all_intervals

    by_elem: dict[CatalanMap, FunctorWord] = {}
    bad = []
    ivs = all_intervals(n)
    for w in all_words(n, max_len):
        f = eval_word(w.letters, n)
        ref = by_elem.setdefault(f, w)
        if ref is w:
            continue
        if any(apply_word_intervals(w, [iv]) != apply_word_intervals(ref, [iv]) for iv in ivs):
            bad.append((ref, w))
    return bad


def exactness_defect(i: int, sub: Morphism, quo: Morphism) -> tuple[int, ...]:
    """``dim G_i A - dim G_i B + dim G_i C`` per vertex for ``A -> B -> C``."""
    A, B, C = sub.source, sub.target, quo.target
    ga, gb, gc = (apply_G(i, X).dims for X in (A, B, C))
    return tuple(x - y + z for x, y, z in zip(ga, gb, gc))


def multiset_str(ivs: Iterable[Interval]) -> str:
    c = Counter(ivs)
    if not c:
        return "0"
    return " + ".join((f"{m}*" if m > 1 else "") + str(iv) for iv, m in sorted(c.items()))
