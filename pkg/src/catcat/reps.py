"""Representations of finite quivers over the rationals.

This is the shared substrate for the linear quiver, its radical-square-zero
opposite, and the grid quiver used to model bimodules.  A representation
stores one dimension per vertex and one matrix per arrow, shaped
``dim(target) x dim(source)``.  Morphisms store one matrix per vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Sequence

from .errors import InvariantError
from .exact import Matrix


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[Hashable, ...]
    arrows: tuple[tuple[Hashable, Hashable], ...]

    @cached_property
    def index(self) -> dict:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def outgoing(self) -> dict:
        out = {v: [] for v in self.vertices}
        for e, (s, _) in enumerate(self.arrows):
            out[s].append(e)
        return out


class ChainQuiver(Quiver):
    """The path ``1 - 2 - ... - (n-1)`` with all arrows pointing one way.

    ``forward`` arrows go ``k -> k+1``; otherwise ``k+1 -> k``.  With
    ``radsq`` every path of length two is zero in the path algebra.
    Arrow ``e`` (0-based) joins vertices ``e+1`` and ``e+2``.
    """

    def __init__(self, n: int, forward: bool = True, radsq: bool = False):
        if n < 2:
            raise ValueError("chain quiver needs n >= 2 (at least one vertex)")
        verts = tuple(range(1, n))
        if forward:
            arrows = tuple((k, k + 1) for k in range(1, n - 1))
        else:
            arrows = tuple((k + 1, k) for k in range(1, n - 1))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "forward", forward)
        object.__setattr__(self, "radsq", radsq)

    def __repr__(self) -> str:
        kind = "forward" if self.forward else "backward"
        return f"ChainQuiver(n={self.n}, {kind}{', radsq' if self.radsq else ''})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, ChainQuiver) and self.n == other.n
                and self.forward == other.forward and self.radsq == other.radsq)

    def __hash__(self) -> int:
        return hash((self.n, self.forward, self.radsq))

    def path(self, u: int, v: int) -> list[int] | None:
        """Arrow indices of the nonzero path ``u -> v`` (in order), or None."""
        if u == v:
            return []
        if self.forward and u < v:
            arrows = list(range(u - 1, v - 1))
        elif not self.forward and u > v:
            arrows = list(range(u - 2, v - 2, -1))
        else:
            return None
        if self.radsq and len(arrows) > 1:
            return None
        return arrows

    def injective_support(self, v: int) -> tuple[int, int]:
        """Interval ``(a, b)`` supporting the indecomposable injective at ``v``."""
        if self.forward:
            return (1, v) if not self.radsq else (max(1, v - 1), v)
        return (v, min(v + 1, self.n - 1)) if self.radsq else (v, self.n - 1)

    def socle_vertex(self, interval: tuple[int, int]) -> int:
        a, b = interval
        return b if self.forward else a


class Rep:
    """A representation: ``dims[k]`` at ``quiver.vertices[k]``, ``maps[e]`` on arrow ``e``."""

    __slots__ = ("quiver", "dims", "maps")

    def __init__(self, quiver: Quiver, dims: Sequence[int], maps: Sequence[Matrix]):
        dims = tuple(int(d) for d in dims)
        maps = tuple(maps)
        if len(dims) != len(quiver.vertices) or len(maps) != len(quiver.arrows):
            raise ValueError("dims/maps do not match the quiver")
        if any(d < 0 for d in dims):
            raise ValueError("negative dimension")
        idx = quiver.index
        for e, (s, t) in enumerate(quiver.arrows):
            if maps[e].shape != (dims[idx[t]], dims[idx[s]]):
                raise ValueError(f"arrow {s}->{t}: expected shape "
                                 f"{(dims[idx[t]], dims[idx[s]])}, got {maps[e].shape}")
        if isinstance(quiver, ChainQuiver) and quiver.radsq:
            for e in range(len(maps) - 1):
                first, second = (e, e + 1) if quiver.forward else (e + 1, e)
                if not (maps[second] @ maps[first]).is_zero():
                    raise ValueError("a path of length two acts nonzero")
        self.quiver = quiver
        self.dims = dims
        self.maps = maps

    @property
    def n(self) -> int:
        return self.quiver.n

    def dim(self, v) -> int:
        return self.dims[self.quiver.index[v]]

    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return not any(self.dims)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Rep) and self.quiver == other.quiver
                and self.dims == other.dims and self.maps == other.maps)

    def __hash__(self) -> int:
        return hash((self.quiver, self.dims, self.maps))

    def __repr__(self) -> str:
        return f"Rep({self.quiver!r}, dims={list(self.dims)})"

    def path_map(self, u, v) -> Matrix:
        """Composite of arrow maps along the nonzero path ``u -> v``."""
        path = self.quiver.path(u, v)
        if path is None:
            raise ValueError(f"no nonzero path {u} -> {v}")
        m = Matrix.identity(self.dim(u))
        for e in path:
            m = self.maps[e] @ m
        return m


def zero_rep(quiver: Quiver) -> Rep:
    return Rep(quiver, [0] * len(quiver.vertices),
               [Matrix.zeros(0, 0) for _ in quiver.arrows])


def interval_rep(quiver: ChainQuiver, a: int, b: int) -> Rep:
    """One-dimensional on ``a..b`` with identity arrows inside the support."""
    if not 1 <= a <= b <= quiver.n - 1:
        raise ValueError(f"interval [{a},{b}] outside 1..{quiver.n - 1}")
    dims = [int(a <= v <= b) for v in quiver.vertices]
    maps = []
    for s, t in quiver.arrows:
        ds, dt = dims[s - 1], dims[t - 1]
        maps.append(Matrix([[1]] if ds and dt else [[0] * ds for _ in range(dt)], dt, ds))
    return Rep(quiver, dims, maps)


def direct_sum(quiver: Quiver, reps: Sequence[Rep]) -> Rep:
    if not reps:
        return zero_rep(quiver)
    dims = [sum(r.dims[k] for r in reps) for k in range(len(quiver.vertices))]
    maps = [Matrix.block_diag([r.maps[e] for r in reps]) for e in range(len(quiver.arrows))]
    return Rep(quiver, dims, maps)


class Morphism:
    """A morphism of representations, one matrix per vertex."""

    __slots__ = ("source", "target", "comps")

    def __init__(self, source: Rep, target: Rep, comps: Sequence[Matrix], check: bool = True):
        comps = tuple(comps)
        if source.quiver != target.quiver:
            raise ValueError("morphism between representations of different quivers")
        if len(comps) != len(source.dims):
            raise ValueError("one component per vertex required")
        for k, c in enumerate(comps):
            if c.shape != (target.dims[k], source.dims[k]):
                raise ValueError("component shape mismatch")
        self.source = source
        self.target = target
        self.comps = comps
        if check:
            idx = source.quiver.index
            for e, (s, t) in enumerate(source.quiver.arrows):
                if comps[idx[t]] @ source.maps[e] != target.maps[e] @ comps[idx[s]]:
                    raise ValueError(f"square at arrow {s}->{t} does not commute")

    @classmethod
    def zero(cls, source: Rep, target: Rep) -> "Morphism":
        return cls(source, target, [Matrix.zeros(dt, ds) for ds, dt in zip(source.dims, target.dims)],
                   check=False)

    @classmethod
    def identity(cls, rep: Rep) -> "Morphism":
        return cls(rep, rep, [Matrix.identity(d) for d in rep.dims], check=False)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """Composition ``self o other``."""
        if other.target != self.source:
            raise ValueError("composition of non-composable morphisms")
        return Morphism(other.source, self.target,
                        [a @ b for a, b in zip(self.comps, other.comps)], check=False)

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target,
                        [a + b for a, b in zip(self.comps, other.comps)], check=False)

    def __neg__(self) -> "Morphism":
        return Morphism(self.source, self.target, [-a for a in self.comps], check=False)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Morphism) and self.source == other.source
                and self.target == other.target and self.comps == other.comps)

    def __hash__(self) -> int:
        return hash(self.comps)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def is_iso(self) -> bool:
        return all(c.rows == c.cols and c.rank() == c.rows for c in self.comps)

    def inverse(self) -> "Morphism":
        return Morphism(self.target, self.source, [c.inverse() for c in self.comps], check=False)

    def is_injective(self) -> bool:
        return all(c.rank() == c.cols for c in self.comps)

    def is_surjective(self) -> bool:
        return all(c.rank() == c.rows for c in self.comps)


# -- sub- and quotient objects ----------------------------------------------

def subrep(M: Rep, bases: Sequence[Matrix]) -> tuple[Rep, Morphism]:
    """The subrepresentation spanned by column bases ``bases[k]`` at each vertex.

    Raises ``ValueError`` if the subspaces are not closed under the arrows.
    """
    idx = M.quiver.index
    maps = []
    for e, (s, t) in enumerate(M.quiver.arrows):
        image = M.maps[e] @ bases[idx[s]]
        try:
            maps.append(bases[idx[t]].solve(image))
        except ValueError:
            raise ValueError(f"subspaces not closed under arrow {s}->{t}") from None
    sub = Rep(M.quiver, [b.cols for b in bases], maps)
    return sub, Morphism(sub, M, bases, check=False)


def is_subrep(M: Rep, bases: Sequence[Matrix]) -> bool:
    try:
        subrep(M, bases)
    except ValueError:
        return False
    return True


def quotient(M: Rep, bases: Sequence[Matrix]) -> tuple[Rep, Morphism]:
    """``M`` modulo the subrepresentation spanned by ``bases``, with the projection."""
    projs = [b.left_nullspace() if b.cols else Matrix.identity(b.rows) for b in bases]
    return _quotient_from_projections(M, projs)


def _quotient_from_projections(M: Rep, projs: Sequence[Matrix]) -> tuple[Rep, Morphism]:
    idx = M.quiver.index
    sections = [p.right_inverse() for p in projs]
    maps = []
    for e, (s, t) in enumerate(M.quiver.arrows):
        maps.append(projs[idx[t]] @ M.maps[e] @ sections[idx[s]])
    Q = Rep(M.quiver, [p.rows for p in projs], maps)
    return Q, Morphism(M, Q, projs, check=False)


def kernel(phi: Morphism) -> tuple[Rep, Morphism]:
    return subrep(phi.source, [c.nullspace() for c in phi.comps])


def image(phi: Morphism) -> tuple[Rep, Morphism]:
    return subrep(phi.target, [c.column_basis() for c in phi.comps])


def cokernel(phi: Morphism) -> tuple[Rep, Morphism]:
    projs = [c.left_nullspace() for c in phi.comps]
    return _quotient_from_projections(phi.target, projs)


def factor_through_mono(phi: Morphism, mono: Morphism) -> Morphism:
    """The unique ``psi`` with ``mono o psi == phi`` (``mono`` injective)."""
    comps = [m.solve(c) for m, c in zip(mono.comps, phi.comps)]
    return Morphism(phi.source, mono.source, comps, check=False)


def induced_on_quotients(phi: Morphism, p_src: Morphism, p_tgt: Morphism) -> Morphism:
    """The map ``Q_src -> Q_tgt`` induced by ``phi`` through surjections ``p_src``, ``p_tgt``."""
    comps = [pt @ c @ ps.right_inverse() for c, ps, pt in zip(phi.comps, p_src.comps, p_tgt.comps)]
    return Morphism(p_src.target, p_tgt.target, comps, check=False)


def socle_basis(M: Rep, v) -> Matrix:
    """Vectors at ``v`` killed by every arrow leaving ``v`` (trace of the simple at ``v``)."""
    out = M.quiver.outgoing[v]
    d = M.dim(v)
    if not out:
        return Matrix.identity(d)
    return Matrix.vstack([M.maps[e] for e in out], d).nullspace()


def trace_of_simple(M: Rep, v) -> tuple[Rep, Morphism]:
    """The trace of the simple module at ``v``: the socle part at ``v``, zero elsewhere."""
    idx = M.quiver.index
    bases = [Matrix.zeros(d, 0) for d in M.dims]
    bases[idx[v]] = socle_basis(M, v)
    return subrep(M, bases)


def trace_quotient(M: Rep, v) -> tuple[Rep, Morphism]:
    """``M / Tr_{L_v}(M)`` together with the projection."""
    idx = M.quiver.index
    soc = socle_basis(M, v)
    if soc.cols == 0:
        return M, Morphism.identity(M)
    projs = [Matrix.identity(d) for d in M.dims]
    projs[idx[v]] = soc.left_nullspace() if soc.cols < soc.rows else Matrix.zeros(0, soc.rows)
    return _quotient_from_projections(M, projs)


# -- hom spaces --------------------------------------------------------------

def _hom_system(M: Rep, N: Rep) -> tuple[Matrix, list[tuple[int, int, int]]]:
    """Linear constraints on the entries of a morphism ``M -> N``."""
    idx = M.quiver.index
    offsets = []
    unknowns = []
    pos = 0
    for k in range(len(M.dims)):
        offsets.append(pos)
        pos += M.dims[k] * N.dims[k]
    for k in range(len(M.dims)):
        for r in range(N.dims[k]):
            for c in range(M.dims[k]):
                unknowns.append((k, r, c))
    rows = []
    for e, (s, t) in enumerate(M.quiver.arrows):
        ks, kt = idx[s], idx[t]
        A, B = M.maps[e], N.maps[e]
        # (phi_t A - B phi_s)[r, c] = 0
        for r in range(N.dims[kt]):
            for c in range(M.dims[ks]):
                row = [0] * pos
                for j in range(M.dims[kt]):
                    if A[j, c]:
                        row[offsets[kt] + r * M.dims[kt] + j] += A[j, c]
                for j in range(N.dims[ks]):
                    if B[r, j]:
                        row[offsets[ks] + j * M.dims[ks] + c] -= B[r, j]
                rows.append(row)
    return Matrix(rows, len(rows), pos), unknowns


def _morphism_from_vector(M: Rep, N: Rep, vec: Sequence, unknowns) -> Morphism:
    comps = [[[0] * M.dims[k] for _ in range(N.dims[k])] for k in range(len(M.dims))]
    for x, (k, r, c) in zip(vec, unknowns):
        comps[k][r][c] = x
    return Morphism(M, N, [Matrix(comps[k], N.dims[k], M.dims[k]) for k in range(len(M.dims))],
                    check=False)


def hom_basis(M: Rep, N: Rep) -> list[Morphism]:
    system, unknowns = _hom_system(M, N)
    null = system.nullspace()
    return [_morphism_from_vector(M, N, [null[i, j] for i in range(null.rows)], unknowns)
            for j in range(null.cols)]


def hom_dim(M: Rep, N: Rep) -> int:
    system, unknowns = _hom_system(M, N)
    return len(unknowns) - system.rank()


# -- injectives on chain quivers ---------------------------------------------

def injective_rep(quiver: ChainQuiver, v: int) -> Rep:
    return interval_rep(quiver, *quiver.injective_support(v))


def map_to_injective(X: Rep, v: int, functionals: Matrix) -> Morphism:
    """The morphism ``X -> I_v^{r}`` determined by ``r`` functionals on ``X_v``.

    Maps into the indecomposable injective at ``v`` correspond to linear
    forms on ``X_v``; the component at ``u`` is the form composed with the
    path map ``u -> v``.
    """
    q = X.quiver
    r = functionals.rows
    target = direct_sum(q, [injective_rep(q, v)] * r)
    comps = []
    for u in q.vertices:
        if q.path(u, v) is None:
            comps.append(Matrix.zeros(0, X.dim(u)))
        else:
            comps.append(functionals @ X.path_map(u, v))
    return Morphism(X, target, comps, check=False)


def stack_into(X: Rep, parts: Sequence[Morphism]) -> Morphism:
    """Combine maps ``X -> T_k`` into ``X -> T_1 + ... + T_m``."""
    target = direct_sum(X.quiver, [p.target for p in parts])
    comps = [Matrix.vstack([p.comps[k] for p in parts], X.dims[k]) for k in range(len(X.dims))]
    return Morphism(X, target, comps, check=False)


def injective_envelope(M: Rep) -> tuple[tuple[int, ...], Morphism]:
    """Socle-driven injective envelope ``M -> (+)_v I_v^{soc_v}``.

    Returns the injective labels (socle vertices, ascending, repeated) and the
    embedding.  The codomain is the direct sum of standard injectives in label
    order.
    """
    q = M.quiver
    labels: list[int] = []
    parts = []
    for v in q.vertices:
        soc = socle_basis(M, v)
        if soc.cols == 0:
            continue
        parts.append(map_to_injective(M, v, soc.left_inverse()))
        labels.extend([v] * soc.cols)
    if not parts:
        return (), Morphism(M, zero_rep(q), [Matrix.zeros(0, d) for d in M.dims], check=False)
    return tuple(labels), stack_into(M, parts)


def solve_map_into_injective(pre: Morphism, target: Morphism, v: int) -> Morphism:
    """Some ``h: pre.target -> I_v`` with ``h o pre == target``.

    ``target`` must map into the standard injective at ``v``.  Raises
    ``InvariantError`` when no extension exists.
    """
    X = pre.target
    q = X.quiver
    cols = []
    rhs = []
    for k, u in enumerate(q.vertices):
        if q.path(u, v) is None:
            continue
        cols.append(X.path_map(u, v) @ pre.comps[k])
        rhs.append(target.comps[k])
    dv = X.dim(v)
    if not cols:
        return map_to_injective(X, v, Matrix.zeros(1, dv))
    A = Matrix.hstack(cols)
    B = Matrix.hstack(rhs)
    try:
        lam = A.T.solve(B.T).T
    except ValueError:
        raise InvariantError("map does not extend to the injective") from None
    return map_to_injective(X, v, lam)


def path_rank(M: Rep, a: int, b: int) -> int:
    """Rank of the composite map between vertices ``a`` and ``b`` along the chain."""
    q = M.quiver
    u, v = (a, b) if q.forward else (b, a)
    if any(M.dim(w) == 0 for w in range(a, b + 1)):
        return 0
    m = Matrix.identity(M.dim(u))
    step = 1 if q.forward else -1
    w = u
    while w != v:
        e = (w - 1) if q.forward else (w - 2)
        m = M.maps[e] @ m
        w += step
    return m.rank()
