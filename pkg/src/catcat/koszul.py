"""The radical-square-zero dual side: ``F^!_i``, ``G^!_i`` and their derived functors.

The quiver is ``n-1 -> ... -> 2 -> 1`` with every path of length two equal
to zero.  Indecomposable modules are the simples ``L^!_i = [i,i]`` and the
length-two uniserials ``[i,i+1]``; the injective with socle ``L^!_i`` is
``[i,i+1]`` for ``i <= n-2`` and ``L^!_{n-1}`` at the end of the chain.

The algebra is not hereditary, so composing derived functors cannot be done
module by module.  A complex is resolved by peeling off its lowest term and
taking a mapping cone (:func:`resolve`); ``G^!_i`` agrees with ``F^!_i`` on
injectives, so ``RG^!_i`` of a complex of injectives is ``F^!_i`` termwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct
from typing import Sequence

from . import reps
from .config import BOUNDS
from .errors import InvariantError
from .exact import Matrix
from .quiver_rep import Interval, IntervalMultiset, decompose_intervals
from .reps import ChainQuiver, Morphism, Rep


@lru_cache(maxsize=None)
def radsq_quiver(n: int) -> ChainQuiver:
    return ChainQuiver(n, forward=False, radsq=True)


def radsq_rep(n: int, dims: Sequence[int], arrows: Sequence) -> Rep:
    """``arrows[k]`` is the map ``V_{k+2} -> V_{k+1}`` (row-major data or a Matrix)."""
    mats = []
    for k, a in enumerate(arrows):
        mats.append(a if isinstance(a, Matrix) else Matrix(a, dims[k], dims[k + 1]))
    return Rep(radsq_quiver(n), dims, mats)


def _check(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"vertex {i} outside 1..{n - 1}")


def dual_simple(n: int, i: int) -> Rep:
    _check(n, i)
    return reps.interval_rep(radsq_quiver(n), i, i)


def dual_injective(n: int, i: int) -> Rep:
    _check(n, i)
    return reps.injective_rep(radsq_quiver(n), i)


def dual_injective_sum(n: int) -> Rep:
    """``I^!``: the sum of all indecomposable injectives."""
    return reps.direct_sum(radsq_quiver(n), [dual_injective(n, i) for i in range(1, n)])


def apply_F_bang(i: int, M: Rep) -> Rep:
    _check(M.quiver.n, i)
    return reps.trace_quotient(M, i)[0]


def dual_label(iv: Interval) -> str:
    a, b = iv
    return f"L!{a}" if a == b else f"I!{a}"


# -- complexes ---------------------------------------------------------------

@dataclass(frozen=True)
class Complex:
    """A bounded cochain complex; ``terms[k]`` sits in degree ``lo + k``.

    ``labels`` is set when every term is a sum of standard injectives, listed
    in the order they are stacked.
    """

    quiver: ChainQuiver
    lo: int
    terms: tuple[Rep, ...]
    diffs: tuple[Morphism, ...]
    labels: tuple[tuple[int, ...], ...] | None = field(default=None)

    @property
    def hi(self) -> int:
        return self.lo + len(self.terms) - 1

    def term(self, p: int) -> Rep:
        if self.lo <= p <= self.hi:
            return self.terms[p - self.lo]
        return reps.zero_rep(self.quiver)

    def label(self, p: int) -> tuple[int, ...]:
        if self.labels is None:
            raise ValueError("complex terms are not labelled injectives")
        return self.labels[p - self.lo] if self.lo <= p <= self.hi else ()

    def diff(self, p: int) -> Morphism:
        if self.lo <= p < self.hi:
            return self.diffs[p - self.lo]
        return Morphism.zero(self.term(p), self.term(p + 1))

    def check(self) -> None:
        for p in range(self.lo, self.hi - 1):
            if not (self.diff(p + 1) @ self.diff(p)).is_zero():
                raise InvariantError(f"d^2 != 0 at degree {p}")

    def homology(self, p: int) -> Rep:
        Z, z = reps.kernel(self.diff(p))
        b = reps.factor_through_mono(self.diff(p - 1), z)
        return reps.cokernel(b)[0]

    def homology_multisets(self) -> dict[int, IntervalMultiset]:
        out = {}
        for p in range(self.lo, self.hi + 1):
            h = decompose_intervals(self.homology(p))
            if h:
                out[p] = h
        return out


InjComplex = Complex


def single(M: Rep, p: int = 0) -> Complex:
    return Complex(M.quiver, p, (M,), ())


def _empty(q: ChainQuiver, p: int) -> Complex:
    return Complex(q, p, (), (), ())


def _injective_sum(q: ChainQuiver, labels: Sequence[int]) -> Rep:
    return reps.direct_sum(q, [reps.injective_rep(q, v) for v in labels])


def _summand_projection(q: ChainQuiver, labels: Sequence[int], k: int) -> Morphism:
    """Projection of a sum of standard injectives onto its ``k``-th summand."""
    src = _injective_sum(q, labels)
    tgt = reps.injective_rep(q, labels[k])
    comps = []
    for u in q.vertices:
        row = []
        for j, v in enumerate(labels):
            a, b = q.injective_support(v)
            if a <= u <= b:
                row.append(int(j == k))
        comps.append(Matrix([row], 1, len(row)) if tgt.dim(u) else Matrix.zeros(0, len(row)))
    return Morphism(src, tgt, comps, check=False)


def _extend_into(pre: Morphism, target: Morphism, labels: Sequence[int]) -> Morphism:
    """``h`` on ``pre.target`` with ``h o pre == target``; ``target`` maps into labelled injectives."""
    q = pre.source.quiver
    if not labels:
        return Morphism.zero(pre.target, target.target)
    parts = [reps.solve_map_into_injective(pre, _summand_projection(q, labels, k) @ target, v)
             for k, v in enumerate(labels)]
    h = reps.stack_into(pre.target, parts)
    return Morphism(pre.target, target.target, h.comps, check=False)


def coresolve(M: Rep, p: int = 0) -> tuple[Complex, Morphism]:
    """Injective coresolution by iterated socle envelopes, starting in degree ``p``.

    Returns the complex and the embedding ``M -> J^p``.
    """
    q = M.quiver
    if M.is_zero():
        return _empty(q, p), Morphism(M, reps.zero_rep(q), [Matrix.zeros(0, 0)] * len(M.dims), check=False)
    labels0, e0 = reps.injective_envelope(M)
    terms, diffs, labels = [e0.target], [], [labels0]
    C, pr = reps.cokernel(e0)
    bound = q.n + 2
    while not C.is_zero():
        if len(terms) > bound:
            raise InvariantError(f"coresolution longer than {bound}")
        lab, e = reps.injective_envelope(C)
        diffs.append(e @ pr)
        terms.append(e.target)
        labels.append(lab)
        C, pr = reps.cokernel(e)
    return Complex(q, p, tuple(terms), tuple(diffs), tuple(labels)), e0


def inj_coresolution(M: Rep) -> InjComplex:
    return coresolve(M, 0)[0]


def _block(src: Sequence[Rep], tgt: Sequence[Rep], blocks) -> Morphism:
    """Morphism between direct sums from ``blocks[r][c]: src[c] -> tgt[r]`` (None for zero)."""
    q = (src or tgt)[0].quiver
    S, T = reps.direct_sum(q, list(src)), reps.direct_sum(q, list(tgt))
    comps = []
    for k in range(len(q.vertices)):
        rows = []
        for r, t in enumerate(tgt):
            row = []
            for c, s in enumerate(src):
                b = blocks[r][c]
                row.append(b.comps[k] if b is not None else Matrix.zeros(t.dims[k], s.dims[k]))
            rows.append(Matrix.hstack(row, t.dims[k]))
        comps.append(Matrix.vstack(rows, S.dims[k]))
    return Morphism(S, T, comps, check=False)


def resolve(K: Complex) -> tuple[Complex, dict[int, Morphism]]:
    """A complex of injectives with a quasi-isomorphism from ``K``.

    The lowest term ``A`` is split off: ``K`` is the cone of ``d: A[-1] -> K'``
    with ``K'`` the rest.  Coresolving ``A`` and resolving ``K'``, the map
    lifts to a chain map ``g`` and the answer is the cone of ``g``.
    """
    q = K.quiver
    terms = [K.term(p) for p in range(K.lo, K.hi + 1)]
    if not any(not t.is_zero() for t in terms):
        return _empty(q, K.lo), {}
    p = K.lo
    A = K.term(p)
    if K.hi == p:
        E, e = coresolve(A, p)
        return E, {p: e}
    rest = Complex(q, p + 1, K.terms[1:], K.diffs[1:])
    J, iota = resolve(rest)
    if A.is_zero():
        return J, {**iota, p: Morphism.zero(A, J.term(p))}
    E, e = coresolve(A, p + 1)
    lo = min(p, J.lo if J.terms else p + 1)
    hi = max(E.hi - 1, J.hi if J.terms else p)
    # lift g: E -> J with g^{p+1} o e = iota^{p+1} o d_K^p
    jp1 = J.term(p + 1)
    h = (iota[p + 1] @ K.diff(p)) if p + 1 in iota else Morphism.zero(A, jp1)
    g = {p + 1: _extend_into(e, h, J.label(p + 1))}
    for m in range(p + 2, E.hi + 1):
        rhs = J.diff(m - 1) @ g[m - 1]
        g[m] = _extend_into(E.diff(m - 1), rhs, J.label(m))
    def gm(m):
        return g[m] if m in g else Morphism.zero(E.term(m), J.term(m))
    new_terms, new_diffs, new_labels = [], [], []
    for m in range(lo, hi + 1):
        new_terms.append(reps.direct_sum(q, [E.term(m + 1), J.term(m)]))
        new_labels.append(E.label(m + 1) + J.label(m))
    for m in range(lo, hi):
        src = [E.term(m + 1), J.term(m)]
        tgt = [E.term(m + 2), J.term(m + 1)]
        new_diffs.append(_block(src, tgt, [[-E.diff(m + 1), None], [gm(m + 1), J.diff(m)]]))
    C = Complex(q, lo, tuple(new_terms), tuple(new_diffs), tuple(new_labels))
    qi = {}
    for m in range(K.lo, K.hi + 1):
        src = K.term(m)
        parts_tgt = [E.term(m + 1), J.term(m)]
        if m == p:
            blocks = [[e], [None]]
        else:
            blocks = [[None], [iota.get(m)]]
        qi[m] = _block([src], parts_tgt, blocks)
    return C, qi


def reduce_complex(C: Complex) -> Complex:
    """Cancel isomorphic pairs of indecomposable summands joined by an isomorphism.

    Standard Gaussian elimination: if the block ``phi: X -> Y`` of ``d^p`` is
    invertible, both summands are removed and the neighbouring block ``eps``
    becomes ``eps - gamma phi^{-1} delta``.  The result is homotopy equivalent.
    """
    if C.labels is None:
        return C
    q = C.quiver
    labels = [list(l) for l in C.labels]
    # blocks[p][r][c]: summand c of degree p -> summand r of degree p+1
    blocks = []
    for k, d in enumerate(C.diffs):
        src, tgt = labels[k], labels[k + 1]
        blocks.append([[_summand_projection(q, tgt, r) @ d @ _summand_inclusion(q, src, c)
                        for c in range(len(src))] for r in range(len(tgt))])
    changed = True
    while changed:
        changed = False
        for k in range(len(blocks)):
            found = None
            for r, row in enumerate(blocks[k]):
                for c, phi in enumerate(row):
                    if labels[k][c] == labels[k + 1][r] and phi.is_iso():
                        found = (r, c, phi)
                        break
                if found:
                    break
            if not found:
                continue
            r, c, phi = found
            inv = phi.inverse()
            B = blocks[k]
            # d^k: drop row r and column c, updating the remaining entries
            newB = [[B[i][j] - B[i][c] @ inv @ B[r][j] for j in range(len(B[0])) if j != c]
                    for i in range(len(B)) if i != r]
            blocks[k] = newB
            if k > 0:
                blocks[k - 1] = [row for j, row in enumerate(blocks[k - 1]) if j != c]
            if k + 1 < len(blocks):
                blocks[k + 1] = [[x for i, x in enumerate(row) if i != r] for row in blocks[k + 1]]
            del labels[k][c]
            del labels[k + 1][r]
            changed = True
            break
    terms, diffs = [], []
    for lab in labels:
        terms.append(_injective_sum(q, lab))
    for k, B in enumerate(blocks):
        diffs.append(_assemble(q, labels[k], labels[k + 1], B))
    lo, hi = 0, len(terms)
    while lo < hi and not labels[lo]:
        lo += 1
    while hi > lo and not labels[hi - 1]:
        hi -= 1
    if lo == hi:
        return _empty(q, C.lo)
    return Complex(q, C.lo + lo, tuple(terms[lo:hi]), tuple(diffs[lo:hi - 1]),
                   tuple(tuple(l) for l in labels[lo:hi]))


def _summand_inclusion(q: ChainQuiver, labels: Sequence[int], k: int) -> Morphism:
    p = _summand_projection(q, labels, k)
    return Morphism(p.target, p.source, [c.T for c in p.comps], check=False)


def _assemble(q: ChainQuiver, src: Sequence[int], tgt: Sequence[int], B) -> Morphism:
    S, T = _injective_sum(q, src), _injective_sum(q, tgt)
    comps = [Matrix.zeros(T.dims[k], S.dims[k]) for k in range(len(q.vertices))]
    for r in range(len(tgt)):
        pr = _summand_inclusion(q, tgt, r)
        for c in range(len(src)):
            ic = _summand_projection(q, src, c)
            piece = pr @ B[r][c] @ ic
            comps = [a + b for a, b in zip(comps, piece.comps)]
    return Morphism(S, T, comps, check=False)


def apply_F_complex(i: int, C: Complex) -> Complex:
    terms, projs = [], []
    for t in C.terms:
        Q, pr = reps.trace_quotient(t, i)
        terms.append(Q)
        projs.append(pr)
    diffs = [reps.induced_on_quotients(d, projs[k], projs[k + 1]) for k, d in enumerate(C.diffs)]
    return Complex(C.quiver, C.lo, tuple(terms), tuple(diffs))


def derived_word(letters: Sequence[int], M: Rep | Complex, reduce: bool = True) -> Complex:
    """``RG^!_{l1} o ... o RG^!_{lk}`` applied to ``M``; the last letter acts first."""
    K = M if isinstance(M, Complex) else single(M)
    for i in reversed(tuple(letters)):
        _check(K.quiver.n, i)
        J, _ = resolve(K)
        if reduce:
            J = reduce_complex(J)
        K = apply_F_complex(i, J)
    return K


def derived_homology(letters: Sequence[int], M: Rep) -> dict[int, IntervalMultiset]:
    return derived_word(letters, M).homology_multisets()


def right_derived_G_bang(i: int, k: int, M: Rep) -> Rep:
    if k < 0:
        raise ValueError("k must be non-negative")
    _check(M.quiver.n, i)
    return apply_F_complex(i, inj_coresolution(M)).homology(k)


# -- reports -----------------------------------------------------------------

def homology_to_json(h: dict[int, IntervalMultiset]) -> list[dict]:
    return [{"degree": p, "summands": [dual_label(iv) for iv in ivs]} for p, ivs in sorted(h.items())]


def counterexample_eq57(n: int) -> dict:
    """Compare ``RG^!_4 o RG^!_1`` with ``RG^!_1 o RG^!_4`` on ``I^!`` in degree 1.

    Applying ``RG^!_1`` first leaves a simple that ``RG^!_4`` does not kill
    in degree 1; applying ``RG^!_4`` first gives an injective.
    """
    if n < 5:
        raise ValueError("needs n >= 5 (generator 4 must exist with room above it)")
    probe = dual_injective_sum(n)
    first1 = derived_homology((4, 1), probe)
    first4 = derived_homology((1, 4), probe)
    h1, h4 = first1.get(1, ()), first4.get(1, ())
    if bool(h1) == bool(h4):
        raise InvariantError(f"degree-1 homology does not separate the two orders for n={n}")
    return {
        "n": n,
        "probe": "I!",
        "G4_after_G1": {"word": [4, 1], "degreewise_homology": homology_to_json(first1)},
        "G1_after_G4": {"word": [1, 4], "degreewise_homology": homology_to_json(first4)},
        "degree1_G4_after_G1": [dual_label(iv) for iv in h1],
        "degree1_G1_after_G4": [dual_label(iv) for iv in h4],
        "non_isomorphic": True,
    }


def probes(n: int) -> list[tuple[str, Rep]]:
    return [("I!", dual_injective_sum(n))] + [(f"L!{j}", dual_simple(n, j)) for j in range(1, n)]


def bang_relation_instances(n: int) -> list[tuple[str, tuple[int, ...], tuple[int, ...]]]:
    out = [("idempotent", (i, i), (i,)) for i in range(1, n)]
    out += [("commute2", (i, i + 2), (i + 2, i)) for i in range(1, n - 2)]
    out += [("braid", (i, i + 1, i), (i + 1, i, i + 1)) for i in range(1, n - 1)]
    return out


def check_bang_relations(n: int) -> list[dict]:
    if n > BOUNDS.max_koszul_n:
        raise ValueError(f"n = {n} exceeds the Koszul bound {BOUNDS.max_koszul_n}")
    out = []
    for kind, lhs, rhs in bang_relation_instances(n):
        for name, M in probes(n):
            hl, hr = derived_homology(lhs, M), derived_homology(rhs, M)
            out.append({"relation": kind, "lhs": list(lhs), "rhs": list(rhs), "probe": name,
                        "degreewise_homology": [homology_to_json(hl), homology_to_json(hr)],
                        "pass": hl == hr})
    return out


def experiment(n: int, max_len: int) -> list[dict]:
    """Group words by the graded homology they produce on every probe."""
    groups: dict = {}
    for k in range(max_len + 1):
        for w in iproduct(range(1, n), repeat=k):
            sig = tuple(tuple(sorted(derived_homology(w, M).items())) for _, M in probes(n))
            groups.setdefault(sig, []).append(list(w))
    return [{"words": ws, "signature": [homology_to_json(dict(s)) for s in sig]}
            for sig, ws in groups.items()]


def self_duality_n3(max_len: int = 4) -> list[tuple]:
    """For ``n = 3`` the dual algebra is the path algebra again, with vertices swapped.

    Compares the derived dual functors with the ordinary ``G`` words under
    ``v -> 3 - v`` on every indecomposable.  Returns the mismatches.
    """
    from .functors import FunctorWord, apply_word_intervals

    n = 3
    bad = []
    mods = [Interval(1, 1), Interval(2, 2), Interval(1, 2)]
    for k in range(max_len + 1):
        for w in iproduct(range(1, n), repeat=k):
            for a, b in mods:
                h = derived_homology(w, reps.interval_rep(radsq_quiver(n), a, b))
                mapped = {p: tuple(sorted(Interval(n - y, n - x) for x, y in ivs)) for p, ivs in h.items()}
                want = apply_word_intervals(FunctorWord(n, tuple(n - i for i in w)), [Interval(n - b, n - a)])
                if mapped != ({0: want} if want else {}):
                    bad.append((w, (a, b), h, want))
    return bad
