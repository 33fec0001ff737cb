"""Verification suites run by ``catcat verify``.

Each suite returns a list of :class:`Check` records.  Every check carries a
short claim label naming what it tests, so a failing line in a report says
which statement broke.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from typing import Callable

from .config import BOUNDS
from .errors import Inconclusive, InvariantError


@dataclass
class Check:
    name: str
    anchor: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        d = asdict(self)
        d["status"] = "pass" if self.passed else "fail"
        return d


@dataclass(frozen=True)
class Suite:
    name: str
    min_n: int
    max_n: int
    run: Callable[[int, int], list[Check]]

    def applicable(self, n: int) -> bool:
        return self.min_n <= n <= self.max_n


def _guard(name: str, anchor: str, fn) -> Check:
    """Run ``fn() -> (passed, detail)``; invariant failures become failed checks."""
    try:
        ok, detail = fn()
    except InvariantError as exc:
        return Check(name, anchor, False, f"invariant violated: {exc}")
    return Check(name, anchor, bool(ok), detail)


# -- monoid and matrices -----------------------------------------------------

def suite_relations(n: int, max_len: int) -> list[Check]:
    from .groth import BasisTag, WeightVector, matrix_generator, matrix_weighted, relation_failures
    from .monoid import catalan_number, check_relations, enumerate_monoid

    out = [Check("cardinality", "the monoid has Catalan-number many elements",
                 len(enumerate_monoid(n)) == catalan_number(n),
                 f"|C_{n}| = {len(enumerate_monoid(n))}, Catalan = {catalan_number(n)}")]
    if n < 2:
        return out
    bad = [str(r.relation) for r in check_relations(n) if not r.passed]
    out.append(Check("monoid-relations", "generators satisfy the defining relations",
                     not bad, "; ".join(bad) or f"{len(check_relations(n))} instances"))
    for b in BasisTag:
        fails = relation_failures(n, lambda i, b=b: matrix_generator(n, i, b))
        out.append(Check(f"matrix-relations-{b.value}", "generator matrices satisfy the relations",
                         not fails, "; ".join(map(str, fails))))
    rng = random.Random(n)
    for k in range(5):
        z = WeightVector(tuple(rng.randint(1, 9) for _ in range(n - 2)))
        fails = relation_failures(n, lambda i, z=z: matrix_weighted(n, i, z))
        out.append(Check(f"weighted-relations-{list(z.z)}", "weighted matrices satisfy the relations",
                         not fails, "; ".join(map(str, fails))))
    return out


def suite_presentation(n: int, max_len: int) -> list[Check]:
    from .rewriting import presentation_completeness

    rep = presentation_completeness(n)  # Inconclusive propagates
    return [Check("presentation", "the relations present the monoid", rep.passed,
                  f"{rep.rules} rules, {rep.normal_forms} normal forms, |C_n| = {rep.monoid_size}")]


def suite_matrices(n: int, max_len: int) -> list[Check]:
    from .functors import FunctorWord, grothendieck_matrix
    from .groth import BasisTag, WeightVector, faithfulness_check, matrix_generator, matrix_weighted

    out = []
    if n < 2:
        return out
    for b in BasisTag:
        bad = [i for i in range(1, n)
               if grothendieck_matrix(FunctorWord(n, (i,)), b) != matrix_generator(n, i, b)]
        out.append(Check(f"decategorification-{b.value}",
                         "single functors act on the Grothendieck group by the generator matrices",
                         not bad, f"mismatch at i = {bad}" if bad else ""))
        out.append(_guard(f"faithful-{b.value}", "the linear representation is faithful",
                          lambda b=b: (faithfulness_check(n, b), "")))
    bad = [i for i in range(1, n)
           if matrix_generator(n, i, BasisTag.SIMPLE) != matrix_generator(n, n - i, BasisTag.INJECTIVE).T]
    out.append(Check("simple-transpose", "simple-basis matrices are transposes", not bad, str(bad or "")))
    unit = WeightVector.units(n)
    bad = [i for i in range(1, n) if matrix_weighted(n, i, unit) != matrix_generator(n, i)]
    out.append(Check("weighted-units", "unit weights recover the generator matrices", not bad, str(bad or "")))
    return out


# -- functors ----------------------------------------------------------------

def suite_functor_lemmas(n: int, max_len: int) -> list[Check]:
    from .functors import apply_G, g_interval, partial_approximation
    from .quiver_rep import Interval, all_intervals, decompose_intervals, interval, projective, simple

    out = []
    if n < 2:
        return out

    def simples():
        bad = []
        for i in range(1, n):
            for j in range(1, n):
                got = decompose_intervals(apply_G(i, simple(n, j)))
                if i == j:
                    want = ()
                elif i == j - 1:
                    want = (Interval(j - 1, j),)
                else:
                    want = (Interval(j, j),)
                if got != want:
                    bad.append((i, j, got))
        return not bad, str(bad or "")

    def projectives():
        bad = []
        for i in range(1, n):
            for j in range(1, n):
                got = decompose_intervals(apply_G(i, projective(n, j)))
                if i == j - 1:
                    want = (Interval(j - 1, n - 1),)
                elif i == n - 1:
                    want = (Interval(j, n - 2),) if j <= n - 2 else ()
                else:
                    want = (Interval(j, n - 1),)
                if got != want:
                    bad.append((i, j, got))
        return not bad, str(bad or "")

    def oracles():
        bad = []
        for i in range(1, n):
            for iv in all_intervals(n):
                M = interval(n, *iv)
                g = decompose_intervals(apply_G(i, M))
                p = decompose_intervals(partial_approximation(i, M))
                c = g_interval(i, iv)
                if not g == p == ((c,) if c else ()):
                    bad.append((i, iv))
        return not bad, f"{len(bad)} disagreements"

    out.append(_guard("G-on-simples", "G_i kills L_i and extends L_{i+1} downward", simples))
    out.append(_guard("G-on-projectives", "G on projectives: shifts P_{i+1}, truncates under G_{n-1}",
                      projectives))
    out.append(_guard("three-oracles", "independent computations of G_i agree on intervals", oracles))
    return out


def suite_exactness(n: int, max_len: int, samples: int = 200) -> list[Check]:
    from .functors import apply_F, apply_G, right_derived_G
    from .quiver_rep import all_intervals, decompose_intervals, injective, interval, random_rep

    if n < 2:
        return []

    def run():
        rng = random.Random(1000 + n)
        mods = [interval(n, *iv) for iv in all_intervals(n)]
        mods += [random_rep(n, rng) for _ in range(samples)]
        bad = 0
        for M in mods:
            for i in range(1, n):
                if not right_derived_G(i, 1, M).is_zero():
                    bad += 1
        return not bad, f"{len(mods)} modules, {bad} nonzero first derived values"

    def on_injectives():
        bad = [(i, j) for i in range(1, n) for j in range(1, n)
               if decompose_intervals(apply_G(i, injective(n, j)))
               != decompose_intervals(apply_F(i, injective(n, j)))]
        return not bad, str(bad or "")

    return [_guard("derived-vanishing", "G_i is exact", run),
            _guard("G-equals-F-on-injectives", "G_i agrees with F_i on injectives", on_injectives)]


def suite_indecomposability(n: int, max_len: int) -> list[Check]:
    from collections import Counter

    from .functors import Decomposability, all_words, indecomposable_or_zero

    if n < 2:
        return []

    def run():
        c = Counter(indecomposable_or_zero(w) for w in all_words(n, max_len))
        ok = set(c) <= set(Decomposability)
        return ok, ", ".join(f"{k.value}: {v}" for k, v in sorted(c.items(), key=lambda kv: kv[0].value))

    return [_guard("indecomposable-or-zero", "each composite is indecomposable or zero", run)]


# -- bimodules ---------------------------------------------------------------

def suite_theta(n: int, max_len: int) -> list[Check]:
    from .bimodule import (_sub_support, all_ttuples, closed_supports, orientation_report, theta,
                           theta_inv)
    from .monoid import catalan_number, enumerate_monoid

    ts = all_ttuples(n)
    out = [Check("tuple-count", "subbimodules are counted by Catalan numbers",
                 len(ts) == catalan_number(n), f"{len(ts)} tuples")]
    elems = enumerate_monoid(n)
    bij = sorted(theta(t) for t in ts) == sorted(elems) and all(theta(theta_inv(f)) == f for f in elems) \
        and all(theta_inv(theta(t)) == t for t in ts)
    out.append(Check("theta-bijection", "theta is a bijection onto the monoid", bij))
    if n >= 2 and n <= 6:
        closed = set(closed_supports(n))
        named = {frozenset(_sub_support(t)) for t in ts}
        out.append(Check("subbimodule-closure", "tuples name exactly the subbimodules of I",
                         closed == named, f"{len(closed)} closed vertex sets"))
        out.append(_guard("order-orientation", "theta is an order isomorphism (orientation derived)",
                          lambda: (True, str(orientation_report(n)))))
    return out


def suite_homdims(n: int, max_len: int) -> list[Check]:
    from .bimodule import all_ttuples, hom_dim_onemorphisms, hom_indicator

    ts = all_ttuples(n)

    def run():
        bad = [(str(t), str(s)) for t in ts for s in ts
               if hom_dim_onemorphisms(t, s) != hom_indicator(t, s)]
        return not bad, f"{len(ts) ** 2} pairs, mismatches: {bad[:5]}" if bad else f"{len(ts) ** 2} pairs"

    return [_guard("hom-dimensions",
                   "homs between quotients are at most one-dimensional, nonzero exactly for a projection",
                   run)]


def suite_prop24(n: int, max_len: int) -> list[Check]:
    from .bimodule import functor_name
    from .functors import all_words, phi_orientation, semigroup_check

    if n < 2:
        return []

    def names():
        k = 0
        for w in all_words(n, max_len):
            functor_name(w)
            k += 1
        return True, f"{k} words"

    def table():
        rep = semigroup_check(n)
        return rep.passed, f"orientation {phi_orientation(n).value}, {len(rep.mismatches)} mismatches"

    return [_guard("functor-names", "a composite is the hom functor of its named quotient", names),
            _guard("semigroup-table", "names multiply like the monoid", table)]


def suite_cell_action(n: int, max_len: int) -> list[Check]:
    from .monoid import CellClass, all_idempotent_specs, cell_action

    def run():
        bad = [(i, sorted(s.X)) for s in all_idempotent_specs(n) for i in range(1, n)
               if (cell_action(i, s) is CellClass.IDENTITY) != (i in s.X)]
        return not bad, str(bad[:5] or "")

    return [_guard("cell-action", "a generator fixes an idempotent exactly when it is a factor", run)]


# -- dual side ---------------------------------------------------------------

def suite_koszul_counterexample(n: int, max_len: int) -> list[Check]:
    from .koszul import counterexample_eq57, dual_simple, right_derived_G_bang
    from .quiver_rep import Interval, decompose_intervals

    def ce():
        rep = counterexample_eq57(n)
        return rep["non_isomorphic"], (f"degree 1: G4 after G1 -> {rep['degree1_G4_after_G1']}, "
                                       f"G1 after G4 -> {rep['degree1_G1_after_G4'] or 0}")

    def r1():
        got = decompose_intervals(right_derived_G_bang(4, 1, dual_simple(n, 2)))
        return got == (Interval(4, 4),), str(got)

    return [_guard("noncommuting-pair", "RG4 and RG1 do not commute on I!", ce),
            _guard("first-derived-L2", "R^1 G4 L!2 is L!4", r1)]


def suite_koszul_relations(n: int, max_len: int) -> list[Check]:
    from .koszul import check_bang_relations

    out = []
    rows = check_bang_relations(n)
    for kind in ("idempotent", "commute2", "braid"):
        sub = [r for r in rows if r["relation"] == kind]
        if not sub:
            continue
        bad = [f"{r['lhs']} vs {r['rhs']} on {r['probe']}" for r in sub if not r["pass"]]
        out.append(Check(f"dual-{kind}", f"derived dual functors satisfy the {kind} relations on probes",
                         not bad, "; ".join(bad) or f"{len(sub)} probe comparisons"))
    return out


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("relations", 1, 8, suite_relations),
    Suite("presentation", 1, 6, suite_presentation),
    Suite("matrices", 2, 6, suite_matrices),
    Suite("functor-lemmas", 2, 8, suite_functor_lemmas),
    Suite("exactness", 2, 6, suite_exactness),
    Suite("indecomposability", 2, 5, suite_indecomposability),
    Suite("theta", 1, 8, suite_theta),
    Suite("homdims", 2, 5, suite_homdims),
    Suite("prop24", 2, 5, suite_prop24),
    Suite("koszul-counterexample", 5, 7, suite_koszul_counterexample),
    Suite("koszul-relations", 2, 6, suite_koszul_relations),
    Suite("cell-action", 2, 8, suite_cell_action),
]}


def run_suite(name: str, n: int, max_len: int | None = None) -> dict:
    """Run one suite (or ``all``) and assemble a report.

    Raises ``ValueError`` if a named suite does not apply at ``n`` and
    ``Inconclusive`` if a bounded search gave up.
    """
    max_len = min(BOUNDS.max_word_len, 5) if max_len is None else max_len
    names = list(SUITES) if name == "all" else [name]
    report = {"suite": name, "n": n, "max_word_len": max_len, "results": []}
    inconclusive = []
    for s in (SUITES[k] for k in names):
        if not s.applicable(n):
            if name != "all":
                raise ValueError(f"suite {s.name} supports {s.min_n} <= n <= {s.max_n}")
            report["results"].append({"suite": s.name, "status": "skip",
                                      "detail": f"applies for {s.min_n} <= n <= {s.max_n}"})
            continue
        try:
            checks = s.run(n, max_len)
        except Inconclusive as exc:
            inconclusive.append(s.name)
            report["results"].append({"suite": s.name, "status": "inconclusive", "detail": str(exc)})
            continue
        report["results"].append({"suite": s.name, "status": "pass" if all(c.passed for c in checks) else "fail",
                                  "checks": [c.to_json() for c in checks]})
    statuses = {r["status"] for r in report["results"]}
    report["passed"] = "fail" not in statuses and not inconclusive
    report["inconclusive"] = bool(inconclusive) and "fail" not in statuses
    return report
