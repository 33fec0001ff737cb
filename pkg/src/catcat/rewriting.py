"""Shortlex Knuth-Bendix completion for finitely presented monoids.

Words are tuples of positive integers (generator indices).  Internally they
are encoded as strings so substring search and replacement are cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .config import BOUNDS
from .errors import Inconclusive


def _enc(word: Sequence[int]) -> str:
    return "".join(chr(0x100 + i) for i in word)


def _dec(s: str) -> tuple[int, ...]:
    return tuple(ord(c) - 0x100 for c in s)


def _shortlex_key(s: str):
    return (len(s), s)


def _orient(a: str, b: str) -> tuple[str, str]:
    return (a, b) if _shortlex_key(a) > _shortlex_key(b) else (b, a)


def _reduce(word: str, rules: dict[str, str]) -> str:
    changed = True
    while changed:
        changed = False
        for lhs, rhs in rules.items():
            if lhs in word:
                word = word.replace(lhs, rhs)
                changed = True
    return word


def _critical_pairs(l1: str, r1: str, l2: str, r2: str) -> Iterable[tuple[str, str]]:
    # suffix of l1 overlapping a prefix of l2
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            yield r1 + l2[k:], l1[:-k] + r2
    # l2 occurring inside l1
    if l1 != l2:
        start = l1.find(l2)
        while start != -1:
            yield r1, l1[:start] + r2 + l1[start + len(l2):]
            start = l1.find(l2, start + 1)


def _interreduce(rules: dict[str, str]) -> dict[str, str]:
    changed = True
    while changed:
        changed = False
        for lhs in sorted(rules, key=_shortlex_key, reverse=True):
            rhs = rules.pop(lhs)
            new_l = _reduce(lhs, rules)
            new_r = _reduce(rhs, rules)
            if new_l == lhs:
                rules[lhs] = new_r
                changed |= new_r != rhs
            else:
                changed = True
                if new_l != new_r:
                    a, b = _orient(new_l, new_r)
                    rules[a] = b
    return rules


@dataclass(frozen=True)
class RewritingSystem:
    rules: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def _as_dict(self) -> dict[str, str]:
        return {_enc(l): _enc(r) for l, r in self.rules}

    def normal_form(self, word: Sequence[int]) -> tuple[int, ...]:
        return _dec(_reduce(_enc(word), self._as_dict()))

    def is_irreducible(self, word: Sequence[int]) -> bool:
        s = _enc(word)
        return not any(_enc(l) in s for l, _ in self.rules)

    def normal_forms(self, alphabet: Sequence[int], max_len: int | None = None) -> list[tuple[int, ...]]:
        """All irreducible words, grown letter by letter.

        Prefixes of irreducible words are irreducible, so the search stops
        once a length produces no new irreducible word.  Raises
        ``Inconclusive`` if that does not happen within ``max_len``.
        """
        max_len = BOUNDS.kb_max_word_len if max_len is None else max_len
        lhss = [_enc(l) for l, _ in self.rules]
        layer = [""]
        out = [()]
        for _ in range(max_len):
            nxt = []
            for w in layer:
                for a in alphabet:
                    s = w + chr(0x100 + a)
                    if not any(s.endswith(l) for l in lhss):
                        nxt.append(s)
            if not nxt:
                return out
            out.extend(_dec(s) for s in nxt)
            layer = nxt
        raise Inconclusive(f"irreducible words longer than {max_len} exist")


def knuth_bendix(relations: Iterable[tuple[Sequence[int], Sequence[int]]],
                 max_rules: int | None = None) -> RewritingSystem:
    """Complete a presentation for the length-then-lexicographic order.

    Raises ``Inconclusive`` when more than ``max_rules`` rules accumulate.
    """
    max_rules = BOUNDS.kb_max_rules if max_rules is None else max_rules
    rules: dict[str, str] = {}
    for l, r in relations:
        a, b = _enc(l), _enc(r)
        if a != b:
            a, b = _orient(a, b)
            rules[a] = b
    rules = _interreduce(rules)
    # keyed by full rules, so a rule whose right side changed is re-examined
    done: set[tuple[str, str, str, str]] = set()
    while True:
        added = False
        for l1, r1 in list(rules.items()):
            for l2, r2 in list(rules.items()):
                key = (l1, r1, l2, r2)
                if key in done:
                    continue
                done.add(key)
                for p, q in _critical_pairs(l1, r1, l2, r2):
                    p, q = _reduce(p, rules), _reduce(q, rules)
                    if p != q:
                        a, b = _orient(p, q)
                        rules[a] = b
                        added = True
                        if len(rules) > max_rules:
                            raise Inconclusive(f"completion exceeded {max_rules} rules")
        if not added:
            break
        rules = _interreduce(rules)
    rules = _interreduce(rules)
    ordered = sorted(rules.items(), key=lambda kv: _shortlex_key(kv[0]))
    return RewritingSystem(tuple((_dec(l), _dec(r)) for l, r in ordered))



@dataclass(frozen=True)
class CompletenessReport:
    n: int
    rules: int
    normal_forms: int
    monoid_size: int

    @property
    def passed(self) -> bool:
        return self.normal_forms == self.monoid_size


def presentation_completeness(n: int, max_rules: int | None = None,
                              max_len: int | None = None) -> CompletenessReport:
    """Complete the generator-relation presentation of ``C_n`` and count normal forms.

    The count is compared to the Catalan number; equality means the three
    relation families present the monoid.
    """
    from .monoid import catalan_number, relation_instances

    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return CompletenessReport(1, 0, 1, 1)
    rels = [(r.lhs, r.rhs) for r in relation_instances(n)]
    system = knuth_bendix(rels, max_rules=max_rules)
    nfs = system.normal_forms(range(1, n), max_len=max_len)
    return CompletenessReport(n, len(system.rules), len(nfs), catalan_number(n))
