import pytest

from catcat.errors import Inconclusive
from catcat.monoid import catalan_number, eval_word, relation_instances
from catcat.rewriting import knuth_bendix, presentation_completeness


@pytest.mark.parametrize("n", range(1, 7))
def test_normal_forms_count_monoid(n):
    rep = presentation_completeness(n)
    assert rep.passed
    assert rep.normal_forms == catalan_number(n)


@pytest.mark.parametrize("n", range(2, 6))
def test_normal_forms_are_distinct_elements(n):
    rels = [(r.lhs, r.rhs) for r in relation_instances(n)]
    system = knuth_bendix(rels)
    nfs = system.normal_forms(range(1, n))
    assert len({eval_word(w, n) for w in nfs}) == len(nfs)
    for w in nfs:
        assert system.is_irreducible(w)


def test_normal_form_reduces_equal_words_together():
    rels = [(r.lhs, r.rhs) for r in relation_instances(4)]
    system = knuth_bendix(rels)
    assert system.normal_form((1, 2, 1)) == system.normal_form((2, 1, 2)) == system.normal_form((1, 2))
    assert system.normal_form((3, 1)) == system.normal_form((1, 3))


def test_rule_cap_is_inconclusive():
    rels = [(r.lhs, r.rhs) for r in relation_instances(5)]
    with pytest.raises(Inconclusive):
        knuth_bendix(rels, max_rules=3)


def test_free_monoid_is_infinite():
    system = knuth_bendix([])
    with pytest.raises(Inconclusive):
        system.normal_forms([1, 2], max_len=6)


def test_small_group_presentation():
    # a^3 = 1 as a monoid: three normal forms
    system = knuth_bendix([((1, 1, 1), ())])
    assert len(system.normal_forms([1])) == 3
