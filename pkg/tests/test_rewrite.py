import random

import pytest

from ocbsl.rewrite import (
    ONE,
    ZERO,
    RewriteBudgetError,
    applicable_steps,
    canonicalize,
    join,
    joinable,
    neg,
    node_count,
    normal_form,
    oracle_equivalent,
    trace_normal_form,
    var,
)
from enum_terms import enumerate_terms

A = var("a")
B = var("b")


def rules_at(t, position=None):
    return sorted(
        s.rule for s in applicable_steps(t) if position is None or s.position == position
    )


def test_steps_complement():
    t = join(A, neg(A))
    steps = applicable_steps(t)
    assert [s.rule for s in steps] == ["A7"]
    assert steps[0].after == ONE
    assert steps[0].position == ()


def test_steps_variable_is_normal():
    assert applicable_steps(A) == []


def test_steps_double_negation_overlapping_complement():
    t = join(neg(A), neg(neg(A)))
    rules = {(s.rule, s.position, s.after) for s in applicable_steps(t)}
    assert ("A7", (), ONE) in rules
    assert ("A6", (1,), join(neg(A), A)) in rules


def test_steps_cover_each_rule():
    assert rules_at(join(A, join(A, B)), ()) == ["A2"]
    assert rules_at(join(A), ()) == ["A2b"]
    assert rules_at(join(A, A), ()) == ["A3"]
    assert "A4" in rules_at(join(ONE, A), ())
    assert "A5" in rules_at(join(ZERO, A), ())
    assert rules_at(neg(neg(A)), ()) == ["A6"]
    assert "A9" in rules_at(join(A, B, neg(join(B))), ())
    assert rules_at(neg(ZERO), ()) == ["A10"]
    assert rules_at(neg(ONE), ()) == ["A11"]


def test_a3_matches_modulo_commutativity():
    t = join(join(A, B), join(B, A))
    assert "A3" in rules_at(t, ())


def test_a5_never_empties_a_join():
    assert rules_at(join(ZERO), ()) == ["A2b"]


def test_a9_is_multiset_inclusion():
    assert "A9" in rules_at(join(A, B, neg(join(A, B))), ())
    assert "A9" in rules_at(join(B, A, neg(join(A, B))), ())
    # y-children must all be present with multiplicity
    assert "A9" not in rules_at(join(A, neg(join(A, A))), ())
    assert "A9" in rules_at(join(A, A, neg(join(A, A))), ())


def test_normal_forms():
    assert normal_form(join(ZERO, neg(ZERO))) == ONE
    assert normal_form(A) == A
    assert normal_form(neg(neg(A))) == A
    assert normal_form(join(B, A)) == join(A, B)  # canonical child order
    assert normal_form(join(A, join(B, A))) == join(A, B)


def test_normal_form_of_revealed_flat_join():
    # zero-valued subterms hide the final flat join until they reduce
    z1 = neg(join(var("v1"), neg(var("v1"))))
    z2 = neg(join(var("v2"), neg(var("v2"))))
    x = [var(f"x{i}") for i in range(1, 5)]
    t = join(x[0], neg(join(z1, neg(join(x[1], neg(join(z2, neg(join(x[2], x[3])))))))))
    assert normal_form(t) == join(*x)


def test_budget():
    t = join(ZERO, A)
    with pytest.raises(RewriteBudgetError):
        normal_form(t, budget=0)
    nf, steps = trace_normal_form(t)
    assert nf == A
    assert len(steps) <= node_count(t)


def test_strategy_independence_random():
    rng = random.Random(23)
    for t in rng.sample(enumerate_terms(7), 800):
        assert normal_form(t) == normal_form(t, strategy="rightmost-outermost")


def test_joinable_critical_pairs():
    # overlap of double negation inside a complement redex
    w = var("w")
    assert joinable(ONE, join(neg(A), A, w))
    # overlap of join splicing with a complement redex needs the
    # negated-subjoin rule
    assert joinable(join(A, B, var("c"), neg(join(B, var("c")))), ONE)
    # overlap of the zero rule with the complement redex on 0 | !0
    assert joinable(neg(ZERO), ONE)
    assert not joinable(A, B)


def test_oracle_equivalent():
    f = join(neg(join(neg(A), neg(B))), neg(neg(join(neg(A), neg(B)))))
    assert oracle_equivalent(f, ONE)
    # absorption does not hold
    assert not oracle_equivalent(join(A, neg(join(neg(A), neg(B)))), A)
    assert oracle_equivalent(join(A, B), join(B, A))


def test_canonical_order_is_total_and_frozen():
    assert canonicalize(join(B, A)) == join(A, B)
    assert canonicalize(join(neg(A), ONE, A, ZERO)) == join(ZERO, ONE, A, neg(A))
    assert canonicalize(join(join(B, A), neg(B))) == join(neg(B), join(A, B))


def test_termination_bound_random():
    rng = random.Random(29)
    for t in rng.sample(enumerate_terms(7), 800):
        _, steps = trace_normal_form(t)
        assert len(steps) <= node_count(t)
