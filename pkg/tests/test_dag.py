import pytest

from ocbsl.dag import JOIN, NEG, SIZE_CAP, Arena, ArenaFullError, print_term
from enum_terms import enumerate_terms


def test_interning_is_shared():
    arena = Arena()
    assert arena.var("a") == arena.var("a")
    assert arena.zero() == arena.zero()
    a, b = arena.var("a"), arena.var("b")
    assert arena.join((a, b)) == arena.join((a, b))
    # stored order matters at this layer; the normalizer handles commutativity
    assert arena.join((a, b)) != arena.join((b, a))
    assert arena.neg(arena.neg(a)) != a


def test_intern_grows_by_at_most_one():
    arena = Arena()
    a = arena.var("a")
    n = len(arena)
    arena.var("a")
    assert len(arena) == n
    arena.neg(a)
    assert len(arena) == n + 1


def test_arena_capacity():
    arena = Arena(max_nodes=2)
    a = arena.var("a")
    arena.neg(a)
    with pytest.raises(ArenaFullError):
        arena.var("b")


def test_ref_validation():
    arena = Arena()
    other = Arena()
    a = other.var("a")
    other.var("b")
    with pytest.raises(ValueError):
        arena.neg(0)
    with pytest.raises(ValueError):
        arena.join((a,))


def test_reverse_topological_order_basics():
    arena = Arena()
    a = arena.var("a")
    assert arena.reverse_topological_order([a]) == [a]
    na = arena.neg(a)
    assert arena.reverse_topological_order([na]) == [a, na]


def test_reverse_topological_order_diamond():
    arena = Arena()
    a = arena.var("a")
    na = arena.neg(a)
    top = arena.join((na, a))
    order = arena.reverse_topological_order([top])
    assert sorted(order) == sorted({a, na, top})
    pos = {n: i for i, n in enumerate(order)}
    assert pos[a] < pos[na] < pos[top]


def test_reverse_topological_order_property():
    arena = Arena()
    refs = [arena.intern_tree(t) for t in enumerate_terms(5)]
    order = arena.reverse_topological_order(refs)
    assert len(order) == len(set(order)) == len(arena)
    pos = {n: i for i, n in enumerate(order)}
    for n in order:
        kind = arena.kind(n)
        children = ()
        if kind == NEG:
            children = (arena.neg_child(n),)
        elif kind == JOIN:
            children = arena.join_children(n)
        for c in children:
            assert pos[c] < pos[n]


def test_tree_size():
    arena = Arena()
    a, b = arena.var("a"), arena.var("b")
    assert arena.tree_size(a) == 1
    assert arena.tree_size(arena.neg(arena.join((a, b)))) == 4


def test_tree_size_saturates():
    arena = Arena()
    t = arena.var("a")
    for _ in range(64):
        t = arena.join((t, t))
    assert arena.tree_size(t) == SIZE_CAP  # saturated, not wrapped


def test_sharing_gap():
    # doubling chain: node count linear in depth, expanded tree exponential
    arena = Arena()
    t = arena.var("a")
    for _ in range(40):
        t = arena.join((t, t))
    assert len(arena) == 41
    assert arena.tree_size(t) >= 2**40


def test_hash_consing_soundness_exhaustive():
    # structural equality of terms <-> equality of refs, all terms <= 5 nodes
    arena = Arena()
    terms = enumerate_terms(5, atoms=(("var", "a"), ("var", "b")))
    refs = [arena.intern_tree(t) for t in terms]
    assert len(set(refs)) == len(terms)
    again = [arena.intern_tree(t) for t in terms]
    assert refs == again


def test_tree_round_trip():
    arena = Arena()
    for t in enumerate_terms(5):
        assert arena.export_tree(arena.intern_tree(t)) == t


def test_print_term():
    arena = Arena()
    a, b = arena.var("a"), arena.var("b")
    assert print_term(arena, arena.join((a, arena.neg(b)))) == "a | !b"
    assert print_term(arena, arena.neg(arena.join((a, b)))) == "!(a | b)"
    assert print_term(arena, arena.join((a, arena.join((a, b))))) == "a | (a | b)"
    assert print_term(arena, arena.neg(arena.neg(a))) == "!!a"
    assert print_term(arena, arena.zero()) == "0"
