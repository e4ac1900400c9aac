"""Hash-consed DAG of internal terms.

Internal terms are built from variables, the constants 0 and 1, negation,
and one n-ary join.  An Arena interns every node: structurally identical
subterms resolve to the same integer handle (TermRef), so terms with heavy
sharing stay small even when the fully expanded tree is astronomically
large.  Children of a join are kept in stored order here; commutativity is
the normalizer's business.

The plain-tuple interchange form used by `intern_tree`/`export_tree` (and
by the rewrite oracle) is::

    ("var", name) | ("0",) | ("1",) | ("not", t) | ("or", (t1, ..., tk))
"""

from __future__ import annotations

from collections import deque
import re

__all__ = [
    "Arena",
    "ArenaFullError",
    "VAR",
    "ZERO",
    "ONE",
    "NEG",
    "JOIN",
    "SIZE_CAP",
    "print_term",
]

VAR, ZERO, ONE, NEG, JOIN = range(5)

# Underlying-tree sizes saturate here instead of growing without bound.
# Order among saturated values is lost, which only blurs the child
# schedule for absurdly large subtrees, never correctness.
SIZE_CAP = 2**64 - 1

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class ArenaFullError(RuntimeError):
    """Raised when interning would exceed the arena's node limit."""


class Arena:
    """Single-writer store of interned term nodes.

    TermRefs are indices into the arena and are only meaningful within it.
    Frozen arenas may be read concurrently; interning is not thread-safe.
    """

    def __init__(self, max_nodes: int | None = None):
        self._kinds: list[int] = []
        self._payload: list = []  # name | child ref | tuple of child refs | None
        self._memo: dict = {}
        self._sizes: list[int] = []  # 0 = not yet computed
        self._max_nodes = max_nodes

    def __len__(self) -> int:
        return len(self._kinds)

    def _add(self, key, kind: int, payload) -> int:
        if self._max_nodes is not None and len(self._kinds) >= self._max_nodes:
            raise ArenaFullError(f"arena limit of {self._max_nodes} nodes reached")
        ref = len(self._kinds)
        self._kinds.append(kind)
        self._payload.append(payload)
        self._sizes.append(0)
        self._memo[key] = ref
        return ref

    def zero(self) -> int:
        ref = self._memo.get(("0",))
        return ref if ref is not None else self._add(("0",), ZERO, None)

    def one(self) -> int:
        ref = self._memo.get(("1",))
        return ref if ref is not None else self._add(("1",), ONE, None)

    def var(self, name: str) -> int:
        if not _NAME_RE.fullmatch(name):
            raise ValueError(f"invalid variable name {name!r}")
        key = ("v", name)
        ref = self._memo.get(key)
        return ref if ref is not None else self._add(key, VAR, name)

    def neg(self, child: int) -> int:
        self._check(child)
        key = ("n", child)
        ref = self._memo.get(key)
        return ref if ref is not None else self._add(key, NEG, child)

    def join(self, children: tuple[int, ...]) -> int:
        children = tuple(children)
        if not children:
            raise ValueError("join needs at least one child")
        for c in children:
            self._check(c)
        key = ("j", children)
        ref = self._memo.get(key)
        return ref if ref is not None else self._add(key, JOIN, children)

    def _check(self, ref: int) -> None:
        if not (isinstance(ref, int) and 0 <= ref < len(self._kinds)):
            raise ValueError(f"ref {ref!r} does not belong to this arena")

    # -- node accessors ----------------------------------------------------

    def kind(self, ref: int) -> int:
        return self._kinds[ref]

    def var_name(self, ref: int) -> str:
        if self._kinds[ref] != VAR:
            raise ValueError("not a variable node")
        return self._payload[ref]

    def neg_child(self, ref: int) -> int:
        if self._kinds[ref] != NEG:
            raise ValueError("not a negation node")
        return self._payload[ref]

    def join_children(self, ref: int) -> tuple[int, ...]:
        if self._kinds[ref] != JOIN:
            raise ValueError("not a join node")
        return self._payload[ref]

    # -- traversal and measures --------------------------------------------

    def reverse_topological_order(self, roots: list[int]) -> list[int]:
        """Every node reachable from roots, each after all of its children."""
        for r in roots:
            self._check(r)
        discovered: list[int] = []
        seen: set[int] = set()
        stack = [r for r in reversed(roots)]
        while stack:
            n = stack.pop()
            if n in seen:
                continue
            seen.add(n)
            discovered.append(n)
            kind = self._kinds[n]
            if kind == NEG:
                stack.append(self._payload[n])
            elif kind == JOIN:
                stack.extend(reversed(self._payload[n]))

        # Kahn's algorithm over child->parent dependencies: a node is
        # emitted once all its distinct children have been emitted.
        parents: dict[int, list[int]] = {n: [] for n in discovered}
        missing: dict[int, int] = {}
        for n in discovered:
            kind = self._kinds[n]
            if kind == NEG:
                kids = (self._payload[n],)
            elif kind == JOIN:
                kids = tuple(dict.fromkeys(self._payload[n]))
            else:
                kids = ()
            missing[n] = len(kids)
            for c in kids:
                parents[c].append(n)
        queue = deque(n for n in discovered if missing[n] == 0)
        order: list[int] = []
        while queue:
            n = queue.popleft()
            order.append(n)
            for p in parents[n]:
                missing[p] -= 1
                if missing[p] == 0:
                    queue.append(p)
        assert len(order) == len(discovered)
        return order

    def tree_size(self, ref: int) -> int:
        """Node count of the fully expanded tree under ref, saturating at SIZE_CAP.

        Memoized; shared subterms are measured once.
        """
        self._check(ref)
        sizes = self._sizes
        if sizes[ref]:
            return sizes[ref]
        stack = [ref]
        while stack:
            n = stack[-1]
            if sizes[n]:
                stack.pop()
                continue
            kind = self._kinds[n]
            if kind == NEG:
                child = self._payload[n]
                if sizes[child]:
                    sizes[n] = min(SIZE_CAP, 1 + sizes[child])
                    stack.pop()
                else:
                    stack.append(child)
            elif kind == JOIN:
                todo = [c for c in self._payload[n] if not sizes[c]]
                if todo:
                    stack.extend(todo)
                else:
                    sizes[n] = min(SIZE_CAP, 1 + sum(sizes[c] for c in self._payload[n]))
                    stack.pop()
            else:
                sizes[n] = 1
                stack.pop()
        return sizes[ref]

    # -- plain-tuple interchange --------------------------------------------

    def intern_tree(self, term) -> int:
        """Intern a plain-tuple term (see module docstring for the shape)."""
        stack = [(term, False)]
        vals: list[int] = []
        while stack:
            t, expanded = stack.pop()
            head = t[0]
            if not expanded:
                if head == "var":
                    vals.append(self.var(t[1]))
                elif head == "0":
                    vals.append(self.zero())
                elif head == "1":
                    vals.append(self.one())
                elif head == "not":
                    stack.append((t, True))
                    stack.append((t[1], False))
                elif head == "or":
                    stack.append((t, True))
                    for c in reversed(t[1]):
                        stack.append((c, False))
                else:
                    raise ValueError(f"bad term node {t!r}")
            else:
                if head == "not":
                    vals.append(self.neg(vals.pop()))
                else:
                    k = len(t[1])
                    children = tuple(vals[len(vals) - k :])
                    del vals[len(vals) - k :]
                    vals.append(self.join(children))
        return vals[0]

    def export_tree(self, ref: int):
        """Plain-tuple form of ref; expands sharing, so keep inputs small."""
        self._check(ref)
        out: dict[int, tuple] = {}
        for n in self.reverse_topological_order([ref]):
            kind = self._kinds[n]
            if kind == VAR:
                out[n] = ("var", self._payload[n])
            elif kind == ZERO:
                out[n] = ("0",)
            elif kind == ONE:
                out[n] = ("1",)
            elif kind == NEG:
                out[n] = ("not", out[self._payload[n]])
            else:
                out[n] = ("or", tuple(out[c] for c in self._payload[n]))
        return out[ref]


def print_term(arena: Arena, ref: int) -> str:
    """Internal-language text: n-ary `|`, prefix `!`, constants 0/1.

    Join children of joins and negated composites are parenthesised.
    Deterministic: children appear in stored order.
    """
    out: list[str] = []
    stack: list = [(ref, False)]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        n, need_parens = item
        kind = arena.kind(n)
        if kind == VAR:
            out.append(arena.var_name(n))
        elif kind == ZERO:
            out.append("0")
        elif kind == ONE:
            out.append("1")
        elif kind == NEG:
            out.append("!")
            stack.append((arena.neg_child(n), True))
        else:
            children = arena.join_children(n)
            if need_parens:
                out.append("(")
                stack.append(")")
            first = True
            for c in reversed(children):
                if not first:
                    stack.append(" | ")
                stack.append((c, True))
                first = False
    return "".join(out)
