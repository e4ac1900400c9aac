"""Exhaustive enumeration of small internal terms, shared by several tests."""

from ocbsl import rewrite as rw

ATOMS = (rw.var("a"), rw.var("b"), rw.ZERO, rw.ONE)


def enumerate_terms(max_nodes, atoms=ATOMS):
    """Every tuple-term with <= max_nodes expanded nodes over the atoms.

    Joins of every arity >= 1 are included, in ordered (pre-commutativity)
    form, so the universe covers single-child collapse redexes too.
    """
    by_size = {1: list(atoms)}
    for n in range(2, max_nodes + 1):
        terms = [rw.neg(t) for t in by_size[n - 1]]
        seqs = {0: [()]}
        for m in range(1, n):
            acc = []
            for j in range(1, m + 1):
                for t in by_size[j]:
                    for rest in seqs[m - j]:
                        acc.append((t,) + rest)
            seqs[m] = acc
        terms.extend(("or", s) for s in seqs[n - 1])
        by_size[n] = terms
    out = []
    for n in range(1, max_nodes + 1):
        out.extend(by_size[n])
    return out
