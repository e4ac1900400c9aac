"""Walk through the equivalence checker on small formulas.

Run:  python3 demos/equivalence_basics.py
"""

from ocbsl import Arena, Session, parse, to_internal

arena = Arena()
session = Session(arena)


def check(lhs, rhs):
    a = to_internal(parse(lhs), arena)
    b = to_internal(parse(rhs), arena)
    verdict = "equivalent    " if session.equivalent(a, b) else "NOT equivalent"
    print(f"  {verdict}  {lhs:32s} vs  {rhs}")


print("Laws the checker decides (commutativity, associativity, idempotence,")
print("units, complement, double negation, de Morgan):")
check("a | b", "b | a")
check("a | (b | c)", "(a | b) | c")
check("a & a", "a")
check("a | 0", "a")
check("a & 1", "a")
check("a | !a", "1")
check("a & !a", "0")
check("!!a", "a")
check("!(a & b)", "!a | !b")
check("!(a | b)", "!a & !b")

print()
print("A conjunction against its own negation cancels even though the two")
print("sides share no top-level structure:")
check("(a & b) | !(a & b)", "1")
check("a | !(a & b)", "1")

print()
print("What it deliberately does NOT prove: anything needing distributivity")
print("or absorption.  These pairs are Boolean-equal but stay distinct here,")
print("which is the price of the quasilinear guarantee:")
check("x | (x & y)", "x")
check("x & (y | z)", "(x & y) | (x & z)")
