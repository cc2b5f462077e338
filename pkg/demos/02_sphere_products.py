"""
Normal invariants of S^4 x S^4
==============================

Triples (x, y, z) carry two additions. The disjoint-union sum + is
componentwise; the Whitney sum adds the cross term x y' + x' y to z.
The surgery obstruction is the projection to z, so it is additive for +
but not for the Whitney sum.
"""

from lchain.spherecalc import (
    SElem,
    TElem,
    add,
    assembly,
    eta,
    inverse_pullback_invariant,
    nonadditivity_demo,
    reconcile_check,
    whitney,
)

t, u = TElem.of(4, 4, 1, 2, 0), TElem.of(4, 4, 3, 4, 5)
print("t + u         =", add(t, u))
print("t (+) u       =", whitney(t, u))

# a structure (x, y) and the inverse homotopy equivalence
x, y = 2, 3
s = SElem.of(4, 4, x, y)
print("eta(f)        =", eta(s))
print("eta(f') pulled =", inverse_pullback_invariant(s, -s))

rep = reconcile_check(s, -s)
print("both descriptions agree:", rep.holds, rep.lhs, rep.rhs)

d = nonadditivity_demo(x, y)
print(f"obstruction of the Whitney sum: {d.lhs}, sum of obstructions: {d.rhs}")
print("terms", d.terms, "total", d.decomposition_total)

# on S^2 x S^4 the cross term vanishes and the two additions agree
a, b = TElem.of(2, 4, 1, 5, 1), TElem.of(2, 4, 1, -2, 0)
print("S^2 x S^4:", add(a, b), whitney(a, b), assembly(whitney(a, b)))
