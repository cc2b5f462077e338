"""
Forms, Poincaré complexes and their L-classes
=============================================

A nonsingular form over Z is a Poincaré complex concentrated in one degree.
We look at the E8 form, a hyperbolic plane and a form with Arf invariant 1.
"""

from lchain import fixtures
from lchain.poincare import direct_sum, l_class, middle_pairing, product, signature, verify_poincare

# E8: psi is upper triangular, psi + psi^T is the Cartan matrix
e8 = fixtures.e8()
print("E8 is Poincaré:", verify_poincare(e8))
lam = middle_pairing(e8)
print("signature of lambda:", signature(lam), " det:", lam.det())
print("class:", l_class(e8))

# the hyperbolic plane is a boundary, so its class vanishes
print("hyperbolic:", l_class(fixtures.hyperbolic()))
print("E8 + hyperbolic:", l_class(direct_sum(e8, fixtures.hyperbolic())))

# in dimension 2 the invariant is the Arf invariant of q(x) = psi(x, x) mod 2
print("Arf form:", l_class(fixtures.arf_form()))
print("hyperbolic in dimension 2:", l_class(fixtures.hyperbolic(2)))

# products: the quadratic product of two generators has class 8, not 1
print("E8 x E8:", l_class(product(e8, e8)))

# a point with phi = 2 fails duality: the duality map has cokernel Z/2
print("point with phi = 2 is Poincaré:", verify_poincare(fixtures.point(2)))
