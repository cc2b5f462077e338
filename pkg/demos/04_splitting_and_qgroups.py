"""
Cones of composites and Q-groups
================================

If f: A -> B and g: B -> C split, the cone of g f has the homology of
cone(f) + cone(g). The check below builds random split systems and
compares invariant factors.
"""

import random

from lchain.chain import ChainComplex, random_split_system, splitting_check
from lchain.qstruct import q_group

rng = random.Random(0)
for _ in range(3):
    f, g = random_split_system(rng, max_rank=4, max_entry=3)
    print(splitting_check(f, g).summary())

# quadratic and symmetric Q-groups of a point
point = ChainComplex.point()
print("Q_n :", [str(q_group(point, n)) for n in range(6)])
print("Q^n :", [str(q_group(point, n, "symmetric")) for n in range(6)])
