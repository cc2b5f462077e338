"""
Dual cells of triangulated spheres
==================================

The dual cell of a simplex lives in the barycentric subdivision and has
complementary dimension. Counting cells with signs recovers the Euler
characteristic.
"""

import itertools

from lchain.zxmod import SimplicialComplex, dual_cell_complex, dual_cells

for n in (2, 3):
    sphere = SimplicialComplex.from_maximal(itertools.combinations(range(n + 2), n + 1))
    dc = dual_cells(sphere, n)
    print(f"S^{n}: cells by dimension {dc.counts()}, chi = {dc.euler_characteristic()}")
    print("   top simplices of the subdivision:", dc.top_flag_total(), " partitioned:", dc.partitions_top_flags())

# every dual cell is a cone, so its homology is that of a point
dc = dual_cells(SimplicialComplex.from_maximal(itertools.combinations(range(4), 3)), 2)
cell = dc.cells[(0,)]
h = {r: str(g) for r, g in dual_cell_complex(cell).homology_all().items()}
print("D(v0) has", len(cell.flags), "simplices; homology", h)
