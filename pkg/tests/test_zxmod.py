"""(Z, X)-modules over simplicial complexes, assembly, local tensors and dual cells."""

import random

import pytest

from lchain.chain import ChainComplex, ChainMap, mapping_cone, random_complex, tensor
from lchain.intmat import IntMatrix
from lchain.zxmod import (
    NotSimplyConnected,
    SimplicialComplex,
    SupportError,
    ZXChainComplex,
    ZXModule,
    ZXMorphism,
    assemble,
    check_cycle_conditions,
    check_support,
    compose,
    dual_cell_complex,
    dual_cells,
    random_module,
    random_morphism,
    zx_tensor,
)

EDGE = SimplicialComplex.from_maximal([(0, 1)])
TRIANGLE = SimplicialComplex.from_maximal([(0, 1, 2)])
TWO_POINTS = SimplicialComplex.from_maximal([(0,), (1,)])


def boundary(n: int) -> SimplicialComplex:
    """``boundary Delta^{n+1}``, a triangulated ``n``-sphere."""
    verts = range(n + 2)
    return SimplicialComplex.from_maximal([tuple(v for v in verts if v != k) for k in verts])


def test_simplicial_complex_is_face_closed():
    assert list(TRIANGLE.simplices) == [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
    assert TRIANGLE.cofaces((0,)) == [(0,), (0, 1), (0, 2), (0, 1, 2)]
    assert SimplicialComplex.from_json_obj(TRIANGLE.to_json_obj()) == TRIANGLE


def test_simple_connectivity():
    assert TRIANGLE.is_simply_connected()
    assert boundary(2).is_simply_connected()
    assert not boundary(1).is_simply_connected()  # a circle
    # checked per component, so disjoint contractible pieces pass
    assert TWO_POINTS.is_simply_connected()


def test_identity_respects_support():
    m = ZXModule(TRIANGLE, {(0,): 1, (0, 1): 2})
    assert check_support(ZXMorphism.identity(m))


def test_non_coface_block_rejected():
    a = ZXModule(EDGE, {(0, 1): 1})
    b = ZXModule(EDGE, {(0,): 1})
    with pytest.raises(SupportError):
        ZXMorphism(a, b, {((0,), (0, 1)): [[1]]})
    f = ZXMorphism(a, b, {((0,), (0, 1)): [[1]]}, check=False)
    assert not check_support(f)


def test_composition_respects_support():
    rng = random.Random(1)
    for _ in range(100):
        a, b, c = (random_module(rng, TRIANGLE) for _ in range(3))
        g = compose(random_morphism(rng, b, c), random_morphism(rng, a, b))
        assert check_support(g)


def test_compose_identity_and_associativity():
    rng = random.Random(2)
    for _ in range(30):
        a, b, c, d = (random_module(rng, TRIANGLE) for _ in range(4))
        f, g, h = random_morphism(rng, a, b), random_morphism(rng, b, c), random_morphism(rng, c, d)
        assert compose(g, ZXMorphism.identity(b)) == g
        assert compose(h, compose(g, f)) == compose(compose(h, g), f)


def test_assembly_is_functorial():
    rng = random.Random(3)
    for _ in range(50):
        a, b, c = (random_module(rng, TRIANGLE) for _ in range(3))
        f, g = random_morphism(rng, a, b), random_morphism(rng, b, c)
        assert assemble(compose(g, f)) == assemble(g) @ assemble(f)


def test_assembly_examples():
    assert assemble(ZXModule(TRIANGLE, {(1, 2): 1})) == 1
    a, b = ZXModule(TRIANGLE, {(0,): 2}), ZXModule(TRIANGLE, {(0, 1): 3})
    assert assemble(a.direct_sum(b)) == assemble(a) + assemble(b)
    with pytest.raises(NotSimplyConnected):
        assemble(ZXModule(boundary(1), {(0,): 1}))


def point_complex(x: SimplicialComplex, sigma, c: ChainComplex, n: int = 0) -> ZXChainComplex:
    """``c`` placed at the single simplex ``sigma``."""
    mods = {r: ZXModule(x, {sigma: c.rank(r)}) for r in c.degrees()}
    ds = {r: ZXMorphism(mods[r], mods[r - 1], {(sigma, sigma): c.d(r)}) for r in c.degrees() if r - 1 in mods}
    return ZXChainComplex(x, n, mods, ds)


def cone_id(degree: int = 0) -> ChainComplex:
    return mapping_cone(ChainMap.identity(ChainComplex.point(degree)))


def test_acyclic_assembly_detected():
    c = point_complex(TRIANGLE, (0, 1), cone_id())
    assert assemble(c).is_acyclic()
    assert not assemble(point_complex(TRIANGLE, (0,), ChainComplex.point())).is_acyclic()


def test_zx_complex_rejects_d_squared_nonzero():
    m = ZXModule(EDGE, {(0,): 1})
    with pytest.raises(Exception):
        ZXChainComplex(
            EDGE, 0, {0: m, 1: m, 2: m},
            {1: ZXMorphism(m, m, {((0,), (0,)): [[1]]}), 2: ZXMorphism(m, m, {((0,), (0,)): [[1]]})},
        )


def test_tensor_over_single_simplex_is_ordinary_tensor():
    rng = random.Random(4)
    x = SimplicialComplex.from_maximal([(0,)])
    for _ in range(10):
        a, b = random_complex(rng, max_rank=2, length=2), random_complex(rng, max_rank=2, length=2)
        t = zx_tensor(point_complex(x, (0,), a), point_complex(x, (0,), b))
        assert t.complex == tensor(a, b)


def test_tensor_over_two_points_drops_cross_terms():
    a = point_complex(TWO_POINTS, (0,), ChainComplex.point()).modules[0]
    b = ZXModule(TWO_POINTS, {(1,): 1})
    both = a.direct_sum(b)
    c = ZXChainComplex(TWO_POINTS, 0, {0: both})
    t = zx_tensor(c, c)
    # of the four products only (0)(x)(0) and (1)(x)(1) meet
    assert t.complex.dims == (2,)
    assert t.kept[0] == (0, 3)


def test_tensor_inclusion_is_chain_map():
    rng = random.Random(5)
    for _ in range(20):
        mods = {r: random_module(rng, TRIANGLE, max_rank=1) for r in range(2)}
        d = random_morphism(rng, mods[1], mods[0], bound=2)
        c = ZXChainComplex(TRIANGLE, 2, mods, {1: d})
        t = zx_tensor(c, c)
        # the ChainMap constructor rejects non-commuting squares
        assert isinstance(t.inclusion, ChainMap)


def test_dual_cells_of_two_sphere():
    dc = dual_cells(boundary(2), 2)
    assert dc.counts() == (4, 6, 4)
    assert dc.euler_characteristic() == 2
    assert dc.top_flag_total() == 24
    assert all(len(dc.cells[(v,)].top_flags) == 6 for v in range(4))
    assert dc.partitions_top_flags()
    assert dc.boundary_matches()


def test_dual_cell_dimensions():
    for n in (2, 3):
        dc = dual_cells(boundary(n), n)
        for s, cell in dc.cells.items():
            assert cell.dimension == n - (len(s) - 1)
    assert dual_cells(boundary(3), 3).counts() == (5, 10, 10, 5)
    assert dual_cells(boundary(3), 3).euler_characteristic() == 0


def test_dual_cells_are_contractible():
    dc = dual_cells(boundary(2), 2)
    for cell in dc.cells.values():
        h = dual_cell_complex(cell).homology_all()
        assert {r: str(g) for r, g in h.items() if not g.is_trivial()} == {0: "Z"}


def test_dual_cells_need_pure_complex():
    mixed = SimplicialComplex.from_maximal([(0, 1, 2), (2, 3)])
    with pytest.raises(ValueError):
        dual_cells(mixed, 2)


def test_cycle_conditions_zero_complex():
    rep = check_cycle_conditions(ZXChainComplex(TRIANGLE, 2, {}))
    assert rep.ok


def test_cycle_conditions_cone_at_top_simplex():
    rep = check_cycle_conditions(point_complex(TRIANGLE, (0, 1, 2), cone_id(-1), n=2))
    assert rep.local_dimension and rep.top_contractible and rep.assembled_acyclic
    assert rep.ok


def test_cycle_conditions_class_at_top_simplex():
    rep = check_cycle_conditions(point_complex(TRIANGLE, (0, 1, 2), ChainComplex.point(), n=2))
    assert not rep.top_contractible
    assert rep.top_failures == ((0, 1, 2),)
    assert not rep.ok


def test_cycle_conditions_local_dimension_violation():
    rep = check_cycle_conditions(point_complex(TRIANGLE, (0, 1, 2), cone_id(1), n=2))
    assert not rep.local_dimension
    assert rep.local_dimension_violations == ((0, 1, 2),)


def test_cycle_conditions_unknown_assembly_off_simply_connected():
    circle = boundary(1)
    rep = check_cycle_conditions(point_complex(circle, (0, 1), cone_id(-1), n=1))
    assert rep.assembled_acyclic is None and not rep.ok


def test_zx_json_round_trip():
    c = point_complex(TRIANGLE, (0, 1), cone_id(), n=2)
    assert ZXChainComplex.from_json_obj(c.to_json_obj()) == c
    rng = random.Random(6)
    f = random_morphism(rng, random_module(rng, TRIANGLE), random_module(rng, TRIANGLE))
    assert ZXMorphism.from_json_obj(f.to_json_obj()) == f
    assert IntMatrix.from_json(IntMatrix([[1]]).to_json()) == IntMatrix([[1]])
