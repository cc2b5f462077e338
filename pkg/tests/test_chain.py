"""Chain complexes: homology, cones, tensor products, duals and cone splitting."""

import random

import pytest

from lchain.chain import (
    ChainComplex,
    ChainMap,
    cone_inclusion,
    dual,
    find_chain_retraction,
    inclusion,
    is_quasi_isomorphism,
    mapping_cone,
    random_complex,
    random_split_system,
    splitting_check,
    tensor,
)
from lchain.intmat import AbelianGroup, IntMatrix, NotAChainMapError, NotAComplexError
from lchain.oracles import complex_homology_oracle

Z2 = AbelianGroup(0, (2,))
Z = AbelianGroup(1, ())


def times(k: int) -> ChainComplex:
    """``Z --k--> Z`` in degrees 1, 0."""
    return ChainComplex.from_differentials(0, [1, 1], [[[k]]])


def ours(c: ChainComplex) -> dict:
    return {r: (g.free_rank, g.torsion) for r, g in c.homology_all().items() if not g.is_trivial()}


def test_point_homology():
    assert ChainComplex.point().homology(0) == Z


def test_times_two_homology():
    c = times(2)
    assert c.homology(0) == Z2
    assert c.homology(1).is_trivial()


def test_rejects_d_squared_nonzero():
    with pytest.raises(NotAComplexError):
        ChainComplex(0, [1, 1, 1], {1: IntMatrix([[1]]), 2: IntMatrix([[1]])})


def test_rejects_bad_shape():
    with pytest.raises(ValueError):
        ChainComplex(0, [1, 2], {1: IntMatrix([[1]])})


def test_cone_of_identity_is_acyclic():
    c = times(3)
    assert mapping_cone(ChainMap.identity(c)).is_acyclic()


def test_cone_of_times_two_on_point():
    p = ChainComplex.point()
    f = ChainMap(p, p, {0: IntMatrix([[2]])})
    assert mapping_cone(f).homology(0) == Z2


def test_cone_of_zero_map():
    rng = random.Random(4)
    for _ in range(10):
        a, b = random_complex(rng), random_complex(rng)
        cone = mapping_cone(ChainMap.zero(a, b))
        for r in range(-1, 6):
            assert cone.homology(r) == b.homology(r) + a.homology(r - 1)


def test_cone_euler_characteristic():
    rng = random.Random(5)
    for _ in range(20):
        f, _ = random_split_system(rng)
        cone = mapping_cone(f)
        assert cone.euler_characteristic() == f.target.euler_characteristic() - f.source.euler_characteristic()


def test_chain_map_rejects_non_commuting():
    c = times(2)
    with pytest.raises(NotAChainMapError):
        ChainMap(c, c, {0: IntMatrix([[1]])})


def test_tensor_with_point():
    rng = random.Random(6)
    for _ in range(10):
        c = random_complex(rng)
        t = tensor(ChainComplex.point(), c)
        assert t == c


def test_kunneth_fixture_is_acyclic():
    # Tor(Z/2, Z/3) = 0 and Z/2 (x) Z/3 = 0
    t = tensor(times(2), times(3))
    assert t.dims == (1, 2, 1)
    assert t.is_acyclic()
    assert complex_homology_oracle(t) == {}


def test_tensor_torsion_fixture():
    t = tensor(times(2), times(2))
    assert ours(t) == {0: (0, (2,)), 1: (0, (2,))}
    assert ours(t) == complex_homology_oracle(t)


def test_tensor_d_squared_on_random_pairs():
    rng = random.Random(7)
    for _ in range(100):
        a = random_complex(rng, max_rank=3, min_degree=rng.randint(-1, 1))
        b = random_complex(rng, max_rank=3, min_degree=rng.randint(-1, 1))
        tensor(a, b)  # the constructor checks d^2 = 0


def test_tensor_associative_on_homology():
    rng = random.Random(8)
    for _ in range(10):
        a, b, c = (random_complex(rng, max_rank=2, length=2) for _ in range(3))
        left = tensor(tensor(a, b), c)
        right = tensor(a, tensor(b, c))
        assert left.homology_all() == right.homology_all()


def test_homology_matches_sympy_oracle():
    rng = random.Random(9)
    for _ in range(30):
        c = random_complex(rng, max_rank=4, length=4)
        assert ours(c) == complex_homology_oracle(c)


def test_dual_of_point():
    assert dual(ChainComplex.point(), 0) == ChainComplex.point()


def test_dual_of_times_two():
    d = dual(times(2), 1)
    assert d.dims == (1, 1) and d.min_degree == 0
    assert d.homology(0) == Z2
    assert d.homology(1).is_trivial()


def test_dual_d_squared_and_involution():
    rng = random.Random(10)
    for _ in range(100):
        c = random_complex(rng, max_rank=3, min_degree=rng.randint(-2, 2))
        n = rng.randint(-2, 4)
        dd = dual(dual(c, n), n)
        assert dd.homology_all() == c.homology_all()


def test_double_dual_is_sign_twisted():
    # the double dual carries (-1)^(n+1) d: equal to C for odd n, isomorphic for even n
    c = times(5)
    assert dual(dual(c, 1), 1) == c
    assert dual(dual(c, 2), 2) == c.negate_differential()


def test_quasi_isomorphism_examples():
    c = times(2)
    assert is_quasi_isomorphism(ChainMap.identity(c))
    p = ChainComplex.point()
    assert not is_quasi_isomorphism(ChainMap(p, p, {0: IntMatrix([[2]])}))


def test_inclusion_into_contractible_complement():
    c = times(3)
    k = mapping_cone(ChainMap.identity(times(4)))
    f = inclusion(c, k, 0)
    assert is_quasi_isomorphism(f)
    assert is_quasi_isomorphism(cone_inclusion(ChainMap.zero(ChainComplex.zero(), c)))


def test_splitting_identity():
    c = times(2)
    rep = splitting_check(ChainMap.identity(c), ChainMap.identity(c))
    assert rep.holds
    assert rep.cone_f == rep.cone_g == rep.cone_gf == {}


def test_splitting_direct_summands():
    a, k1, k2 = times(2), times(3), ChainComplex.point(1)
    b = a.direct_sum(k1)
    f = inclusion(a, k1, 0)
    g = inclusion(b, k2, 0)
    rep = splitting_check(f, g)
    assert rep.holds
    assert rep.cone_f == {0: AbelianGroup(0, (3,))}
    assert rep.cone_g == {1: Z}
    assert rep.cone_gf == {0: AbelianGroup(0, (3,)), 1: Z}


def test_splitting_random_systems():
    rng = random.Random(0)
    for _ in range(50):
        f, g = random_split_system(rng, max_rank=4, max_entry=3)
        assert splitting_check(f, g).holds


def test_retraction_needs_all_degrees_at_once():
    # Z in degree 0 into Z --1--> Z: split in each degree, not as a chain map
    b = ChainComplex.point()
    c = times(1)
    f = ChainMap(b, c, {0: IntMatrix([[1]])})
    assert find_chain_retraction(f) is None
    assert not splitting_check(f, ChainMap.identity(c)).holds


def test_non_split_injection_reported():
    p = ChainComplex.point()
    f = ChainMap(p, p, {0: IntMatrix([[2]])})
    rep = splitting_check(f, ChainMap.identity(p))
    assert not rep.f_split and not rep.holds


def test_json_round_trip():
    rng = random.Random(11)
    for _ in range(10):
        f, g = random_split_system(rng)
        assert ChainComplex.from_json_obj(f.target.to_json_obj()) == f.target
        assert ChainMap.from_json_obj(g.to_json_obj()) == g
