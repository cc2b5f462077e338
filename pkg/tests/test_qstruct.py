"""Q-groups, structure cycles, symmetrization, slant and the W diagonal."""

import random

import pytest

from lchain.chain import ChainComplex, ChainMap, is_quasi_isomorphism, mapping_cone, random_complex, tensor
from lchain.intmat import AbelianGroup
from lchain.qstruct import (
    FLAVORS,
    StructureCycle,
    check_w_diagonal,
    default_truncation,
    direct_sum_structures,
    hyper_differential,
    is_cycle,
    product_symmetric,
    product_symmetric_quadratic,
    q_group,
    random_cycle,
    same_class,
    slant,
    square_rank,
    symmetrize,
    t_action,
)

POINT = ChainComplex.point()


def small_complex(rng: random.Random) -> ChainComplex:
    return random_complex(rng, max_rank=2, length=3, min_degree=rng.randint(-1, 1))


def test_t_action_point_is_identity():
    assert t_action(POINT, (5,), 0) == (5,)


def test_t_action_sign_in_degree_one():
    c = ChainComplex.point(1, 2)
    # basis of C_1 (x) C_1 is x_i (x) x_j, row-major
    z = (0, 1, 0, 0)  # x_0 (x) x_1
    assert t_action(c, z, 2) == (0, 0, -1, 0)


def test_t_action_involution_and_commutes_with_d():
    rng = random.Random(1)
    from lchain.qstruct import _square_differential

    for _ in range(100):
        c = small_complex(rng)
        degs = [m for m in range(-2, 8) if square_rank(c, m)]
        if not degs:
            continue
        m = rng.choice(degs)
        z = tuple(rng.randint(-3, 3) for _ in range(square_rank(c, m)))
        assert t_action(c, t_action(c, z, m), m) == z
        d = _square_differential(c, m)
        assert d.apply(t_action(c, z, m)) == t_action(c, d.apply(z), m - 1)


def test_point_q_groups():
    assert [str(q_group(POINT, n)) for n in range(4)] == ["Z", "Z/2", "0", "Z/2"]
    assert str(q_group(POINT, 0, "symmetric")) == "Z"
    assert all(q_group(POINT, n, "symmetric").is_trivial() for n in range(1, 6))


def test_hyperdifferential_squares_to_zero():
    rng = random.Random(2)
    for _ in range(100):
        c = small_complex(rng)
        n = rng.randint(-1, 4)
        flavor = rng.choice(FLAVORS)
        s = default_truncation(c, n, flavor)
        assert (hyper_differential(c, n, flavor, s) @ hyper_differential(c, n + 1, flavor, s)).is_zero()


def test_truncation_stability():
    rng = random.Random(3)
    for _ in range(25):
        c = small_complex(rng)
        n = rng.randint(-1, 3)
        for flavor in FLAVORS:
            s = default_truncation(c, n, flavor)
            assert s >= n + 1
            assert q_group(c, n, flavor) == q_group(c, n, flavor, s_max=s + 2)


def test_q_groups_homotopy_invariant():
    rng = random.Random(4)
    for _ in range(5):
        c = random_complex(rng, max_rank=2, length=2)
        padded = c.direct_sum(mapping_cone(ChainMap.identity(ChainComplex.point(0))))
        for flavor in FLAVORS:
            for n in range(3):
                assert q_group(c, n, flavor) == q_group(padded, n, flavor)


def test_symmetrize_point_generator_doubles():
    psi = StructureCycle("quadratic", 0, {0: (1,)})
    phi = symmetrize(POINT, psi)
    assert phi.components == {0: (2,)}
    gen = StructureCycle("symmetric", 0, {0: (1,)})
    assert same_class(POINT, phi, gen.scaled(2))
    assert not same_class(POINT, phi, gen)


def test_symmetrize_zero():
    assert symmetrize(POINT, StructureCycle.zero("quadratic", 0)).is_zero()


def test_symmetrize_commutes_with_direct_sum():
    rng = random.Random(5)
    for t in range(20):
        a, b = small_complex(rng), small_complex(rng)
        n = rng.randint(0, 3)
        x, y = random_cycle(a, n, "quadratic", seed=t), random_cycle(b, n, "quadratic", seed=t + 100)
        s = a.direct_sum(b)
        lhs = symmetrize(s, direct_sum_structures(a, x, b, y))
        rhs = direct_sum_structures(a, symmetrize(a, x), b, symmetrize(b, y))
        assert lhs == rhs


def test_slant_examples():
    f = slant(POINT, (1,), 0, check=True)
    assert f[0].tolist() == [[1]]
    c = random_complex(random.Random(6))
    z = (0,) * square_rank(c, 2)
    assert all(m.is_zero() for m in slant(c, z, 2).components.values())


def test_slant_is_chain_map_on_random_cycles():
    rng = random.Random(7)
    done = 0
    while done < 50:
        c = small_complex(rng)
        n = rng.randint(-1, 4)
        flavor = rng.choice(FLAVORS)
        z = random_cycle(c, n, flavor, seed=done)
        comp = z.component(c, 0) if flavor == "symmetric" else symmetrize(c, z).component(c, 0)
        slant(c, comp, n, check=True)
        done += 1


def test_random_cycle_contract():
    for seed in range(5):
        z = random_cycle(POINT, 0, "quadratic", seed=seed)
        assert set(z.components) <= {0}
    rng = random.Random(8)
    c = small_complex(rng)
    for flavor in FLAVORS:
        a = random_cycle(c, 2, flavor, seed=42)
        assert a == random_cycle(c, 2, flavor, seed=42)
        assert is_cycle(c, a)


def test_w_diagonal():
    assert check_w_diagonal(8)


def test_products_are_cycles():
    rng = random.Random(9)
    for t in range(15):
        c, d = small_complex(rng), small_complex(rng)
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        phi = random_cycle(c, n, "symmetric", seed=t)
        phi2 = random_cycle(d, m, "symmetric", seed=t + 1)
        psi = random_cycle(d, m, "quadratic", seed=t + 2)
        e = tensor(c, d)
        assert is_cycle(e, product_symmetric(c, phi, d, phi2))
        assert is_cycle(e, product_symmetric_quadratic(c, phi, d, psi))


def test_structure_json_round_trip():
    z = random_cycle(random_complex(random.Random(10)), 2, "quadratic", seed=1)
    assert StructureCycle.from_json_obj(z.to_json_obj()) == z


def test_structure_rejects_bad_flavor():
    with pytest.raises(ValueError):
        StructureCycle("hermitian", 0, {})
