"""Poincaré complexes: duality, sums, products and L-classes."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lchain import fixtures
from lchain.chain import ChainComplex, random_unimodular
from lchain.intmat import IntMatrix
from lchain.lgroups import LClass, UnsupportedInvariant, Z2
from lchain.oracles import brute_force_arf, descartes_signature
from lchain.poincare import (
    PoincareComplex,
    arf,
    direct_sum,
    l_class,
    middle_pairing,
    product,
    quadratic_form,
    signature,
    symmetric_form,
    symmetrize_complex,
    verify_poincare,
)
from lchain.qstruct import StructureCycle


def congruent(m: IntMatrix, rng: random.Random) -> IntMatrix:
    p = random_unimodular(rng, m.rows)
    return p.T @ m @ p


def test_verify_point_fixtures():
    assert verify_poincare(fixtures.point(1))
    assert not verify_poincare(fixtures.point(2))
    assert verify_poincare(fixtures.hyperbolic())


def test_verify_rejects_non_cycle():
    # phi_0 must be T-symmetric; an asymmetric matrix is not a cycle
    p = symmetric_form([[1, 1], [0, 1]])
    assert not verify_poincare(p)


def test_direct_sum_with_zero():
    p = fixtures.e8()
    s = direct_sum(p, PoincareComplex.zero("quadratic", 0))
    assert s == p


def test_direct_sum_additivity_on_forms():
    rng = random.Random(1)
    forms = [fixtures.e8(), fixtures.hyperbolic(), quadratic_form(-fixtures.e8_quadratic_matrix())]
    for a, b in itertools.product(forms, repeat=2):
        s = direct_sum(a, b)
        assert verify_poincare(s)
        assert l_class(s) == l_class(a) + l_class(b)
    for _ in range(10):
        a = symmetric_form(congruent(IntMatrix.diagonal([rng.choice((1, -1)) for _ in range(3)]), rng))
        b = symmetric_form(congruent(IntMatrix.diagonal([rng.choice((1, -1)) for _ in range(2)]), rng))
        assert l_class(direct_sum(a, b)) == l_class(a) + l_class(b)


def test_e8_plus_minus_e8():
    s = direct_sum(fixtures.e8(), quadratic_form(-fixtures.e8_quadratic_matrix()))
    assert l_class(s).value == 0


def test_unit_product():
    assert l_class(product(fixtures.point(), fixtures.point())).value == 1


def test_signature_multiplicative():
    rng = random.Random(2)
    for _ in range(20):
        a = congruent(IntMatrix.diagonal([rng.choice((1, -1)) for _ in range(rng.randint(1, 4))]), rng)
        b = congruent(IntMatrix.diagonal([rng.choice((1, -1)) for _ in range(rng.randint(1, 4))]), rng)
        got = l_class(product(symmetric_form(a), symmetric_form(b))).value
        assert got == descartes_signature(a.tolist()) * descartes_signature(b.tolist())


def test_quadratic_product_of_generators_is_eight():
    qq = product(fixtures.e8(), fixtures.e8())
    assert l_class(qq) == LClass("quadratic", 0, 8)


def test_symmetric_times_arf():
    assert l_class(product(fixtures.point(), fixtures.arf_form())).value == Z2(1)
    two = symmetric_form([[1, 0], [0, 1]])
    assert l_class(product(two, fixtures.arf_form())).value == Z2(0)


def test_product_rejects_quadratic_times_symmetric():
    with pytest.raises(ValueError):
        product(fixtures.e8(), fixtures.point())


def test_l_class_examples():
    assert l_class(fixtures.e8()).value == 1
    assert l_class(fixtures.hyperbolic()).value == 0
    assert l_class(fixtures.arf_form()).value == Z2(1)
    assert l_class(fixtures.hyperbolic(2)).value == Z2(0)


def test_l_class_trivial_and_unsupported():
    odd = PoincareComplex(ChainComplex.zero(), StructureCycle.zero("quadratic", 3))
    assert l_class(odd) == LClass.zero("quadratic", 3)
    with pytest.raises(UnsupportedInvariant):
        l_class(PoincareComplex(ChainComplex.zero(), StructureCycle.zero("symmetric", 1)))
    with pytest.raises(ValueError):
        l_class(fixtures.point(2))


def test_middle_pairing_examples():
    assert middle_pairing(fixtures.point()).tolist() == [[1]]
    g = middle_pairing(fixtures.e8())
    assert signature(g) == 8 and abs(g.det()) == 1


def test_middle_pairing_symmetry():
    rng = random.Random(3)
    h = IntMatrix([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
    for _ in range(25):
        m = congruent(IntMatrix.diagonal([rng.choice((1, -1)) for _ in range(rng.randint(1, 4))]), rng)
        g = middle_pairing(symmetric_form(m))
        assert g == g.T
        q = quadratic_form(congruent(h, rng), 2)
        assert verify_poincare(q)
        g2 = middle_pairing(symmetrize_complex(q))
        assert g2 == -g2.T


def test_signature_invariant_under_congruence():
    rng = random.Random(4)
    e8 = fixtures.e8_quadratic_matrix()
    for _ in range(10):
        p = quadratic_form(congruent(e8, rng))
        assert l_class(p).value == 1


def test_symmetrize_multiplies_by_eight():
    for p, k in ((fixtures.e8(), 1), (fixtures.hyperbolic(), 0), (direct_sum(fixtures.e8(), fixtures.e8()), 2)):
        assert l_class(symmetrize_complex(p)).value == 8 * k


def test_arf_invariant_under_basis_change():
    rng = random.Random(5)
    for psi, expected in ((fixtures.ARF_PSI, 1), (fixtures.HYPERBOLIC_PSI, 0)):
        for _ in range(10):
            p = quadratic_form(congruent(psi, rng), 2)
            assert l_class(p).value == Z2(expected)


def test_arf_requires_middle_concentration():
    c = ChainComplex.point(0, 1).direct_sum(ChainComplex.point(2, 1))
    z = StructureCycle("quadratic", 2, {0: (0,) * 2})
    with pytest.raises((UnsupportedInvariant, ValueError)):
        l_class(PoincareComplex(c, z))


@st.composite
def nonsingular_symmetric(draw):
    n = draw(st.integers(1, 5))
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = draw(st.integers(-4, 4))
    mat = IntMatrix(m)
    if mat.det() == 0:
        mat = mat + IntMatrix.identity(n) * 17
    return mat


@settings(max_examples=150, deadline=None)
@given(nonsingular_symmetric())
def test_signature_matches_descartes_oracle(m):
    if m.det() == 0:
        return
    assert signature(m) == descartes_signature(m.tolist())


def test_signature_rejects_degenerate():
    with pytest.raises(ValueError):
        signature(IntMatrix([[1, 0], [0, 0]]))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3).flatmap(lambda g: st.lists(st.integers(0, 1), min_size=4 * g * g, max_size=4 * g * g)))
def test_arf_matches_brute_force(bits):
    r = int(len(bits) ** 0.5)
    psi = IntMatrix([bits[i * r:(i + 1) * r] for i in range(r)], r, r)
    lam = [[(psi[i, j] + psi[j, i]) % 2 for j in range(r)] for i in range(r)]
    if _rank_mod2(lam) < r:
        return
    assert int(arf(psi)) == brute_force_arf(psi.tolist())


def _rank_mod2(rows):
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def test_poincare_json_round_trip():
    p = fixtures.arf_form()
    assert PoincareComplex.from_json(p.to_json()) == p
