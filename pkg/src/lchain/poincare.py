"""Poincaré complexes over Z and their L-theory classes.

A form is an algebraic Poincaré complex with a single nonzero chain module:
a rank-r quadratic form in dimension 0 is ``C_0 = Z^r`` with ``psi_0`` its
matrix, and ``lambda = psi_0 + psi_0^T`` is the symmetric pairing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chain import ChainComplex, is_quasi_isomorphism, tensor, tensor_layout
from .intmat import IntMatrix, NotAChainMapError, homology_presentation
from .lgroups import LClass, UnsupportedInvariant, Z2
from .qstruct import (
    CycleError,
    StructureCycle,
    direct_sum_structures,
    duality_component,
    is_cycle,
    product_symmetric,
    product_symmetric_quadratic,
    slant,
    symmetrize,
)


@dataclass(frozen=True)
class PoincareComplex:
    complex: ChainComplex
    structure: StructureCycle

    def __post_init__(self):
        self.structure.validate_shape(self.complex)

    @property
    def dimension(self) -> int:
        return self.structure.degree

    @property
    def flavor(self) -> str:
        return self.structure.flavor

    @classmethod
    def zero(cls, flavor: str, n: int) -> PoincareComplex:
        return cls(ChainComplex.zero(), StructureCycle.zero(flavor, n))

    def to_json_obj(self) -> dict:
        return {"complex": self.complex.to_json_obj(), "structure": self.structure.to_json_obj()}

    @classmethod
    def from_json_obj(cls, obj: dict) -> PoincareComplex:
        try:
            c = ChainComplex.from_json_obj(obj["complex"])
            z = StructureCycle.from_json_obj(obj["structure"])
        except KeyError as exc:
            raise ValueError(f"malformed Poincaré complex: missing {exc}") from exc
        return cls(c, z)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> PoincareComplex:
        return cls.from_json_obj(json.loads(text))


# -- forms as complexes --------------------------------------------------


def _row_major(m: IntMatrix) -> tuple[int, ...]:
    return m.entries


def symmetric_form(matrix: IntMatrix | Sequence[Sequence[int]], n: int = 0) -> PoincareComplex:
    """A symmetric form as a ``2k``-dimensional complex concentrated in degree ``k``."""
    m = matrix if isinstance(matrix, IntMatrix) else IntMatrix(matrix)
    if n % 2:
        raise ValueError("forms live in even dimension")
    c = ChainComplex.point(n // 2, m.rows)
    return PoincareComplex(c, StructureCycle("symmetric", n, {0: _row_major(m)}))


def quadratic_form(matrix: IntMatrix | Sequence[Sequence[int]], n: int = 0) -> PoincareComplex:
    """A quadratic form ``psi`` as a ``2k``-dimensional complex concentrated in degree ``k``."""
    m = matrix if isinstance(matrix, IntMatrix) else IntMatrix(matrix)
    if n % 2:
        raise ValueError("forms live in even dimension")
    c = ChainComplex.point(n // 2, m.rows)
    return PoincareComplex(c, StructureCycle("quadratic", n, {0: _row_major(m)}))


# -- duality ---------------------------------------------------------------


def duality_map(p: PoincareComplex):
    """``phi_0`` (or ``(1+T) psi_0``) as a map ``C^{n-*} -> C``."""
    z = duality_component(p.complex, p.structure)
    return slant(p.complex, z, p.dimension, check=True)


def verify_poincare(p: PoincareComplex) -> bool:
    """Whether the structure is a cycle whose duality map is a homology isomorphism."""
    if not is_cycle(p.complex, p.structure):
        return False
    try:
        f = duality_map(p)
    except NotAChainMapError:
        return False
    return is_quasi_isomorphism(f)


def direct_sum(p: PoincareComplex, q: PoincareComplex) -> PoincareComplex:
    if (p.flavor, p.dimension) != (q.flavor, q.dimension):
        raise ValueError("direct sum needs equal flavor and dimension")
    c = p.complex.direct_sum(q.complex)
    return PoincareComplex(c, direct_sum_structures(p.complex, p.structure, q.complex, q.structure))


def product(p: PoincareComplex, q: PoincareComplex, check: bool = True) -> PoincareComplex:
    """Tensor product of Poincaré complexes.

    symmetric x symmetric is symmetric, symmetric x quadratic is quadratic,
    and quadratic x quadratic is ``product(symmetrize(p), q)``.
    """
    kinds = (p.flavor, q.flavor)
    if kinds == ("symmetric", "symmetric"):
        z = product_symmetric(p.complex, p.structure, q.complex, q.structure)
    elif kinds == ("symmetric", "quadratic"):
        z = product_symmetric_quadratic(p.complex, p.structure, q.complex, q.structure)
    elif kinds == ("quadratic", "quadratic"):
        phi = symmetrize(p.complex, p.structure)
        z = product_symmetric_quadratic(p.complex, phi, q.complex, q.structure)
    else:
        raise ValueError("quadratic x symmetric is not provided; put the symmetric factor first")
    out = PoincareComplex(tensor(p.complex, q.complex), z)
    if check and not verify_poincare(out):
        raise CycleError("product is not a Poincaré complex")
    return out


def symmetrize_complex(p: PoincareComplex) -> PoincareComplex:
    if p.flavor == "symmetric":
        return p
    return PoincareComplex(p.complex, symmetrize(p.complex, p.structure))


# -- invariants --------------------------------------------------------------


def _middle_block(c: ChainComplex, z: Sequence[int], n: int) -> IntMatrix:
    """The ``C_k (x) C_k`` block of an element of ``(C (x) C)_n``, ``n = 2k``."""
    k = n // 2
    for b in tensor_layout(c, c, n):
        if b.p == k:
            return IntMatrix(
                [z[b.offset + i * b.right_rank:b.offset + (i + 1) * b.right_rank] for i in range(b.left_rank)],
                b.left_rank,
                b.right_rank,
            )
    return IntMatrix.zeros(c.rank(k), c.rank(k))


def middle_pairing(p: PoincareComplex) -> IntMatrix:
    """Gram matrix of ``(u, v) -> <v, phi_0(u)>`` on a basis of ``H^k(C)/torsion``, ``n = 2k``."""
    n = p.dimension
    if n % 2:
        raise ValueError("the middle pairing needs even dimension")
    k = n // 2
    c = p.complex
    z = duality_component(c, p.structure)
    block = _middle_block(c, z, n)
    # cocycles: u d_{k+1} = 0; coboundaries: image of d_k^T
    pres = homology_presentation(c.d(k + 1).T, c.d(k).T)
    free = [j for j, o in enumerate(pres.orders) if o == 0]
    u = pres.generators.submatrix(range(pres.generators.rows), free)
    return u.T @ block @ u


def signature(m: IntMatrix) -> int:
    """Signature of a nonsingular symmetric integer matrix, by exact symmetric elimination.

    >>> signature(IntMatrix([[0, 1], [1, 0]]))
    0
    """
    if m != m.T:
        raise ValueError("signature needs a symmetric matrix")
    a = [[Fraction(x) for x in m.row(i)] for i in range(m.rows)]
    sig = 0
    while a:
        size = len(a)
        piv = next((i for i in range(size) if a[i][i] != 0), None)
        if piv is None:
            hit = next(((i, j) for i in range(size) for j in range(size) if a[i][j] != 0), None)
            if hit is None:
                raise ValueError("degenerate form: zero eigenvalue")
            i, j = hit
            # e_i -> e_i + e_j makes the (i, i) entry 2 a_ij
            for t in range(size):
                a[i][t] += a[j][t]
            for t in range(size):
                a[t][i] += a[t][j]
            piv = i
        p = a[piv][piv]
        sig += 1 if p > 0 else -1
        rest = [t for t in range(size) if t != piv]
        a = [[a[s][t] - a[s][piv] * a[piv][t] / p for t in rest] for s in rest]
    return sig


def arf(psi: IntMatrix) -> Z2:
    """Arf invariant of ``q(u) = u^T psi u mod 2`` with pairing ``psi - psi^T`` mod 2.

    >>> arf(IntMatrix([[1, 1], [0, 1]]))
    Z2(bit=1)
    """
    r = psi.rows

    def lam(u, v):
        return sum(u[i] * (psi[i, j] - psi[j, i]) * v[j] for i in range(r) for j in range(r)) % 2

    def q(u):
        return sum(u[i] * psi[i, j] * u[j] for i in range(r) for j in range(r)) % 2

    basis = [[1 if i == j else 0 for i in range(r)] for j in range(r)]
    for u in basis:
        for v in basis:
            w = [(x + y) % 2 for x, y in zip(u, v)]
            if (q(w) - q(u) - q(v) - lam(u, v)) % 2:
                raise ArithmeticError("q is not a quadratic refinement of the pairing")
    total = 0
    vecs = basis
    while vecs:
        e = vecs[0]
        f_idx = next((i for i in range(1, len(vecs)) if lam(e, vecs[i])), None)
        if f_idx is None:
            raise ValueError("pairing is singular mod 2")
        f = vecs[f_idx]
        total += q(e) * q(f)
        rest = []
        for i, v in enumerate(vecs):
            if i in (0, f_idx):
                continue
            a, b = lam(v, f), lam(v, e)
            rest.append([(x + a * y + b * z) % 2 for x, y, z in zip(v, e, f)])
        vecs = rest
    return Z2(total % 2)


def l_class(p: PoincareComplex) -> LClass:
    """The class of ``p`` in ``L_n(Z)`` or ``L^n(Z)``."""
    if not verify_poincare(p):
        raise ValueError("not a Poincaré complex")
    n, res = p.dimension, p.dimension % 4
    if p.flavor == "symmetric":
        if res == 0:
            return LClass("symmetric", n, signature(middle_pairing(p)))
        if res == 1:
            raise UnsupportedInvariant("the L^1(Z) = Z/2 invariant is not computed")
        return LClass.zero("symmetric", n)
    if res == 0:
        s = signature(middle_pairing(p))
        if s % 8:
            raise ArithmeticError(f"signature {s} of a quadratic complex is not divisible by 8")
        return LClass("quadratic", n, s // 8)
    if res == 2:
        k = n // 2
        c = p.complex
        if c.is_zero():
            return LClass.zero("quadratic", n)
        if list(c.degrees()) != [k]:
            raise UnsupportedInvariant("the Arf invariant is computed only for complexes concentrated in the middle degree")
        psi = _middle_block(c, p.structure.component(c, 0), n)
        return LClass("quadratic", n, arf(psi))
    return LClass.zero("quadratic", n)
