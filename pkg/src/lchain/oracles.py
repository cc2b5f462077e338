"""Independent reference computations used to cross-check the main code paths.

None of these share code with ``intmat`` or ``poincare``; they are slower
and simpler on purpose.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import Sequence

import sympy
from sympy.matrices.normalforms import invariant_factors as _sympy_invariant_factors

Rows = Sequence[Sequence[int]]


def _det(rows: Rows) -> int:
    n = len(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            det = -det
        det *= a[i][i]
        for r in range(i + 1, n):
            f = a[r][i] / a[i][i]
            if f:
                for c in range(i, n):
                    a[r][c] -= f * a[i][c]
    return int(det)


def minors_invariant_factors(rows: Rows, n_rows: int, n_cols: int) -> list[int]:
    """Invariant factors ``d_k = D_k / D_{k-1}``, ``D_k`` the gcd of all k x k minors.

    >>> minors_invariant_factors([[2, 0], [0, 3]], 2, 2)
    [1, 6]
    """
    out = []
    prev = 1
    for k in range(1, min(n_rows, n_cols) + 1):
        g = 0
        for rs in itertools.combinations(range(n_rows), k):
            for cs in itertools.combinations(range(n_cols), k):
                g = gcd(g, _det([[rows[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def sympy_homology(dims: Sequence[int], min_degree: int, ds: dict[int, Rows]) -> dict[int, tuple[int, tuple[int, ...]]]:
    """``{r: (free_rank, torsion)}`` from sympy ranks and invariant factors."""
    out = {}

    def mat(r):
        m = ds.get(r)
        rows = dims[r - 1 - min_degree] if 0 <= r - 1 - min_degree < len(dims) else 0
        cols = dims[r - min_degree] if 0 <= r - min_degree < len(dims) else 0
        if m is None or rows == 0 or cols == 0:
            return sympy.zeros(rows, cols)
        return sympy.Matrix(m)

    for i, n in enumerate(dims):
        r = min_degree + i
        d_out, d_in = mat(r), mat(r + 1)
        rank_out = d_out.rank() if d_out.rows and d_out.cols else 0
        rank_in = d_in.rank() if d_in.rows and d_in.cols else 0
        tors: tuple[int, ...] = ()
        if d_in.rows and d_in.cols:
            tors = tuple(int(abs(x)) for x in _sympy_invariant_factors(d_in, domain=sympy.ZZ) if abs(x) > 1)
        out[r] = (n - rank_out - rank_in, tuple(sorted(tors)))
    return out


def complex_homology_oracle(c) -> dict[int, tuple[int, tuple[int, ...]]]:
    """``sympy_homology`` applied to a ``ChainComplex``, dropping trivial groups."""
    if c.is_zero():
        return {}
    ds = {r: m.tolist() for r, m in c.differentials.items()}
    h = sympy_homology(list(c.dims), c.min_degree, ds)
    return {r: v for r, v in h.items() if v != (0, ())}


def descartes_signature(rows: Rows) -> int:
    """Signature of a symmetric matrix from its exact characteristic polynomial.

    All roots are real, so Descartes' rule of signs counts positive roots
    exactly; negative roots are counted on ``p(-x)``.
    """
    m = sympy.Matrix(rows)
    coeffs = [int(c) for c in m.charpoly().all_coeffs()]  # highest degree first

    def changes(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    deg = len(coeffs) - 1
    neg = [c * (-1) ** ((deg - i) % 2) for i, c in enumerate(coeffs)]
    return changes(coeffs) - changes(neg)


def brute_force_arf(psi: Rows) -> int:
    """Arf invariant as the majority value of ``q(u) = u^T psi u mod 2``."""
    r = len(psi)
    ones = 0
    for u in itertools.product((0, 1), repeat=r):
        q = sum(u[i] * psi[i][j] * u[j] for i in range(r) for j in range(r)) % 2
        ones += q
    total = 2 ** r
    if 2 * ones == total:
        raise ValueError("no majority: the form is singular")
    return 1 if 2 * ones > total else 0


def point_quadratic_qgroups(n_max: int) -> list[tuple[int, tuple[int, ...]]]:
    """``Q_n`` of the point, built by hand.

    Over the point ``C (x) C = Z`` in degree 0 with ``T = 1``, so the quadratic
    hypercomplex is ``Z`` in each degree ``s >= 0`` with ``d_s = 1 + (-1)^s``.
    """
    out = []
    for n in range(n_max + 1):
        d_out = 0 if n == 0 else 1 + (-1) ** n
        d_in = 1 + (-1) ** (n + 1)
        if d_out != 0:
            out.append((0, ()))
        elif d_in == 0:
            out.append((1, ()))
        else:
            f = minors_invariant_factors([[d_in]], 1, 1)
            out.append((0, tuple(x for x in f if x > 1)))
    return out
