"""Exact integer matrices, Smith normal form and homology of integer complexes.

Everything here works with Python ints, so there is no overflow; the
Smith normal form in particular can blow coefficients up well past 64 bits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


class NotAComplexError(ValueError):
    """Raised when consecutive differentials do not compose to zero."""


class NotAChainMapError(ValueError):
    """Raised when a map does not commute with the differentials."""


class IntMatrix:
    """Immutable dense matrix of unbounded integers.

    >>> m = IntMatrix([[1, 2], [3, 4]])
    >>> (m @ IntMatrix.identity(2)) == m
    True
    >>> m.T.tolist()
    [[1, 3], [2, 4]]
    """

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Iterable[Sequence[int]] = (), rows: int | None = None, cols: int | None = None):
        rows_data = tuple(tuple(int(x) for x in r) for r in data)
        if rows is None:
            rows = len(rows_data)
        if cols is None:
            cols = len(rows_data[0]) if rows_data else 0
        if len(rows_data) != rows:
            if rows_data:
                raise ValueError(f"expected {rows} rows, got {len(rows_data)}")
            rows_data = tuple((0,) * cols for _ in range(rows))
        for r in rows_data:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = rows
        self.cols = cols
        self._data = rows_data
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls((), rows, cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            out[i][i] = v
        return cls(out, rows, cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        return cls([[c[i] for c in columns] for i in range(rows)], rows, len(columns))

    @classmethod
    def block(cls, blocks: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
        """Assemble a block matrix; every block row must share its height."""
        out: list[list[int]] = []
        cols = None
        for brow in blocks:
            height = brow[0].rows
            width = sum(b.cols for b in brow)
            if cols is None:
                cols = width
            elif width != cols:
                raise ValueError("block rows have different widths")
            for b in brow:
                if b.rows != height:
                    raise ValueError("blocks in a row have different heights")
            for i in range(height):
                row: list[int] = []
                for b in brow:
                    row.extend(b._data[i])
                out.append(row)
        return cls(out, len(out), cols or 0)

    @classmethod
    def block_diag(cls, *mats: IntMatrix) -> IntMatrix:
        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        out = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for m in mats:
            for i in range(m.rows):
                out[r0 + i][c0:c0 + m.cols] = m._data[i]
            r0 += m.rows
            c0 += m.cols
        return cls(out, rows, cols)

    # -- access -------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(x for r in self._data for x in r)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
        return IntMatrix([[self._data[i][j] for j in cols] for i in rows], len(rows), len(cols))

    # -- arithmetic ---------------------------------------------------
    @property
    def T(self) -> IntMatrix:
        return IntMatrix(zip(*self._data), self.cols, self.rows) if self.rows else IntMatrix.zeros(self.cols, 0)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if other.cols == 0 or self.rows == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        ocols = list(zip(*other._data)) if other.rows else [()] * other.cols
        return IntMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in ocols] for r in self._data],
            self.rows,
            other.cols,
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} against {self.shape}")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self._data)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return IntMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)], self.rows, self.cols
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-a for a in r] for r in self._data], self.rows, self.cols)

    def __mul__(self, k: int) -> IntMatrix:
        return IntMatrix([[k * a for a in r] for r in self._data], self.rows, self.cols)

    __rmul__ = __mul__

    def kron(self, other: IntMatrix) -> IntMatrix:
        """Kronecker product, row index (i, k) -> i * other.rows + k."""
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        out = []
        for r in self._data:
            for s in other._data:
                out.append([a * b for a in r for b in s])
        return IntMatrix(out, rows, cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r}, rows={self.rows}, cols={self.cols})"

    # -- invariants ---------------------------------------------------
    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(r) for r in self._data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def rank(self) -> int:
        return sum(1 for d in smith_normal_form(self)[1].diagonal_entries() if d != 0)

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(self._data[i][i] for i in range(min(self.rows, self.cols)))

    # -- serialization ------------------------------------------------
    def to_json_obj(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self._data]

    @classmethod
    def from_json_obj(cls, obj, rows: int | None = None, cols: int | None = None) -> IntMatrix:
        if not isinstance(obj, list):
            raise ValueError("matrix must be a JSON array of arrays")
        data = []
        for r in obj:
            if not isinstance(r, list):
                raise ValueError("matrix rows must be JSON arrays")
            data.append([_parse_int(x) for x in r])
        if not data and rows is not None:
            return cls.zeros(rows, cols or 0)
        return cls(data, rows if rows is not None else len(data), cols)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> IntMatrix:
        return cls.from_json_obj(json.loads(text))


def _parse_int(x) -> int:
    if isinstance(x, bool):
        raise ValueError("booleans are not matrix entries")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return int(x.strip())
    raise ValueError(f"not an integer entry: {x!r}")


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + Z/d_1 + ... with d_i | d_{i+1}."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        t = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in t):
            raise ValueError(f"torsion coefficients must be >= 2: {t}")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion coefficients must form a divisibility chain: {t}")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_factors(cls, free_rank: int, factors: Iterable[int]) -> AbelianGroup:
        """Canonical form from arbitrary cyclic orders (units dropped)."""
        return cls(free_rank, _invariant_factors_of(factors))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __add__(self, other: AbelianGroup) -> AbelianGroup:
        return AbelianGroup.from_factors(self.free_rank + other.free_rank, self.torsion + other.torsion)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json_obj(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": [str(d) for d in self.torsion]}


def _invariant_factors_of(factors: Iterable[int]) -> tuple[int, ...]:
    # split into prime powers would need factoring; merge pairwise with gcd/lcm instead
    fs = sorted(abs(int(f)) for f in factors if abs(int(f)) != 1)
    if any(f == 0 for f in fs):
        raise ValueError("zero order in torsion list")
    changed = True
    while changed:
        changed = False
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                a, b = fs[i], fs[j]
                if b % a and a % b:
                    g = gcd(a, b)
                    fs[i], fs[j] = g, a * b // g
                    changed = True
        fs = sorted(f for f in fs if f != 1)
    return tuple(fs)


# -- Smith normal form --------------------------------------------------


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(u, d, v)`` with ``u @ m @ v == d``.

    ``u`` and ``v`` are unimodular and ``d`` is diagonal with non-negative
    entries ``d_1 | d_2 | ...``. The pivot at each stage is the entry of
    smallest nonzero absolute value in the remaining block, ties broken by
    the lowest (row, column) index, so the output is reproducible.
    """
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m._data]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    # v is kept transposed so column operations become row operations
    vt = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        vt[i], vt[j] = vt[j], vt[i]

    def add_row(src, dst, k):
        # row_dst += k * row_src
        rs, rd = a[src], a[dst]
        for c in range(cols):
            if rs[c]:
                rd[c] += k * rs[c]
        us, ud = u[src], u[dst]
        for c in range(rows):
            if us[c]:
                ud[c] += k * us[c]

    def add_col(src, dst, k):
        for r in a:
            if r[src]:
                r[dst] += k * r[src]
        vs, vd = vt[src], vt[dst]
        for c in range(cols):
            if vs[c]:
                vd[c] += k * vs[c]

    t = 0
    while t < rows and t < cols:
        best = None
        for i in range(t, rows):
            ri = a[i]
            for j in range(t, cols):
                x = ri[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            swap_rows(pi, t)
        if pj != t:
            swap_cols(pj, t)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    add_row(t, i, -q)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    add_col(t, j, -q)
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a smaller remainder appeared in row/column t; move it to the pivot
                best = None
                for i in range(t, rows):
                    x = a[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, t)
                for j in range(t + 1, cols):
                    x = a[t][j]
                    if x and abs(x) < best[0]:
                        best = (abs(x), t, j)
                _, pi, pj = best
                if pi != t:
                    swap_rows(pi, t)
                if pj != t:
                    swap_cols(pj, t)
                continue
            # row and column t are clear; enforce divisibility on the rest
            bad = None
            for i in range(t + 1, rows):
                ri = a[i]
                for j in range(t + 1, cols):
                    if ri[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    vmat = IntMatrix(vt, cols, cols).T
    return IntMatrix(u, rows, rows), IntMatrix(a, rows, cols), vmat


def invariant_factors(m: IntMatrix) -> tuple[int, ...]:
    """Nonzero diagonal of the Smith form (units included)."""
    return tuple(d for d in smith_normal_form(m)[1].diagonal_entries() if d)


def unimodular_inverse(u: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular matrix."""
    if not u.is_square():
        raise ValueError("not square")
    n = u.rows
    x = solve_integer(u, IntMatrix.identity(n))
    if x is None:
        raise ValueError("matrix is not unimodular")
    return x


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Columns form a Z-basis of ``{x : m x = 0}`` (a saturated sublattice)."""
    _, d, v = smith_normal_form(m)
    r = sum(1 for x in d.diagonal_entries() if x)
    keep = list(range(r, m.cols))
    return v.submatrix(range(v.rows), keep)


def solve_integer(a: IntMatrix, b: IntMatrix) -> IntMatrix | None:
    """An integer ``x`` with ``a @ x == b``, or ``None`` if none exists."""
    if a.rows != b.rows:
        raise ValueError("row mismatch")
    u, d, v = smith_normal_form(a)
    ub = u @ b
    diag = d.diagonal_entries()
    y = [[0] * b.cols for _ in range(a.cols)]
    for i in range(a.rows):
        di = diag[i] if i < len(diag) else 0
        for j in range(b.cols):
            val = ub[i, j]
            if di == 0:
                if val:
                    return None
            else:
                if val % di:
                    return None
                y[i][j] = val // di
    return v @ IntMatrix(y, a.cols, b.cols)


# -- homology ---------------------------------------------------------


@dataclass(frozen=True)
class HomologyPresentation:
    """Canonical generators for ker(d_out)/im(d_in).

    ``generators`` has one column per canonical generator (torsion ones
    first, in the order of ``orders``; free ones have order 0).
    ``coords`` sends a cycle to its coordinates in those generators.
    """

    kernel: IntMatrix
    change: IntMatrix  # u from the SNF of the relation matrix
    orders: tuple[int, ...]  # 0 for free generators
    rows_kept: tuple[int, ...]
    generators: IntMatrix

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup(sum(1 for o in self.orders if o == 0), tuple(o for o in self.orders if o))

    def coords(self, cycle: Sequence[int]) -> tuple[int, ...]:
        c = solve_integer(self.kernel, IntMatrix.from_columns([tuple(cycle)], self.kernel.rows))
        if c is None:
            raise ValueError("vector is not a cycle")
        y = self.change.apply(c.column(0))
        out = []
        for k, i in enumerate(self.rows_kept):
            o = self.orders[k]
            out.append(y[i] % o if o else y[i])
        return tuple(out)


def homology_presentation(d_out: IntMatrix, d_in: IntMatrix) -> HomologyPresentation:
    if d_out.cols != d_in.rows:
        raise ValueError(f"incompatible shapes {d_out.shape}, {d_in.shape}")
    if not (d_out @ d_in).is_zero():
        raise NotAComplexError("d_out @ d_in != 0")
    n = d_out.cols
    k = kernel_basis(d_out)
    rel = solve_integer(k, d_in)
    assert rel is not None  # im(d_in) lies in the saturated kernel
    u, d, _ = smith_normal_form(rel)
    diag = d.diagonal_entries()
    orders = []
    kept = []
    for i in range(k.cols):
        di = diag[i] if i < len(diag) else 0
        if di != 1:
            kept.append(i)
            orders.append(di)
    # torsion first, then free
    idx = sorted(range(len(kept)), key=lambda t: (orders[t] == 0, t))
    kept = [kept[t] for t in idx]
    orders = [orders[t] for t in idx]
    uinv = unimodular_inverse(u) if u.rows else u
    gens_all = k @ uinv if k.cols else IntMatrix.zeros(n, 0)
    gens = gens_all.submatrix(range(n), kept)
    return HomologyPresentation(k, u, tuple(orders), tuple(kept), gens)


def homology_at(d_out: IntMatrix, d_in: IntMatrix) -> AbelianGroup:
    """``ker(d_out) / im(d_in)`` in invariant-factor form.

    >>> str(homology_at(IntMatrix.zeros(0, 1), IntMatrix([[2]])))
    'Z/2'
    """
    return homology_presentation(d_out, d_in).group


@dataclass(frozen=True)
class InducedMap:
    matrix: IntMatrix  # target generators x source generators
    source: AbelianGroup
    target: AbelianGroup
    target_orders: tuple[int, ...]
    is_iso: bool


def induced_map_on_homology(
    f: IntMatrix,
    source: tuple[IntMatrix, IntMatrix],
    target: tuple[IntMatrix, IntMatrix],
) -> InducedMap:
    """Map induced by ``f`` on homology, in canonical generators.

    ``source`` and ``target`` are the ``(d_out, d_in)`` pairs at the degree
    of interest. ``f`` must send cycles to cycles and boundaries to
    boundaries; this is checked as ``f d_in = d_in' g`` being solvable and
    ``d_out' f`` vanishing on cycles.
    """
    s_out, s_in = source
    t_out, t_in = target
    if f.shape != (t_out.cols, s_out.cols):
        raise ValueError(f"map shape {f.shape} does not match homology data")
    ps = homology_presentation(s_out, s_in)
    pt = homology_presentation(t_out, t_in)
    if not (t_out @ f @ ps.kernel).is_zero():
        raise NotAChainMapError("map does not send cycles to cycles")
    if s_in.cols and solve_integer(pt.kernel, f @ s_in) is None:
        raise NotAChainMapError("map does not send boundaries into cycles")
    if s_in.cols:
        # boundaries must land in boundaries
        image = f @ s_in
        for j in range(image.cols):
            c = pt.coords(image.column(j))
            if any(c):
                raise NotAChainMapError("map does not send boundaries to boundaries")
    cols = [pt.coords(f.apply(ps.generators.column(j))) for j in range(ps.generators.cols)]
    mat = IntMatrix.from_columns(cols, len(pt.orders)) if cols else IntMatrix.zeros(len(pt.orders), 0)
    iso = ps.group == pt.group and _is_surjective(mat, pt.orders)
    return InducedMap(mat, ps.group, pt.group, pt.orders, iso)


def _is_surjective(mat: IntMatrix, orders: Sequence[int]) -> bool:
    # coker of [mat | diag(orders)] must vanish
    rel = IntMatrix.block([[mat, IntMatrix.diagonal(list(orders))]]) if orders else mat
    if rel.rows == 0:
        return True
    diag = smith_normal_form(rel)[1].diagonal_entries()
    return len(diag) == rel.rows and all(d == 1 for d in diag)
