"""Quadratic and symmetric structures on a chain complex.

``W`` is the free ``Z[Z/2]`` resolution of ``Z`` with generators ``e_s`` and
``d e_s = (1 + (-1)^s T) e_{s-1}``, so ``d_1 = 1 - T`` and ``d_2 = 1 + T``.
Write ``N_s = 1 + (-1)^s T``.

A quadratic n-chain is a family ``psi_s`` in ``(C (x) C)_{n-s}``; the
differential of ``W (x)_{Z[Z/2]} (C (x) C)`` is::

    (d psi)_s = (-1)^s d psi_s + N_{s+1} psi_{s+1}

A symmetric n-chain is a family ``phi_s`` in ``(C (x) C)_{n+s}`` (the value on
``e_s`` of a map ``W -> C (x) C``) with differential::

    (d phi)_s = d phi_s - (-1)^n N_s phi_{s-1}

``T`` acts on ``C_p (x) C_q`` by ``x (x) y -> (-1)^(pq) y (x) x``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal, Mapping, Sequence

from .chain import ChainComplex, ChainMap, dual, tensor_differential, tensor_layout, tensor_map_matrix, tensor_rank
from .intmat import AbelianGroup, IntMatrix, homology_at, kernel_basis, solve_integer

Flavor = Literal["quadratic", "symmetric"]
FLAVORS = ("quadratic", "symmetric")

Vector = tuple[int, ...]


class CycleError(ValueError):
    """A structure that should be a cycle is not."""


def _check_flavor(flavor: str) -> None:
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be 'quadratic' or 'symmetric', got {flavor!r}")


# -- the T action on C (x) C -----------------------------------------------


@lru_cache(maxsize=256)
def _t_permutation(c: ChainComplex, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``T e_k = sign[k] * e_{perm[k]}`` on the basis of ``(C (x) C)_m``."""
    layout = tensor_layout(c, c, m)
    where = {(b.p, b.q): b for b in layout}
    n = sum(b.size for b in layout)
    perm = [0] * n
    sign = [1] * n
    for b in layout:
        other = where[(b.q, b.p)]
        sg = -1 if (b.p * b.q) % 2 else 1
        for i in range(b.left_rank):
            for j in range(b.right_rank):
                k = b.offset + i * b.right_rank + j
                perm[k] = other.offset + j * other.right_rank + i
                sign[k] = sg
    return tuple(perm), tuple(sign)


def t_action(c: ChainComplex, z: Sequence[int], m: int) -> Vector:
    """Apply ``T`` to an element of ``(C (x) C)_m`` given by coordinates."""
    perm, sign = _t_permutation(c, m)
    if len(z) != len(perm):
        raise ValueError(f"element has length {len(z)}, (C (x) C)_{m} has rank {len(perm)}")
    out = [0] * len(z)
    for k, x in enumerate(z):
        if x:
            out[perm[k]] += sign[k] * x
    return tuple(out)


def _t_matrix(c: ChainComplex, m: int) -> IntMatrix:
    perm, sign = _t_permutation(c, m)
    n = len(perm)
    out = [[0] * n for _ in range(n)]
    for k in range(n):
        out[perm[k]][k] = sign[k]
    return IntMatrix(out, n, n)


def _norm_matrix(c: ChainComplex, m: int, s: int) -> IntMatrix:
    """``N_s = 1 + (-1)^s T`` on ``(C (x) C)_m``."""
    perm, sign = _t_permutation(c, m)
    n = len(perm)
    eps = 1 if s % 2 == 0 else -1
    out = [[0] * n for _ in range(n)]
    for k in range(n):
        out[k][k] += 1
        out[perm[k]][k] += eps * sign[k]
    return IntMatrix(out, n, n)


def _norm_apply(c: ChainComplex, z: Sequence[int], m: int, s: int) -> list[int]:
    t = t_action(c, z, m)
    return [a + b for a, b in zip(z, t)] if s % 2 == 0 else [a - b for a, b in zip(z, t)]


@lru_cache(maxsize=256)
def _square_differential(c: ChainComplex, m: int) -> IntMatrix:
    return tensor_differential(c, c, m)


def square_rank(c: ChainComplex, m: int) -> int:
    return tensor_rank(c, c, m)


# -- the hypercomplexes --------------------------------------------------------


def default_truncation(c: ChainComplex, n: int, flavor: str) -> int:
    """A truncation of ``W`` that leaves the hyperhomology in degree ``n`` unchanged.

    Components beyond it vanish in degrees ``n-1, n, n+1`` because ``C`` is
    bounded. Never less than ``n + 1``.
    """
    _check_flavor(flavor)
    if c.is_zero():
        return 0
    if flavor == "quadratic":
        need = n + 1 - 2 * c.min_degree
    else:
        need = 2 * c.max_degree - n + 1
    return max(0, n + 1, need)


def _component_degree(m: int, s: int, flavor: str) -> int:
    return m - s if flavor == "quadratic" else m + s


def hyper_layout(c: ChainComplex, m: int, flavor: str, s_max: int) -> list[tuple[int, int, int]]:
    """``(s, offset, size)`` for the components of the degree-``m`` hyperchains."""
    out = []
    off = 0
    for s in range(s_max + 1):
        size = square_rank(c, _component_degree(m, s, flavor))
        out.append((s, off, size))
        off += size
    return out


def hyper_differential(c: ChainComplex, m: int, flavor: str, s_max: int) -> IntMatrix:
    """Differential from hyperchains of degree ``m`` to degree ``m - 1``."""
    _check_flavor(flavor)
    src = hyper_layout(c, m, flavor, s_max)
    tgt = hyper_layout(c, m - 1, flavor, s_max)
    rows = sum(x[2] for x in tgt)
    cols = sum(x[2] for x in src)
    out = [[0] * cols for _ in range(rows)]

    def paste(blk, r0, c0):
        for i in range(blk.rows):
            row = out[r0 + i]
            for j, x in enumerate(blk.row(i)):
                if x:
                    row[c0 + j] += x

    for s, roff, rsize in tgt:
        if not rsize:
            continue
        if flavor == "quadratic":
            # (d psi)_s = (-1)^s d psi_s + N_{s+1} psi_{s+1}
            _, coff, csize = src[s]
            if csize:
                blk = _square_differential(c, m - s)
                paste(-blk if s % 2 else blk, roff, coff)
            if s + 1 <= s_max:
                _, coff, csize = src[s + 1]
                if csize:
                    paste(_norm_matrix(c, m - s - 1, s + 1), roff, coff)
        else:
            # (d phi)_s = d phi_s - (-1)^m N_s phi_{s-1}
            _, coff, csize = src[s]
            if csize:
                paste(_square_differential(c, m + s), roff, coff)
            if s >= 1:
                _, coff, csize = src[s - 1]
                if csize:
                    blk = _norm_matrix(c, m + s - 1, s)
                    paste(blk if m % 2 else -blk, roff, coff)
    return IntMatrix(out, rows, cols)


def q_group(c: ChainComplex, n: int, flavor: str = "quadratic", s_max: int | None = None) -> AbelianGroup:
    """``Q_n(C)`` (quadratic) or ``Q^n(C)`` (symmetric).

    >>> str(q_group(ChainComplex.point(), 1))
    'Z/2'
    """
    if s_max is None:
        s_max = default_truncation(c, n, flavor)
    return homology_at(hyper_differential(c, n, flavor, s_max), hyper_differential(c, n + 1, flavor, s_max))


# -- structure cycles ---------------------------------------------------------


@dataclass(frozen=True)
class StructureCycle:
    """A hyperchain ``{s: coordinates}``; components absent from the map are zero."""

    flavor: str
    degree: int
    components: Mapping[int, Vector] = field(default_factory=dict)

    def __post_init__(self):
        _check_flavor(self.flavor)
        comps = {}
        for s, v in self.components.items():
            s = int(s)
            if s < 0:
                raise ValueError("negative component index")
            v = tuple(int(x) for x in v)
            if any(v):
                comps[s] = v
        object.__setattr__(self, "components", dict(sorted(comps.items())))

    def __hash__(self):
        return hash((self.flavor, self.degree, tuple(self.components.items())))

    def component(self, c: ChainComplex, s: int) -> Vector:
        v = self.components.get(s)
        if v is None:
            return (0,) * square_rank(c, _component_degree(self.degree, s, self.flavor))
        return v

    def component_degree(self, s: int) -> int:
        return _component_degree(self.degree, s, self.flavor)

    def is_zero(self) -> bool:
        return not self.components

    def top_index(self) -> int:
        return max(self.components, default=-1)

    def validate_shape(self, c: ChainComplex) -> None:
        for s, v in self.components.items():
            want = square_rank(c, self.component_degree(s))
            if len(v) != want:
                raise ValueError(f"component {s} has length {len(v)}, expected {want}")

    def vector(self, c: ChainComplex, s_max: int) -> Vector:
        if self.top_index() > s_max:
            raise ValueError(f"structure has components beyond s_max={s_max}")
        out: list[int] = []
        for s in range(s_max + 1):
            out.extend(self.component(c, s))
        return tuple(out)

    @classmethod
    def from_vector(cls, c: ChainComplex, flavor: str, n: int, vec: Sequence[int], s_max: int) -> StructureCycle:
        comps = {}
        for s, off, size in hyper_layout(c, n, flavor, s_max):
            comps[s] = tuple(vec[off:off + size])
        return cls(flavor, n, comps)

    @classmethod
    def zero(cls, flavor: str, n: int) -> StructureCycle:
        return cls(flavor, n, {})

    def __add__(self, other: StructureCycle) -> StructureCycle:
        if (self.flavor, self.degree) != (other.flavor, other.degree):
            raise ValueError("structures of different flavor or degree")
        comps = dict(self.components)
        for s, v in other.components.items():
            w = comps.get(s)
            comps[s] = v if w is None else tuple(a + b for a, b in zip(w, v))
        return StructureCycle(self.flavor, self.degree, comps)

    def __neg__(self) -> StructureCycle:
        return self.scaled(-1)

    def __sub__(self, other: StructureCycle) -> StructureCycle:
        return self + (-other)

    def scaled(self, k: int) -> StructureCycle:
        return StructureCycle(self.flavor, self.degree, {s: tuple(k * x for x in v) for s, v in self.components.items()})

    def to_json_obj(self) -> dict:
        return {
            "flavor": self.flavor,
            "degree": self.degree,
            "components": {str(s): [str(x) for x in v] for s, v in self.components.items()},
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> StructureCycle:
        try:
            return cls(
                obj["flavor"],
                int(obj["degree"]),
                {int(s): tuple(int(x) for x in v) for s, v in obj.get("components", {}).items()},
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed structure: {exc}") from exc


def _working_truncation(c: ChainComplex, z: StructureCycle) -> int:
    return max(default_truncation(c, z.degree, z.flavor), z.top_index())


def boundary_of(c: ChainComplex, z: StructureCycle) -> Vector:
    """The hyperdifferential of ``z``, as a vector in the working truncation."""
    s_max = _working_truncation(c, z)
    n, flavor = z.degree, z.flavor
    out: list[int] = []
    for s in range(s_max + 1):
        m = _component_degree(n - 1, s, flavor)
        acc = [0] * square_rank(c, m)
        if flavor == "quadratic":
            if s in z.components:
                v = _square_differential(c, m + 1).apply(z.components[s])
                sg = -1 if s % 2 else 1
                acc = [a + sg * b for a, b in zip(acc, v)]
            if s + 1 in z.components:
                acc = [a + b for a, b in zip(acc, _norm_apply(c, z.components[s + 1], m, s + 1))]
        else:
            if s in z.components:
                v = _square_differential(c, m + 1).apply(z.components[s])
                acc = [a + b for a, b in zip(acc, v)]
            if s >= 1 and s - 1 in z.components:
                sg = 1 if n % 2 else -1
                w = _norm_apply(c, z.components[s - 1], m, s)
                acc = [a + sg * b for a, b in zip(acc, w)]
        out.extend(acc)
    return tuple(out)


def is_cycle(c: ChainComplex, z: StructureCycle) -> bool:
    z.validate_shape(c)
    return not any(boundary_of(c, z))


def is_boundary(c: ChainComplex, z: StructureCycle) -> bool:
    """Whether ``z`` is the boundary of a hyperchain of degree ``n + 1``."""
    s_max = _working_truncation(c, z)
    d = hyper_differential(c, z.degree + 1, z.flavor, s_max)
    rhs = IntMatrix.from_columns([z.vector(c, s_max)], d.rows)
    return solve_integer(d, rhs) is not None


def same_class(c: ChainComplex, a: StructureCycle, b: StructureCycle) -> bool:
    return is_boundary(c, a - b)


def random_cycle(c: ChainComplex, n: int, flavor: str = "quadratic", seed: int = 0, bound: int = 3) -> StructureCycle:
    """A seeded random integer combination of a kernel basis of the hyperdifferential."""
    _check_flavor(flavor)
    rng = random.Random(seed)
    s_max = default_truncation(c, n, flavor)
    d = hyper_differential(c, n, flavor, s_max)
    k = kernel_basis(d)
    vec = [0] * d.cols
    for t in range(k.cols):
        coef = rng.randint(-bound, bound)
        if coef:
            for i in range(d.cols):
                vec[i] += coef * k[i, t]
    return StructureCycle.from_vector(c, flavor, n, vec, s_max)


# -- symmetrization, slant, push-forward ------------------------------------


def symmetrize(c: ChainComplex, psi: StructureCycle, check: bool = True) -> StructureCycle:
    """``(1 + T) psi``: the symmetric structure with ``phi_0 = (1 + T) psi_0``."""
    if psi.flavor != "quadratic":
        raise ValueError("symmetrize expects a quadratic structure")
    p0 = psi.component(c, 0)
    t0 = t_action(c, p0, psi.degree)
    phi = StructureCycle("symmetric", psi.degree, {0: tuple(a + b for a, b in zip(p0, t0))})
    if check and is_cycle(c, psi) and not is_cycle(c, phi):
        raise CycleError("symmetrization of a cycle is not a cycle")
    return phi


def duality_component(c: ChainComplex, z: StructureCycle) -> Vector:
    """The element of ``(C (x) C)_n`` that defines the duality map."""
    if z.flavor == "symmetric":
        return z.component(c, 0)
    return symmetrize(c, z, check=False).component(c, 0)


def slant(c: ChainComplex, z: Sequence[int], m: int, check: bool = False) -> ChainMap:
    """The map ``C^{m-*} -> C``, ``u -> sum u(x) y`` over ``x (x) y`` in ``z``.

    In degree ``r`` the matrix is the transpose of the ``C_{m-r} (x) C_r``
    block of ``z``. When ``z`` is a cycle of ``C (x) C`` this is a chain map.
    """
    if len(z) != square_rank(c, m):
        raise ValueError("element length does not match (C (x) C)_m")
    src = dual(c, m)
    comps = {}
    for b in tensor_layout(c, c, m):
        r = b.q
        blk = IntMatrix(
            [z[b.offset + i * b.right_rank:b.offset + (i + 1) * b.right_rank] for i in range(b.left_rank)],
            b.left_rank,
            b.right_rank,
        )
        comps[r] = blk.T
    return ChainMap(src, c, comps, check=check)


def push_forward(f: ChainMap, z: StructureCycle) -> StructureCycle:
    """``(f (x) f)`` applied componentwise; sends cycles to cycles."""
    comps = {}
    for s, v in z.components.items():
        m = z.component_degree(s)
        comps[s] = tensor_map_matrix(f, f, m).apply(v)
    return StructureCycle(z.flavor, z.degree, comps)


# -- the diagonal on W and products -------------------------------------------


def w_diagonal_coefficient(i: int, j: int) -> int:
    """``Delta(e_s) = sum_{i+j=s} (-1)^(ij) e_i (x) T^i e_j``."""
    return -1 if (i * j) % 2 else 1


def _w_boundary(i: int, a: int) -> dict[tuple[int, int], int]:
    if i == 0:
        return {}
    return {(i - 1, a): 1, (i - 1, 1 - a): -1 if i % 2 else 1}


def _w_delta(s: int, a: int) -> dict[tuple[int, int, int, int], int]:
    return {(i, a, s - i, (a + i) % 2): w_diagonal_coefficient(i, s - i) for i in range(s + 1)}


def check_w_diagonal(s_max: int) -> bool:
    """Verify the chain-map property and counit of the diagonal up to ``s_max``."""
    for s in range(s_max + 1):
        lhs: dict = {}
        for (i, a, j, b), k in _w_delta(s, 0).items():
            for (i2, a2), k2 in _w_boundary(i, a).items():
                key = (i2, a2, j, b)
                lhs[key] = lhs.get(key, 0) + k * k2
            for (j2, b2), k2 in _w_boundary(j, b).items():
                key = (i, a, j2, b2)
                lhs[key] = lhs.get(key, 0) + k * k2 * (-1 if i % 2 else 1)
        rhs: dict = {}
        for (i, a), k in _w_boundary(s, 0).items():
            for key, v in _w_delta(i, a).items():
                rhs[key] = rhs.get(key, 0) + k * v
        if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
            return False
        # counit: only e_0 (x) e_s survives augmentation of the left factor
        if w_diagonal_coefficient(0, s) != 1:
            return False
    return True


def _index_in_tensor(c: ChainComplex, d: ChainComplex):
    """``(degree, i in C_p, k in D_q) -> index`` in ``(C (x) D)_{p+q}``, cached per degree."""
    cache: dict[int, dict[int, tuple[int, int]]] = {}

    def lookup(p: int, q: int) -> tuple[int, int]:
        m = p + q
        if m not in cache:
            cache[m] = {b.p: (b.offset, b.right_rank) for b in tensor_layout(c, d, m)}
        return cache[m][p]

    return lookup


def _interchange(
    c: ChainComplex,
    d: ChainComplex,
    e: ChainComplex,
    x: Sequence[int],
    mx: int,
    y: Sequence[int],
    my: int,
    out: list[int],
    out_degree: int,
    coef: int,
) -> None:
    """Add ``coef * iota(x (x) y)`` to ``out`` in ``(E (x) E)_{out_degree}``, ``E = C (x) D``.

    ``iota((a (x) b) (x) (c (x) d)) = (-1)^(|b||c|) (a (x) c) (x) (b (x) d)``.
    """
    lookup = _index_in_tensor(c, d)
    eblocks = {b.p: b for b in tensor_layout(e, e, out_degree)}
    for bx in tensor_layout(c, c, mx):
        p1, q1 = bx.p, bx.q
        for by in tensor_layout(d, d, my):
            p2, q2 = by.p, by.q
            sign = -1 if (q1 * p2) % 2 else 1
            u, v = p1 + p2, q1 + q2
            eb = eblocks[u]
            off_u, width_u = lookup(p1, p2)
            off_v, width_v = lookup(q1, q2)
            for ia in range(bx.left_rank):
                for ib in range(bx.right_rank):
                    xv = x[bx.offset + ia * bx.right_rank + ib]
                    if not xv:
                        continue
                    for ic in range(by.left_rank):
                        row_u = off_u + ia * width_u + ic
                        for id_ in range(by.right_rank):
                            yv = y[by.offset + ic * by.right_rank + id_]
                            if not yv:
                                continue
                            col_v = off_v + ib * width_v + id_
                            out[eb.offset + row_u * eb.right_rank + col_v] += coef * sign * xv * yv


def _t_power(c: ChainComplex, z: Sequence[int], m: int, k: int) -> Vector:
    return t_action(c, z, m) if k % 2 else tuple(z)


def product_symmetric(c: ChainComplex, phi: StructureCycle, d: ChainComplex, phi2: StructureCycle) -> StructureCycle:
    """Symmetric structure on ``C (x) D``:
    ``(phi (x) phi')_s = sum_{i+j=s} (-1)^(ij + n' i) iota(phi_i (x) T^i phi'_j)``."""
    from .chain import tensor

    if phi.flavor != "symmetric" or phi2.flavor != "symmetric":
        raise ValueError("both structures must be symmetric")
    e = tensor(c, d)
    n, n2 = phi.degree, phi2.degree
    top = phi.top_index() + phi2.top_index()
    comps = {}
    for s in range(max(top, 0) + 1):
        m = n + n2 + s
        out = [0] * square_rank(e, m)
        for i in range(s + 1):
            j = s - i
            x = phi.components.get(i)
            y = phi2.components.get(j)
            if x is None or y is None:
                continue
            coef = w_diagonal_coefficient(i, j) * (-1 if (n2 * i) % 2 else 1)
            ty = _t_power(d, y, n2 + j, i)
            _interchange(c, d, e, x, n + i, ty, n2 + j, out, m, coef)
        comps[s] = tuple(out)
    return StructureCycle("symmetric", n + n2, comps)


def product_symmetric_quadratic(
    c: ChainComplex, phi: StructureCycle, d: ChainComplex, psi: StructureCycle
) -> StructureCycle:
    """Quadratic structure on ``C (x) D`` from symmetric ``phi`` and quadratic ``psi``:
    ``chi_j = sum_i (-1)^(ij + (i+n) j) iota(T^i phi_i (x) T^i psi_{i+j})``."""
    from .chain import tensor

    if phi.flavor != "symmetric" or psi.flavor != "quadratic":
        raise ValueError("expected a symmetric and a quadratic structure")
    e = tensor(c, d)
    n, n2 = phi.degree, psi.degree
    top = psi.top_index()
    comps = {}
    for j in range(max(top, 0) + 1):
        m = n + n2 - j
        out = [0] * square_rank(e, m)
        for i, x in phi.components.items():
            y = psi.components.get(i + j)
            if y is None:
                continue
            coef = w_diagonal_coefficient(i, j) * (-1 if ((i + n) * j) % 2 else 1)
            tx = _t_power(c, x, n + i, i)
            ty = _t_power(d, y, n2 - i - j, i)
            _interchange(c, d, e, tx, n + i, ty, n2 - i - j, out, m, coef)
        comps[j] = tuple(out)
    return StructureCycle("quadratic", n + n2, comps)


def direct_sum_structures(c: ChainComplex, z: StructureCycle, d: ChainComplex, w: StructureCycle) -> StructureCycle:
    """Structure on ``C + D`` from structures on the summands."""
    from .chain import inclusion

    return push_forward(inclusion(c, d, 0), z) + push_forward(inclusion(c, d, 1), w)
