"""(Z, X)-modules over a finite simplicial complex.

A (Z, X)-module is a free abelian group split as a sum of pieces ``A(sigma)``
indexed by the simplices of ``X``. A morphism may send ``A(sigma)`` only into
the pieces ``B(tau)`` with ``tau`` a coface of ``sigma`` (``sigma <= tau``).

Simplices are sorted vertex tuples. Whenever simplices are listed they are in
the canonical order: by dimension, then lexicographically.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .chain import ChainComplex, ChainMap, tensor, tensor_layout
from .intmat import IntMatrix, NotAComplexError

Simplex = tuple[int, ...]


class SupportError(ValueError):
    """A block violates the coface support condition."""


class NotSimplyConnected(ValueError):
    """Assembly needs a simply connected complex (or one we cannot certify)."""


def _key(s: Simplex) -> tuple:
    return (len(s), s)


def simplex_key(s: Simplex) -> str:
    return ",".join(str(v) for v in s)


def parse_simplex(text: str | Sequence[int]) -> Simplex:
    if isinstance(text, str):
        return tuple(sorted(int(v) for v in text.split(",") if v.strip() != ""))
    return tuple(sorted(int(v) for v in text))


def is_face(sigma: Simplex, tau: Simplex) -> bool:
    """``sigma <= tau``."""
    return set(sigma) <= set(tau)


class SimplicialComplex:
    """A finite abstract simplicial complex, closed under taking faces."""

    def __init__(self, vertices: int, simplices: Iterable[Sequence[int]]):
        self.vertices = int(vertices)
        found: set[Simplex] = set()
        for s in simplices:
            s = tuple(sorted(set(int(v) for v in s)))
            if not s:
                continue
            if s[0] < 0 or s[-1] >= self.vertices:
                raise ValueError(f"simplex {s} uses a vertex outside 0..{self.vertices - 1}")
            for k in range(1, len(s) + 1):
                found.update(itertools.combinations(s, k))
        self.simplices: tuple[Simplex, ...] = tuple(sorted(found, key=_key))
        self._index = {s: i for i, s in enumerate(self.simplices)}

    def __contains__(self, s) -> bool:
        return tuple(s) in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and (self.vertices, self.simplices) == (
            other.vertices,
            other.simplices,
        )

    def __hash__(self):
        return hash((self.vertices, self.simplices))

    def __repr__(self):
        return f"SimplicialComplex(vertices={self.vertices}, simplices={len(self.simplices)})"

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def index(self, s: Simplex) -> int:
        return self._index[tuple(s)]

    def of_dim(self, k: int) -> list[Simplex]:
        return [s for s in self.simplices if len(s) == k + 1]

    def cofaces(self, sigma: Simplex) -> list[Simplex]:
        return [t for t in self.simplices if is_face(sigma, t)]

    def maximal(self) -> list[Simplex]:
        return [s for s in self.simplices if not any(len(t) > len(s) and is_face(s, t) for t in self.simplices)]

    def is_pure(self, n: int | None = None) -> bool:
        n = self.dimension if n is None else n
        return all(len(s) == n + 1 for s in self.maximal())

    @classmethod
    def from_maximal(cls, simplices: Iterable[Sequence[int]]) -> SimplicialComplex:
        simplices = [tuple(s) for s in simplices]
        nv = 1 + max((max(s) for s in simplices if s), default=-1)
        return cls(nv, simplices)

    def to_json_obj(self) -> dict:
        return {"vertices": self.vertices, "simplices": [list(s) for s in self.maximal()]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> SimplicialComplex:
        try:
            return cls(int(obj["vertices"]), obj["simplices"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed simplicial complex: {exc}") from exc

    # -- topology of the 2-skeleton -----------------------------------------

    def components(self) -> list[list[int]]:
        parent = list(range(self.vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in self.of_dim(1):
            ra, rb = find(e[0]), find(e[1])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        used = sorted({v for s in self.simplices for v in s})
        groups: dict[int, list[int]] = {}
        for v in used:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def is_simply_connected(self) -> bool:
        """Certify that every component has trivial edge-path group.

        Generators are the edges off a spanning forest and each triangle gives
        a relation. A relation that reduces to a single generator kills it.
        Returns False when this does not kill every generator, which happens
        for nontrivial groups but may also happen for some trivial ones.
        """
        edges = self.of_dim(1)
        tree: set[Simplex] = set()
        seen: set[int] = set()
        for comp in self.components():
            root = comp[0]
            seen.add(root)
            stack = [root]
            adj: dict[int, list[int]] = {}
            for a, b in edges:
                adj.setdefault(a, []).append(b)
                adj.setdefault(b, []).append(a)
            while stack:
                v = stack.pop()
                for w in sorted(adj.get(v, [])):
                    if w not in seen:
                        seen.add(w)
                        tree.add((min(v, w), max(v, w)))
                        stack.append(w)
        gens = {e for e in edges if e not in tree}
        # a triangle (a, b, c) gives the word ab . bc . ca
        rels = []
        for a, b, c in self.of_dim(2):
            rels.append([((a, b), 1), ((b, c), 1), ((a, c), -1)])
        changed = True
        while gens and changed:
            changed = False
            for rel in rels:
                word = _free_reduce([(g, e) for g, e in rel if g in gens])
                if len(word) == 1:
                    gens.discard(word[0][0])
                    changed = True
        return not gens


def _free_reduce(word: list[tuple[Simplex, int]]) -> list[tuple[Simplex, int]]:
    out: list[tuple[Simplex, int]] = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
        out = out[1:-1]
    return out


# -- modules and morphisms -------------------------------------------------------


@dataclass(frozen=True)
class ZXModule:
    complex: SimplicialComplex
    ranks: Mapping[Simplex, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for s, r in self.ranks.items():
            s = parse_simplex(s)
            if s not in self.complex:
                raise ValueError(f"{s} is not a simplex of X")
            if r < 0:
                raise ValueError("negative rank")
            if r:
                clean[s] = int(r)
        object.__setattr__(self, "ranks", dict(sorted(clean.items(), key=lambda kv: _key(kv[0]))))

    def __hash__(self):
        return hash((self.complex, tuple(self.ranks.items())))

    def rank(self, s: Simplex) -> int:
        return self.ranks.get(tuple(s), 0)

    def support(self) -> list[Simplex]:
        return list(self.ranks)

    def total_rank(self) -> int:
        return sum(self.ranks.values())

    def offsets(self) -> dict[Simplex, int]:
        out, off = {}, 0
        for s, r in self.ranks.items():
            out[s] = off
            off += r
        return out

    def basis_simplices(self) -> list[Simplex]:
        """The simplex of each basis element of the assembled module."""
        return [s for s, r in self.ranks.items() for _ in range(r)]

    def direct_sum(self, other: ZXModule) -> ZXModule:
        if self.complex != other.complex:
            raise ValueError("modules over different complexes")
        keys = set(self.ranks) | set(other.ranks)
        return ZXModule(self.complex, {s: self.rank(s) + other.rank(s) for s in keys})

    def to_json_obj(self) -> dict:
        return {simplex_key(s): r for s, r in self.ranks.items()}


@dataclass(frozen=True)
class ZXMorphism:
    """``blocks[(tau, sigma)]`` is the component ``A(sigma) -> B(tau)``."""

    source: ZXModule
    target: ZXModule
    blocks: Mapping[tuple[Simplex, Simplex], IntMatrix] = field(default_factory=dict)
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if self.source.complex != self.target.complex:
            raise ValueError("source and target live over different complexes")
        clean = {}
        for (t, s), m in self.blocks.items():
            t, s = parse_simplex(t), parse_simplex(s)
            if not isinstance(m, IntMatrix):
                m = IntMatrix(m, self.target.rank(t), self.source.rank(s))
            if m.shape != (self.target.rank(t), self.source.rank(s)):
                raise ValueError(f"block {t} <- {s} has shape {m.shape}")
            if not m.is_zero():
                clean[(t, s)] = m
        object.__setattr__(self, "blocks", clean)
        if self.check and not check_support(self):
            bad = next(k for k in clean if not is_face(k[1], k[0]))
            raise SupportError(f"block {bad[0]} <- {bad[1]} is not coface-supported")

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.blocks.items()))))

    def block(self, tau: Simplex, sigma: Simplex) -> IntMatrix:
        m = self.blocks.get((tuple(tau), tuple(sigma)))
        return m if m is not None else IntMatrix.zeros(self.target.rank(tau), self.source.rank(sigma))

    @classmethod
    def identity(cls, m: ZXModule) -> ZXMorphism:
        return cls(m, m, {(s, s): IntMatrix.identity(r) for s, r in m.ranks.items()})

    def to_json_obj(self) -> dict:
        return {
            "complex": self.source.complex.to_json_obj(),
            "source": self.source.to_json_obj(),
            "target": self.target.to_json_obj(),
            "blocks": [
                {"target": list(t), "source": list(s), "matrix": m.to_json_obj()}
                for (t, s), m in sorted(self.blocks.items(), key=lambda kv: (_key(kv[0][0]), _key(kv[0][1])))
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict, check: bool = True) -> ZXMorphism:
        try:
            x = SimplicialComplex.from_json_obj(obj["complex"])
            src = ZXModule(x, {parse_simplex(k): int(v) for k, v in obj["source"].items()})
            tgt = ZXModule(x, {parse_simplex(k): int(v) for k, v in obj["target"].items()})
            blocks = {}
            for b in obj.get("blocks", []):
                t, s = parse_simplex(b["target"]), parse_simplex(b["source"])
                blocks[(t, s)] = IntMatrix.from_json_obj(b["matrix"], tgt.rank(t), src.rank(s))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed (Z,X)-morphism: {exc}") from exc
        return cls(src, tgt, blocks, check=check)


def check_support(f: ZXMorphism) -> bool:
    """True iff every nonzero block ``A(sigma) -> B(tau)`` has ``sigma <= tau``."""
    return all(is_face(s, t) for (t, s) in f.blocks)


def compose(g: ZXMorphism, f: ZXMorphism) -> ZXMorphism:
    """``g o f``, blockwise."""
    if f.target != g.source:
        raise ValueError("morphisms are not composable")
    out: dict[tuple[Simplex, Simplex], IntMatrix] = {}
    for (t, m), gb in g.blocks.items():
        for (m2, s), fb in f.blocks.items():
            if m2 != m:
                continue
            prod = gb @ fb
            out[(t, s)] = out[(t, s)] + prod if (t, s) in out else prod
    return ZXMorphism(f.source, g.target, out, check=False)


# -- chain complexes -----------------------------------------------------------


@dataclass(frozen=True)
class ZXChainComplex:
    """Degreewise (Z, X)-modules with coface-supported differentials ``d_r: C_r -> C_{r-1}``."""

    complex: SimplicialComplex
    n: int
    modules: Mapping[int, ZXModule]
    differentials: Mapping[int, ZXMorphism] = field(default_factory=dict)

    def __post_init__(self):
        mods = {int(r): m for r, m in self.modules.items() if m.total_rank()}
        object.__setattr__(self, "modules", dict(sorted(mods.items())))
        ds = {}
        for r, d in self.differentials.items():
            r = int(r)
            if d.source != self.module(r) or d.target != self.module(r - 1):
                raise ValueError(f"d_{r} has the wrong source or target")
            if not check_support(d):
                raise SupportError(f"d_{r} violates the support condition")
            if d.blocks:
                ds[r] = d
        object.__setattr__(self, "differentials", ds)
        for r in ds:
            if r + 1 in ds and compose(ds[r], ds[r + 1]).blocks:
                raise NotAComplexError(f"d_{r} d_{r + 1} != 0")

    def __hash__(self):
        return hash((self.complex, self.n, tuple(self.modules.items()), tuple(self.differentials.items())))

    def module(self, r: int) -> ZXModule:
        return self.modules.get(r) or ZXModule(self.complex, {})

    def d(self, r: int) -> ZXMorphism:
        m = self.differentials.get(r)
        return m if m is not None else ZXMorphism(self.module(r), self.module(r - 1), {})

    def degrees(self) -> list[int]:
        return list(self.modules)

    def local(self, sigma: Simplex) -> ChainComplex:
        """``C(sigma)``: the ``sigma``-diagonal blocks, an ordinary chain complex."""
        sigma = tuple(sigma)
        degs = self.degrees()
        if not degs:
            return ChainComplex.zero()
        lo, hi = degs[0], degs[-1]
        dims = [self.module(r).rank(sigma) for r in range(lo, hi + 1)]
        ds = {r: self.d(r).block(sigma, sigma) for r in range(lo + 1, hi + 1)}
        return ChainComplex(lo, dims, ds)

    def to_json_obj(self) -> dict:
        return {
            "complex": self.complex.to_json_obj(),
            "n": self.n,
            "modules": {str(r): m.to_json_obj() for r, m in self.modules.items()},
            "differentials": {str(r): d.to_json_obj()["blocks"] for r, d in self.differentials.items()},
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> ZXChainComplex:
        try:
            x = SimplicialComplex.from_json_obj(obj["complex"])
            mods = {
                int(r): ZXModule(x, {parse_simplex(k): int(v) for k, v in m.items()})
                for r, m in obj.get("modules", {}).items()
            }
            empty = ZXModule(x, {})
            ds = {}
            for r, blocks in obj.get("differentials", {}).items():
                r = int(r)
                src, tgt = mods.get(r, empty), mods.get(r - 1, empty)
                bl = {}
                for b in blocks:
                    t, s = parse_simplex(b["target"]), parse_simplex(b["source"])
                    bl[(t, s)] = IntMatrix.from_json_obj(b["matrix"], tgt.rank(t), src.rank(s))
                ds[r] = ZXMorphism(src, tgt, bl)
            return cls(x, int(obj["n"]), mods, ds)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed (Z,X)-chain complex: {exc}") from exc


# -- assembly ---------------------------------------------------------------------


def _require_simply_connected(x: SimplicialComplex) -> None:
    if not x.is_simply_connected():
        raise NotSimplyConnected("assembly is implemented only for simply connected X")


def _assemble_morphism(f: ZXMorphism) -> IntMatrix:
    so, to = f.source.offsets(), f.target.offsets()
    rows, cols = f.target.total_rank(), f.source.total_rank()
    out = [[0] * cols for _ in range(rows)]
    for (t, s), m in f.blocks.items():
        for i in range(m.rows):
            for j in range(m.cols):
                out[to[t] + i][so[s] + j] += m[i, j]
    return IntMatrix(out, rows, cols)


def assemble(obj):
    """Forget the simplex grading.

    Modules give their total rank, morphisms a matrix and chain complexes a
    ``ChainComplex``. Only simply connected ``X`` are accepted.
    """
    if isinstance(obj, ZXModule):
        _require_simply_connected(obj.complex)
        return obj.total_rank()
    if isinstance(obj, ZXMorphism):
        _require_simply_connected(obj.source.complex)
        return _assemble_morphism(obj)
    if isinstance(obj, ZXChainComplex):
        _require_simply_connected(obj.complex)
        degs = obj.degrees()
        if not degs:
            return ChainComplex.zero()
        lo, hi = degs[0], degs[-1]
        dims = [obj.module(r).total_rank() for r in range(lo, hi + 1)]
        ds = {r: _assemble_morphism(obj.d(r)) for r in range(lo + 1, hi + 1)}
        return ChainComplex(lo, dims, ds)
    raise TypeError(f"cannot assemble {type(obj).__name__}")


# -- local tensor product ------------------------------------------------------------


@dataclass(frozen=True)
class ZXTensor:
    complex: ChainComplex
    inclusion: ChainMap  # into the full tensor of the assembled complexes
    kept: Mapping[int, tuple[int, ...]]  # kept basis indices of the full tensor, per degree


def zx_tensor(c: ZXChainComplex, e: ZXChainComplex) -> ZXTensor:
    """The part of ``C (x) E`` spanned by ``C(sigma) (x) E(tau)`` with ``sigma`` meeting ``tau``.

    Coface support makes this a subcomplex: the differential only moves a
    basis element to cofaces, which still meet.
    """
    if c.complex != e.complex:
        raise ValueError("complexes over different X")
    ac = _assemble_unchecked(c)
    ae = _assemble_unchecked(e)
    full = tensor(ac, ae)
    kept: dict[int, tuple[int, ...]] = {}
    for m in full.degrees():
        idx = []
        for b in tensor_layout(ac, ae, m):
            ls = c.module(b.p).basis_simplices()
            rs = e.module(b.q).basis_simplices()
            for i in range(b.left_rank):
                for j in range(b.right_rank):
                    if set(ls[i]) & set(rs[j]):
                        idx.append(b.offset + i * b.right_rank + j)
        kept[m] = tuple(idx)
    degs = list(full.degrees())
    if not degs:
        return ZXTensor(ChainComplex.zero(), ChainMap.zero(ChainComplex.zero(), full), {})
    ds = {m: full.d(m).submatrix(kept.get(m - 1, ()), kept[m]) for m in degs[1:]}
    sub = ChainComplex(degs[0], [len(kept[m]) for m in degs], ds)
    comps = {}
    for m in degs:
        rows = full.rank(m)
        cols = [[1 if r == k else 0 for r in range(rows)] for k in kept[m]]
        comps[m] = IntMatrix.from_columns(cols, rows)
    return ZXTensor(sub, ChainMap(sub, full, comps), kept)


def _assemble_unchecked(c: ZXChainComplex) -> ChainComplex:
    degs = c.degrees()
    if not degs:
        return ChainComplex.zero()
    lo, hi = degs[0], degs[-1]
    dims = [c.module(r).total_rank() for r in range(lo, hi + 1)]
    return ChainComplex(lo, dims, {r: _assemble_morphism(c.d(r)) for r in range(lo + 1, hi + 1)})


# -- dual cells ------------------------------------------------------------------------


def simplicial_chain_complex(simplices: Iterable[Sequence]) -> ChainComplex:
    """Simplicial chains of a face-closed set of simplices (vertices of any sortable type)."""
    simplices = sorted({tuple(s) for s in simplices}, key=lambda s: (len(s), s))
    if not simplices:
        return ChainComplex.zero()
    by_dim: dict[int, list] = {}
    for s in simplices:
        by_dim.setdefault(len(s) - 1, []).append(s)
    top = max(by_dim)
    index = {k: {s: i for i, s in enumerate(v)} for k, v in by_dim.items()}
    ds = {}
    for k in range(1, top + 1):
        rows, cols = len(by_dim.get(k - 1, [])), len(by_dim.get(k, []))
        m = [[0] * cols for _ in range(rows)]
        for j, s in enumerate(by_dim.get(k, [])):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                m[index[k - 1][face]][j] += -1 if i % 2 else 1
        ds[k] = IntMatrix(m, rows, cols)
    return ChainComplex(0, [len(by_dim.get(k, [])) for k in range(top + 1)], ds)


@dataclass(frozen=True)
class DualCell:
    simplex: Simplex
    dimension: int  # longest flag length minus one
    flags: tuple[tuple[Simplex, ...], ...]  # simplices of the subdivision inside D(sigma)
    top_flags: tuple[tuple[Simplex, ...], ...]  # top simplices of the subdivision with sigma_0 = sigma
    boundary: tuple[tuple[Simplex, ...], ...]  # flags with sigma < sigma_0


@dataclass(frozen=True)
class DualCellDecomposition:
    complex: SimplicialComplex
    n: int
    cells: Mapping[Simplex, DualCell]

    def counts(self) -> tuple[int, ...]:
        """Number of cells of each dimension ``0..n``."""
        out = [0] * (self.n + 1)
        for cell in self.cells.values():
            out[cell.dimension] += 1
        return tuple(out)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (self.n - (len(s) - 1)) for s in self.cells)

    def top_flag_total(self) -> int:
        return sum(len(c.top_flags) for c in self.cells.values())

    def partitions_top_flags(self) -> bool:
        """Top flags of the subdivision are split exactly among the vertex cells."""
        seen: list = []
        for s, cell in self.cells.items():
            if len(s) == 1:
                seen.extend(cell.top_flags)
        return len(seen) == len(set(seen)) == len(_all_flags(self.complex, self.n))

    def boundary_matches(self) -> bool:
        """``boundary D(sigma)`` is the union of ``D(tau)`` over ``tau > sigma``."""
        for s, cell in self.cells.items():
            union = set()
            for t, other in self.cells.items():
                if t != s and is_face(s, t):
                    union.update(other.flags)
            if union != set(cell.boundary):
                return False
        return True

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "counts": list(self.counts()),
            "euler_characteristic": self.euler_characteristic(),
            "top_flag_total": self.top_flag_total(),
            "cells": [
                {"simplex": list(s), "dimension": c.dimension, "top_flags": len(c.top_flags), "flags": len(c.flags)}
                for s, c in self.cells.items()
            ],
        }


def _flags_from(x: SimplicialComplex, sigma: Simplex) -> list[tuple[Simplex, ...]]:
    out = []

    def grow(chain):
        out.append(tuple(chain))
        last = chain[-1]
        for t in x.simplices:
            if len(t) > len(last) and is_face(last, t):
                grow(chain + [t])

    grow([sigma])
    return out


def _all_flags(x: SimplicialComplex, n: int) -> set[tuple[Simplex, ...]]:
    return {f for v in x.of_dim(0) for f in _flags_from(x, v) if len(f) == n + 1}


def dual_cells(x: SimplicialComplex, n: int | None = None) -> DualCellDecomposition:
    """Dual cells ``D(sigma, X)`` in the barycentric subdivision of a pure ``n``-complex.

    ``D(sigma)`` is spanned by the barycenter chains ``sigma_0 < ... < sigma_k``
    with ``sigma <= sigma_0``.
    """
    n = x.dimension if n is None else n
    if not x.is_pure(n):
        raise ValueError(f"X is not a pure {n}-dimensional complex")
    cells = {}
    for s in x.simplices:
        flags = []
        boundary = []
        for t in x.cofaces(s):
            fl = _flags_from(x, t)
            flags.extend(fl)
            if t != s:
                boundary.extend(fl)
        top = tuple(f for f in _flags_from(x, s) if len(f) == n + 1)
        dim = max(len(f) for f in flags) - 1
        cells[s] = DualCell(s, dim, tuple(flags), top, tuple(boundary))
    return DualCellDecomposition(x, n, cells)


def dual_cell_complex(cell: DualCell) -> ChainComplex:
    """Simplicial chains of ``D(sigma)``; each flag is a simplex of the subdivision."""
    return simplicial_chain_complex(_order_flag(f) for f in cell.flags)


def _order_flag(f: tuple[Simplex, ...]) -> tuple:
    return tuple(sorted(f, key=_key))


# -- cycle conditions ----------------------------------------------------------------


@dataclass(frozen=True)
class CycleConditionReport:
    local_dimension: bool
    local_dimension_violations: tuple[Simplex, ...]
    top_contractible: bool
    top_failures: tuple[Simplex, ...]
    assembled_acyclic: bool | None  # None when X is not certified simply connected

    @property
    def ok(self) -> bool:
        return self.local_dimension and self.top_contractible and bool(self.assembled_acyclic)

    def to_json_obj(self) -> dict:
        return {
            "local_dimension": self.local_dimension,
            "local_dimension_violations": [list(s) for s in self.local_dimension_violations],
            "top_contractible": self.top_contractible,
            "top_failures": [list(s) for s in self.top_failures],
            "assembled_acyclic": self.assembled_acyclic,
            "ok": self.ok,
        }


def check_cycle_conditions(c: ZXChainComplex) -> CycleConditionReport:
    """(a) ``C(sigma)`` lives in degrees ``<= n - dim sigma``; (b) ``C(sigma)`` is
    acyclic for ``dim sigma = n``; (c) the assembled complex is acyclic."""
    x, n = c.complex, c.n
    support = {s for m in c.modules.values() for s in m.ranks}
    bad_dim = []
    for s in sorted(support, key=_key):
        loc = c.local(s)
        if not loc.is_zero() and loc.max_degree > n - (len(s) - 1):
            bad_dim.append(s)
    bad_top = [s for s in x.of_dim(n) if s in support and not c.local(s).is_acyclic()]
    try:
        acyclic = assemble(c).is_acyclic()
    except NotSimplyConnected:
        acyclic = None
    return CycleConditionReport(not bad_dim, tuple(bad_dim), not bad_top, tuple(bad_top), acyclic)


# -- random data ----------------------------------------------------------------------


def random_module(rng: random.Random, x: SimplicialComplex, max_rank: int = 2, density: float = 0.5) -> ZXModule:
    return ZXModule(x, {s: rng.randint(1, max_rank) for s in x.simplices if rng.random() < density})


def random_morphism(rng: random.Random, src: ZXModule, tgt: ZXModule, bound: int = 3) -> ZXMorphism:
    """A random coface-supported morphism."""
    blocks = {}
    for s, a in src.ranks.items():
        for t, b in tgt.ranks.items():
            if is_face(s, t) and rng.random() < 0.7:
                blocks[(t, s)] = IntMatrix([[rng.randint(-bound, bound) for _ in range(a)] for _ in range(b)], b, a)
    return ZXMorphism(src, tgt, blocks)
