"""The acceptance suite: nine exact checks, each returning a pass/fail result.

Run it with ``lchain selftest`` or through ``tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import fixtures, oracles
from .chain import ChainComplex, mapping_cone, random_split_system, random_unimodular, splitting_check
from .intmat import IntMatrix, NotAComplexError
from .lgroups import Z2, lgroups_table
from .poincare import l_class, middle_pairing, product, signature, symmetric_form, symmetrize_complex, verify_poincare
from .qstruct import default_truncation, q_group
from .spherecalc import (
    SElem,
    TElem,
    add,
    assembly,
    inverse_pullback_invariant,
    neg,
    nonadditivity_demo,
    pairing,
    reconcile_check,
    whitney,
    whitney_inverse,
)
from .zxmod import (
    SimplicialComplex,
    SupportError,
    ZXChainComplex,
    ZXModule,
    ZXMorphism,
    assemble,
    check_support,
    compose,
    dual_cells,
    random_module,
    random_morphism,
)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name}: {self.detail} ({self.seconds:.1f}s)"


class _Checks:
    """Collects named boolean checks and remembers the first failure."""

    def __init__(self):
        self.count = 0
        self.failures: list[str] = []

    def __call__(self, ok: bool, what: str) -> bool:
        self.count += 1
        if not ok:
            self.failures.append(what)
        return ok

    def result(self, number: int, name: str, start: float) -> CriterionResult:
        if self.failures:
            detail = f"{len(self.failures)} of {self.count} checks failed, first: {self.failures[0]}"
        else:
            detail = f"{self.count} checks"
        return CriterionResult(number, name, not self.failures, detail, time.perf_counter() - start)


EXPECTED_QUADRATIC = ("Z", "0", "Z/2", "0")
EXPECTED_SYMMETRIC = ("Z", "Z/2", "0", "0")


def criterion_1(seed: int = 0, trials: int = 100) -> CriterionResult:
    from .cli import render_lgroups

    start = time.perf_counter()
    ck = _Checks()
    table = lgroups_table(11)
    for n, quad, sym in table:
        ck(quad == EXPECTED_QUADRATIC[n % 4], f"L_{n}(Z) = {quad}")
        ck(sym == EXPECTED_SYMMETRIC[n % 4], f"L^{n}(Z) = {sym}")
    text = render_lgroups(11, "text").splitlines()
    ck(len(text) == 13, "lgroups text output has a header and 12 rows")
    for line, (n, quad, sym) in zip(text[1:], table):
        ck(line.split() == [str(n), quad, sym], f"lgroups row {n}")
    return ck.result(1, "L-group tables for n = 0..11", start)


def criterion_2(seed: int = 0, trials: int = 100) -> CriterionResult:
    start = time.perf_counter()
    ck = _Checks()
    point = ChainComplex.point()
    expected = ["Z", "Z/2", "0", "Z/2"]
    oracle = oracles.point_quadratic_qgroups(3)
    for n in range(4):
        g = q_group(point, n, "quadratic")
        ck(str(g) == expected[n], f"Q_{n}(point) = {g}")
        ck((g.free_rank, g.torsion) == oracle[n], f"Q_{n}(point) oracle {oracle[n]}")
        s = default_truncation(point, n, "quadratic")
        ck(s == n + 1, f"default truncation {s} = n + 1")
        ck(q_group(point, n, "quadratic", s_max=n + 3) == g, f"Q_{n} stable at s_max = n + 3")
    return ck.result(2, "quadratic Q-groups of the point", start)


def criterion_3(seed: int = 0, trials: int = 100) -> CriterionResult:
    start = time.perf_counter()
    ck = _Checks()
    e8 = fixtures.e8()
    pairing_m = middle_pairing(e8)
    sig = signature(pairing_m)
    ck(sig == 8, f"E8 signature {sig}")
    ck(oracles.descartes_signature(pairing_m.tolist()) == 8, "E8 signature oracle")
    ck(sig % 8 == 0, "E8 signature divisible by 8")
    ck(l_class(e8).value == 1, "l_class(E8) = 1")
    hyp = fixtures.hyperbolic()
    ck(l_class(hyp).value == 0, "l_class(hyperbolic) = 0")
    ck(oracles.descartes_signature(middle_pairing(hyp).tolist()) == 0, "hyperbolic signature oracle")
    arf = fixtures.arf_form()
    ck(l_class(arf).value == Z2(1), "Arf form has Arf invariant 1")
    ck(oracles.brute_force_arf(fixtures.ARF_PSI.tolist()) == 1, "Arf form brute force")
    hyp2 = fixtures.hyperbolic(2)
    ck(l_class(hyp2).value == Z2(0), "hyperbolic form has Arf invariant 0")
    ck(oracles.brute_force_arf(fixtures.HYPERBOLIC_PSI.tolist()) == 0, "hyperbolic brute force")
    return ck.result(3, "E8, hyperbolic and Arf invariants", start)


def _random_unimodular_diagonal_form(rng: random.Random) -> IntMatrix:
    r = rng.randint(1, 4)
    d = IntMatrix.diagonal([rng.choice((1, -1)) for _ in range(r)])
    p = random_unimodular(rng, r)
    return p.T @ d @ p


def criterion_4(seed: int = 0, trials: int = 100) -> CriterionResult:
    start = time.perf_counter()
    ck = _Checks()
    rng = random.Random(seed)
    for t in range(trials):
        a = _random_unimodular_diagonal_form(rng)
        b = _random_unimodular_diagonal_form(rng)
        pa, pb = symmetric_form(a), symmetric_form(b)
        prod = product(pa, pb)
        sa = oracles.descartes_signature(a.tolist())
        sb = oracles.descartes_signature(b.tolist())
        got = l_class(prod).value
        ck(got == sa * sb, f"trial {t}: sigma(A x B) = {got}, oracle {sa} * {sb}")
    e8 = fixtures.e8()
    qq = product(e8, e8)
    ck(l_class(qq).value == 8, "quad x quad of E8 generators has class 8")
    ck(l_class(symmetrize_complex(qq)).value == 64, "its symmetrization has signature 64")
    return ck.result(4, "product laws", start)


def criterion_5(seed: int = 0, trials: int = 100) -> CriterionResult:
    start = time.perf_counter()
    ck = _Checks()
    for x, y in itertools.product(range(-10, 11), repeat=2):
        demo = nonadditivity_demo(x, y)
        ck((demo.lhs, demo.rhs) == (0, 2 * x * y), f"demo({x},{y}) = ({demo.lhs},{demo.rhs})")
        ck(demo.terms == (0, 2 * x * y, -2 * x * y) and demo.decomposition_total == 0, f"decomposition at ({x},{y})")
        s = SElem(4, 4, x, y)
        inv = inverse_pullback_invariant(s, -s)
        ck(inv.as_ints() == (-x, -y, 2 * x * y), f"inverse pullback at ({x},{y})")
        ck(reconcile_check(s, SElem(4, 4, y, x)).holds, f"reconcile at ({x},{y})")
    return ck.result(5, "sphere product example", start)


def _elements(p: int, q: int, span: range) -> list[TElem]:
    def vals(n):
        return (0, 1) if n % 4 == 2 else ((0,) if n % 2 else span)

    return [TElem.of(p, q, x, y, z) for x in vals(p) for y in vals(q) for z in vals(p + q)]


def criterion_6(seed: int = 0, trials: int = 100) -> CriterionResult:
    start = time.perf_counter()
    ck = _Checks()
    for p, q in ((2, 2), (2, 4), (4, 2), (4, 4), (2, 6), (4, 8)):
        els = _elements(p, q, range(-1, 2))
        zero = TElem.zero(p, q)
        for a in els:
            ck(add(a, zero) == a and whitney(a, zero) == a, f"identity at {a}")
            ck(add(a, neg(a)) == zero, f"+ inverse at {a}")
            ck(whitney(a, whitney_inverse(a)) == zero, f"whitney inverse at {a}")
            for b in els:
                ck(add(a, b) == add(b, a) and whitney(a, b) == whitney(b, a), f"commutativity {a} {b}")
                ck(assembly(add(a, b)) == assembly(a) + assembly(b), f"assembly additive {a} {b}")
                defect = assembly(whitney(a, b)) - assembly(a) - assembly(b)
                ck(defect == assembly(pairing(a, b)), f"whitney defect {a} {b}")
                for c in els:
                    ck(add(add(a, b), c) == add(a, add(b, c)), f"+ associativity {a} {b} {c}")
                    ck(whitney(whitney(a, b), c) == whitney(a, whitney(b, c)), f"(+) associativity {a} {b} {c}")
    return ck.result(6, "group laws on normal invariants", start)


def criterion_7(seed: int = 0, trials: int = 50) -> CriterionResult:
    start = time.perf_counter()
    ck = _Checks()
    rng = random.Random(seed)
    for t in range(trials):
        f, g = random_split_system(rng, max_rank=4, max_entry=3)
        rep = splitting_check(f, g)
        ck(rep.holds, f"system {t}: splitting check")
        hf = oracles.complex_homology_oracle(mapping_cone(f))
        hg = oracles.complex_homology_oracle(mapping_cone(g))
        hgf = oracles.complex_homology_oracle(mapping_cone(g.compose(f)))
        summed = {}
        for r in set(hf) | set(hg):
            a, b = hf.get(r, (0, ())), hg.get(r, (0, ()))
            summed[r] = (a[0] + b[0], tuple(sorted(a[1] + b[1])))
        # compare as multisets of primary-free data: rank and torsion invariant factors
        ok = {r: (v[0], _primary(v[1])) for r, v in summed.items()} == {
            r: (v[0], _primary(v[1])) for r, v in hgf.items()
        }
        ck(ok, f"system {t}: oracle comparison")
        ours = {r: (g_.free_rank, _primary(g_.torsion)) for r, g_ in rep.cone_gf.items()}
        ck(ours == {r: (v[0], _primary(v[1])) for r, v in hgf.items()}, f"system {t}: ours vs oracle")
    return ck.result(7, "splitting of composite cones", start)


def _primary(factors) -> tuple[int, ...]:
    """Prime-power decomposition, so sums of groups compare canonically."""
    out = []
    for f in factors:
        n, p = f, 2
        while n > 1:
            if n % p == 0:
                q = 1
                while n % p == 0:
                    n //= p
                    q *= p
                out.append(q)
            p += 1
    return tuple(sorted(out))


def criterion_8(seed: int = 0, trials: int = 100) -> CriterionResult:
    start = time.perf_counter()
    ck = _Checks()
    rng = random.Random(seed)
    s2 = SimplicialComplex.from_maximal(fixtures.boundary_simplex(2))
    s3 = SimplicialComplex.from_maximal(fixtures.boundary_simplex(3))
    for t in range(trials):
        a, b, c = (random_module(rng, s2) for _ in range(3))
        f, g = random_morphism(rng, a, b), random_morphism(rng, b, c)
        ck(check_support(compose(g, f)), f"pair {t}: composite is coface-supported")
    for t in range(min(trials, 50)):
        a, b, c = (random_module(rng, s3) for _ in range(3))
        f, g = random_morphism(rng, a, b), random_morphism(rng, b, c)
        ck(assemble(compose(g, f)) == assemble(g) @ assemble(f), f"pair {t}: assembly respects composition")
        ck(assemble(ZXMorphism.identity(a)) == IntMatrix.identity(assemble(a)), f"pair {t}: identities")
    dc = dual_cells(s2, 2)
    ck(dc.counts() == (4, 6, 4), f"cell counts {dc.counts()}")
    ck(dc.top_flag_total() == 24 and dc.partitions_top_flags(), "24 top flags partitioned among vertices")
    ck(all(len(c.top_flags) == 6 for s, c in dc.cells.items() if len(s) == 1), "6 flags per vertex")
    ck(dc.euler_characteristic() == 2, "Euler characteristic 2")
    for x, n in ((s2, 2), (s3, 3)):
        d = dual_cells(x, n)
        ck(all(c.dimension == n - (len(s) - 1) for s, c in d.cells.items()), f"dim D(sigma) on S^{n}")
        ck(d.boundary_matches(), f"boundary of dual cells on S^{n}")
    return ck.result(8, "(Z,X)-module suite", start)


def criterion_9(seed: int = 0, trials: int = 100) -> CriterionResult:
    start = time.perf_counter()
    ck = _Checks()

    def rejects(build: Callable, exc) -> bool:
        try:
            build()
        except exc:
            return True
        return False

    ck(
        rejects(lambda: ChainComplex(0, [1, 1, 1], {1: IntMatrix([[1]]), 2: IntMatrix([[1]])}), NotAComplexError),
        "ChainComplex rejects d^2 != 0",
    )
    x = SimplicialComplex.from_maximal([(0, 1)])
    a = ZXModule(x, {(0, 1): 1})
    b = ZXModule(x, {(0,): 1})
    ck(rejects(lambda: ZXMorphism(a, b, {((0,), (0, 1)): IntMatrix([[1]])}), SupportError), "ZXMorphism support")
    m = ZXModule(x, {(0,): 1})
    one = ZXMorphism(m, m, {((0,), (0,)): IntMatrix([[1]])})
    ck(
        rejects(lambda: ZXChainComplex(x, 1, {0: m, 1: m, 2: m}, {1: one, 2: one}), NotAComplexError),
        "ZXChainComplex rejects d^2 != 0",
    )
    bad = ZXMorphism(a, b, {((0,), (0, 1)): IntMatrix([[1]])}, check=False)
    ck(
        rejects(lambda: ZXChainComplex(x, 1, {1: a, 0: b}, {1: bad}), SupportError),
        "ZXChainComplex rejects support violations",
    )
    ck(rejects(lambda: TElem(4, 4, Z2(1), 0, 0), TypeError), "Z slot rejects a Z/2 value")
    ck(rejects(lambda: TElem(2, 4, 1, 0, Z2(0)), TypeError), "Z/2 slot rejects an int")
    ck(rejects(lambda: TElem(3, 4, 0, 0, 5), TypeError), "trivial slot rejects 5")
    ck(rejects(lambda: TElem.of(2, 2, 3, 0, 0), ValueError), "Z/2 slot rejects 3")
    ck(rejects(lambda: TElem(1, 4, 0, 0, 0), ValueError), "p >= 2 enforced")
    ck(not verify_poincare(fixtures.point(2)), "determinant-2 point is not Poincaré")
    ck(verify_poincare(fixtures.point(1)), "unit point is Poincaré")
    return ck.result(9, "constructors reject invalid input", start)


CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
)


def run_all(seed: int = 0, trials: int | None = None) -> list[CriterionResult]:
    out = []
    for fn in CRITERIA:
        out.append(fn(seed) if trials is None else fn(seed, trials))
    return out
