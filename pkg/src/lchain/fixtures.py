"""Shipped fixtures: forms, small complexes and sphere triangulations.

Each JSON file under ``fixtures/`` carries a ``note`` saying where its
numbers come from. Set ``LCHAIN_FIXTURES`` to read them from elsewhere.
"""

from __future__ import annotations

import itertools
import json
import os
from pathlib import Path

from .chain import ChainComplex
from .intmat import IntMatrix
from .poincare import PoincareComplex, quadratic_form, symmetric_form
from .zxmod import SimplicialComplex, ZXChainComplex, ZXModule, ZXMorphism

# E8 Dynkin diagram, Bourbaki numbering shifted to start at 0
E8_EDGES = ((0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3))


def e8_quadratic_matrix() -> IntMatrix:
    """Upper-triangular ``psi`` with ``psi + psi^T`` the positive definite E8 form."""
    m = [[0] * 8 for _ in range(8)]
    for i in range(8):
        m[i][i] = 1
    for a, b in E8_EDGES:
        i, j = min(a, b), max(a, b)
        m[i][j] = -1
    return IntMatrix(m)


def e8_form() -> IntMatrix:
    psi = e8_quadratic_matrix()
    return psi + psi.T


HYPERBOLIC_PSI = IntMatrix([[0, 1], [0, 0]])
ARF_PSI = IntMatrix([[1, 1], [0, 1]])


def e8() -> PoincareComplex:
    return quadratic_form(e8_quadratic_matrix(), 0)


def hyperbolic(n: int = 0) -> PoincareComplex:
    return quadratic_form(HYPERBOLIC_PSI, n)


def arf_form() -> PoincareComplex:
    """``q(e) = q(f) = 1``, ``lambda(e, f) = 1`` in dimension 2."""
    return quadratic_form(ARF_PSI, 2)


def point(scale: int = 1) -> PoincareComplex:
    return symmetric_form([[scale]], 0)


def cone2() -> ChainComplex:
    """``Z --2--> Z`` in degrees 1 and 0."""
    return ChainComplex.from_differentials(0, [1, 1], [[[2]]])


def zx_at_top(cycle: bool) -> ZXChainComplex:
    """A complex over one triangle, concentrated at the 2-simplex.

    With ``cycle`` it is ``Z --1--> Z`` in degrees 0, -1, which is contractible;
    otherwise a single ``Z`` in degree 0, which fails acyclicity at the top.
    """
    x = SimplicialComplex.from_maximal([(0, 1, 2)])
    top = (0, 1, 2)
    if not cycle:
        return ZXChainComplex(x, 2, {0: ZXModule(x, {top: 1})})
    m = ZXModule(x, {top: 1})
    return ZXChainComplex(x, 2, {0: m, -1: m}, {0: ZXMorphism(m, m, {(top, top): [[1]]})})


def boundary_simplex(n: int) -> list[tuple[int, ...]]:
    """Maximal simplices of the boundary of the ``(n+1)``-simplex, a triangulated ``S^n``."""
    return [tuple(s) for s in itertools.combinations(range(n + 2), n + 1)]


_NOTES = {
    "e8": "E8 quadratic form psi (upper triangular, unit diagonal); psi + psi^T is the E8 Cartan matrix, signature 8.",
    "hyperbolic": "Hyperbolic quadratic plane psi = [[0,1],[0,0]] in dimension 0; lambda has determinant -1.",
    "arf": "Quadratic form in dimension 2 on C_1 = Z^2 with q(e) = q(f) = 1 and lambda(e,f) = 1; Arf invariant 1.",
    "hyperbolic2": "Hyperbolic quadratic form in dimension 2 on C_1 = Z^2; Arf invariant 0.",
    "point": "Point complex with phi_0 = 1 (x) 1 in dimension 0.",
    "point2": "Point complex with phi_0 = 2 (1 (x) 1); the duality map has cokernel Z/2, so it is not Poincaré.",
    "cone2": "Z --2--> Z in degrees 1 and 0; H_0 = Z/2, H_1 = 0.",
    "sphere2": "Boundary of the 3-simplex, a triangulated 2-sphere.",
    "sphere3": "Boundary of the 4-simplex, a triangulated 3-sphere.",
    "zx_cone": "Z --1--> Z placed at the 2-simplex of a triangle; passes the cycle conditions.",
    "zx_class": "A single Z in degree 0 at the 2-simplex of a triangle; not acyclic at the top simplex.",
}


def _build() -> dict[str, dict]:
    out = {
        "e8": e8().to_json_obj(),
        "hyperbolic": hyperbolic().to_json_obj(),
        "arf": arf_form().to_json_obj(),
        "hyperbolic2": hyperbolic(2).to_json_obj(),
        "point": point(1).to_json_obj(),
        "point2": point(2).to_json_obj(),
        "cone2": cone2().to_json_obj(),
        "sphere2": {"vertices": 4, "simplices": [list(s) for s in boundary_simplex(2)]},
        "sphere3": {"vertices": 5, "simplices": [list(s) for s in boundary_simplex(3)]},
        "zx_cone": zx_at_top(True).to_json_obj(),
        "zx_class": zx_at_top(False).to_json_obj(),
    }
    for k, v in out.items():
        v["note"] = _NOTES[k]
    return out


def fixture_dir() -> Path:
    env = os.environ.get("LCHAIN_FIXTURES")
    return Path(env) if env else Path(__file__).with_name("fixtures")


def fixture_path(name: str) -> Path:
    return fixture_dir() / f"{name}.json"


def load_fixture(name: str) -> dict:
    """Raw JSON of a shipped fixture by name, e.g. ``load_fixture("e8")``."""
    path = fixture_path(name)
    with open(path) as fh:
        return json.load(fh)


def write_fixtures(directory: Path | None = None) -> list[Path]:
    """Regenerate the JSON fixture files."""
    directory = Path(directory) if directory else Path(__file__).with_name("fixtures")
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, obj in _build().items():
        p = directory / f"{name}.json"
        p.write_text(json.dumps(obj, indent=1) + "\n")
        paths.append(p)
    return paths


if __name__ == "__main__":
    for p in write_fixtures():
        print(p)
