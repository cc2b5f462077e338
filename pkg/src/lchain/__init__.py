"""Exact chain-level L-theory over the integers.

Integer matrices and Smith normal form (``intmat``), chain complexes
(``chain``), quadratic and symmetric structures (``qstruct``), Poincaré
complexes and their L-classes (``poincare``), the sphere-product calculator
(``spherecalc``) and (Z, X)-modules (``zxmod``).
"""

from .chain import ChainComplex, ChainMap, dual, is_quasi_isomorphism, mapping_cone, splitting_check, tensor
from .intmat import AbelianGroup, IntMatrix, homology_at, smith_normal_form
from .lgroups import LClass, Z2, lgroup
from .poincare import PoincareComplex, l_class, product, verify_poincare
from .qstruct import StructureCycle, q_group, symmetrize

__all__ = [
    "AbelianGroup",
    "ChainComplex",
    "ChainMap",
    "IntMatrix",
    "LClass",
    "PoincareComplex",
    "StructureCycle",
    "Z2",
    "dual",
    "homology_at",
    "is_quasi_isomorphism",
    "l_class",
    "lgroup",
    "mapping_cone",
    "product",
    "q_group",
    "smith_normal_form",
    "splitting_check",
    "symmetrize",
    "tensor",
    "verify_poincare",
]

__version__ = "0.1.0"
