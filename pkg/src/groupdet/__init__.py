"""Exact integer group determinants, their attained value sets, and
verified witnesses for every group of order at most 14 (plus Z_16, D_16
and D_18)."""

__version__ = "0.1.0"

from .groups import (
    GroupSpec,
    GroupTable,
    abelian_product,
    alternating4,
    build_group,
    convolve,
    cyclic,
    dicyclic,
    dihedral,
)
from .exactdet import group_determinant
from .laurent import LaurentPoly
from .measures import (
    MeasureFactorization,
    a4_determinant,
    cyclic_measure,
    dicyclic_measure,
    dihedral_measure,
    factored_profile,
    z2_cubed_measure,
    zn_z2_measure,
)

__all__ = [
    "GroupSpec",
    "GroupTable",
    "LaurentPoly",
    "MeasureFactorization",
    "abelian_product",
    "alternating4",
    "a4_determinant",
    "build_group",
    "convolve",
    "cyclic",
    "cyclic_measure",
    "dicyclic",
    "dicyclic_measure",
    "dihedral",
    "dihedral_measure",
    "factored_profile",
    "group_determinant",
    "z2_cubed_measure",
    "zn_z2_measure",
]
