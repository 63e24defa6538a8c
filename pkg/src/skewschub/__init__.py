"""Double Schubert polynomials of skew Weyl group elements in types A, B, C, D.

Two independent computations are provided: coefficient extraction in the
nilCoxeter algebra (``nilcoxeter``) and sums over skew tableaux
(``tableaux``).  They agree on every compatible pair we have checked.
"""
from .nilcoxeter import (
    schubert_A,
    schubert_B,
    schubert_C,
    schubert_D,
    stanley_E,
    stanley_F,
)
from .poly import Polynomial, x, y, z
from .shapes import TypedPartition, grassmannian, is_compatible_pair, skew_element, skew_pairs
from .tableaux import (
    double_schur_determinant,
    enumerate_bitableaux,
    enumerate_k_tritableaux,
    enumerate_typed_tritableaux,
    mixed_stanley,
    tableau_eta,
    tableau_schur,
    tableau_theta,
)
from .weyl import BOX, GroupTag, SignedPermutation

__all__ = [
    "BOX", "GroupTag", "Polynomial", "SignedPermutation", "TypedPartition",
    "double_schur_determinant", "enumerate_bitableaux", "enumerate_k_tritableaux",
    "enumerate_typed_tritableaux", "grassmannian", "is_compatible_pair", "mixed_stanley",
    "schubert_A", "schubert_B", "schubert_C", "schubert_D", "skew_element", "skew_pairs",
    "stanley_E", "stanley_F", "tableau_eta", "tableau_schur", "tableau_theta", "x", "y", "z",
]
