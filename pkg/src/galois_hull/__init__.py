"""s-Galois hulls of linear codes over finite fields, hull decompositions,
and the entanglement-assisted quantum codes built from them."""

from .codes import (
    DEFAULT_DISTANCE_BUDGET,
    DistanceReport,
    HullDecomposition,
    LinearCode,
    code_from_generator,
    galois_dual,
    galois_form,
    hull,
    hull_decompose,
    is_galois_lcd,
    is_mds,
    lcd_certificate,
    min_distance,
)
from .constructions import (
    GabidulinSpec,
    MatrixProductSpec,
    cyclic_code,
    find_self_dual_basis,
    gabidulin_code,
    gabidulin_hull_dim_formula,
    gabidulin_spec,
    matrix_product_code,
    matrix_product_dual,
    matrix_product_hull,
    negacyclic_code,
)
from .eaqec import (
    EaqecParams,
    FamilyRow,
    classify_me,
    eaqec_from_hull_decomposition,
    eaqec_from_lcd,
    family_cor41,
    family_cor42,
    family_cor43,
    family_thm52_53,
)
from .field import FieldElement, FiniteField, embedding, field_create, field_from_order, frobenius, trace
from .linalg import MatrixGF, Subspace, inverse, is_nonsingular, kernel, rank, rref

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
