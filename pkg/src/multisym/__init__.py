"""Exact multi-indicial symmetric polynomials."""

from .indexing import Context, Label, cardinalities, flat_index, label_of, q, universe
from .partitions import MultiPartition, Partition, staircase, validate_multipartition
from .polynomial import Polynomial, determinant, exact_div
from .projections import ProjectionKind, diagonal, horizontal, project, vertical
from .schur import alternant, schur, schur_oracle, vandermonde_product
from .symfun import homogeneous_basis, monomial_symmetric

__all__ = [
    "Context",
    "Label",
    "MultiPartition",
    "Partition",
    "Polynomial",
    "ProjectionKind",
    "alternant",
    "cardinalities",
    "determinant",
    "diagonal",
    "exact_div",
    "flat_index",
    "homogeneous_basis",
    "horizontal",
    "label_of",
    "monomial_symmetric",
    "project",
    "q",
    "schur",
    "schur_oracle",
    "staircase",
    "universe",
    "validate_multipartition",
    "vandermonde_product",
    "vertical",
]
