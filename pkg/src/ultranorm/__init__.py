"""Ultrametric norms over valued fields, their volumes and metrics, and toric energies."""

from .errors import (
    ContainmentError,
    DimensionMismatchError,
    FieldMismatchError,
    GeometryError,
    NotConcaveError,
    SingularMatrixError,
    TrivialValuationError,
    UltranormError,
)
from .graded import GradedNormPair, estimate_limit, jumping_values, scaled_volume
from .metrics import Chi, chi_distance, chi_norm, majorizes
from .norms import (
    Codiagonalization,
    DiagonalNorm,
    Subspace,
    annihilator,
    codiagonalize,
    coset_max,
    dGI,
    dual,
    eval_norm,
    gram_schmidt_project,
    lattice_norm,
    quotient,
    restrict,
    same_norm,
    sup_ratio,
)
from .scalars import LaurentQt, PAdicQ, RatFunc, TrivialQ, ValuedField, ValuedScalar, arith, valuation
from .volumes import content, det_norm, relative_volume, successive_minima

__version__ = "0.1.0"
