"""Toric specialization: polytopes, PL metrics, sup-norms, energies and Fekete points."""

from .energy import (
    canonical_metric,
    energy,
    energy_by_halfspaces,
    ma_finite_differences,
    pullback,
    pullback_check,
    sup_norm_weights,
    toric_pair,
    transfinite_diameter,
)
from .fekete import candidates, fekete_search, m_diameter, vandermonde_assignment
from .plmetric import AtomicMeasure, MaxAffine, PLMetric, envelope, legendre, ma_measure
from .polytope import LatticePolytope, lattice_points

__all__ = [
    "AtomicMeasure",
    "LatticePolytope",
    "MaxAffine",
    "PLMetric",
    "candidates",
    "canonical_metric",
    "energy",
    "energy_by_halfspaces",
    "envelope",
    "fekete_search",
    "lattice_points",
    "legendre",
    "m_diameter",
    "ma_finite_differences",
    "ma_measure",
    "pullback",
    "pullback_check",
    "sup_norm_weights",
    "toric_pair",
    "transfinite_diameter",
    "vandermonde_assignment",
]
