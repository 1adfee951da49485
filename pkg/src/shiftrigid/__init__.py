"""Rigidity and exact counting for interval representations of a line with a shift."""

from shiftrigid.alpha import (
    AlphaRep,
    FamilySpec,
    FiberAnomaly,
    GridOrbit,
    alpha_is_rigid,
    count_alpha_formula,
    enumerate_alpha,
    expand_fibers,
    tau,
    validate_type_alpha,
)
from shiftrigid.homext import (
    Cyclic,
    DiscreteInterval,
    LinearWindow,
    RepSpec,
    euler_form,
    hom_ext_dims,
    interval_ext,
)
from shiftrigid.intervals import NEG_INF, POS_INF, Endpoint, Interval, is_compatible, is_rigid
from shiftrigid.orbits import (
    FiniteOrbit,
    LeftRayOrbit,
    OrbitSet,
    RightRayOrbit,
    count_formula,
    enumerate_maximal_rigid,
)

__all__ = [
    "AlphaRep",
    "Cyclic",
    "DiscreteInterval",
    "Endpoint",
    "FamilySpec",
    "FiberAnomaly",
    "FiniteOrbit",
    "GridOrbit",
    "Interval",
    "LeftRayOrbit",
    "LinearWindow",
    "NEG_INF",
    "OrbitSet",
    "POS_INF",
    "RepSpec",
    "RightRayOrbit",
    "alpha_is_rigid",
    "count_alpha_formula",
    "count_formula",
    "enumerate_alpha",
    "enumerate_maximal_rigid",
    "euler_form",
    "expand_fibers",
    "hom_ext_dims",
    "interval_ext",
    "is_compatible",
    "is_rigid",
    "tau",
    "validate_type_alpha",
]

__version__ = "0.1.0"
