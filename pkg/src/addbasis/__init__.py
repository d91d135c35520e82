"""Exact toolkit for additive bases: eventually periodic integer sets,
h-fold sumsets, basis orders before and after removing a finite subset, and
the catalog of removal-order upper bounds."""

from .errors import (
    AddBasisError,
    CapExceeded,
    EmptyOperand,
    EmptySet,
    FiniteSet,
    HoleAboveThreshold,
    ModulusMismatch,
    NotABasis,
    NotSaturable,
    ParseError,
    PreconditionViolated,
    UnknownFormat,
    ValidationError,
    XNotSubset,
)
from .intset import (
    EventuallyPeriodicSet,
    FiniteIntSet,
    make_eps,
    naturals,
    project_classes,
    saturate_mod,
)

__version__ = "0.1.0"
