"""Continuity spectra: which iterates of a bijection are continuous."""
from .submonoid import CanonicalSubmonoid, canonicalize, closure_oracle, contains, is_negation_closed, window
from .piecewise import (
    ColumnSpace,
    Piece,
    PiecewiseMap,
    build_line_map,
    build_line_space,
    compose,
    invert,
    is_bijection,
    is_continuous,
    power,
    spectrum,
)

__version__ = "0.1.0"
