"""Filtered CW complexes with exact weighted invariants.

Exact arithmetic throughout: weights and polynomial data are rationals
(plus -inf for eternal cells), every identity is decidable equality.
"""

from .complexes import Cell, FilteredComplex, Violation, point, product, smash, sphere, wedge
from .errors import (
    EulerMismatch,
    FCWError,
    InvalidBoundaries,
    NegativeWeight,
    NonIntegerCoefficient,
    NonPositiveBase,
    ParseError,
    UnsupportedCell,
    ValidationError,
)
from .fileformat import parse_complex, parse_document, parse_weight, serialize_complex
from .invariants import (
    InvariantReport,
    euler_polynomial,
    invariant_report,
    k_class,
    matching_number,
    size_polynomial,
    weighted_euler_char,
)
from .morse import (
    CriticalPoint,
    Linearization,
    LinearizationStats,
    MorseDatum,
    bound_size_spheres,
    bound_size_wedges,
    canonical_linearization,
    euler_poly_rel,
    linearization_stats,
    morse_complex,
    parse_morse_datum,
)
from .persistence import Bar, Barcode, barcode, bottleneck, euler_from_barcode
from .polynomial import Polynomial
from .rationals import NEG_INF, POS_INF, format_extended, parse_extended

__version__ = "0.1.0"

__all__ = [
    "Bar",
    "Barcode",
    "Cell",
    "CriticalPoint",
    "EulerMismatch",
    "FCWError",
    "FilteredComplex",
    "InvalidBoundaries",
    "InvariantReport",
    "Linearization",
    "LinearizationStats",
    "MorseDatum",
    "NEG_INF",
    "NegativeWeight",
    "NonIntegerCoefficient",
    "NonPositiveBase",
    "POS_INF",
    "ParseError",
    "Polynomial",
    "UnsupportedCell",
    "ValidationError",
    "Violation",
    "barcode",
    "bottleneck",
    "bound_size_spheres",
    "bound_size_wedges",
    "canonical_linearization",
    "euler_from_barcode",
    "euler_poly_rel",
    "euler_polynomial",
    "format_extended",
    "invariant_report",
    "k_class",
    "linearization_stats",
    "matching_number",
    "morse_complex",
    "parse_complex",
    "parse_document",
    "parse_extended",
    "parse_morse_datum",
    "parse_weight",
    "point",
    "product",
    "serialize_complex",
    "size_polynomial",
    "smash",
    "sphere",
    "wedge",
    "weighted_euler_char",
]
