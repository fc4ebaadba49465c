"""Exact arithmetic in Z_n[x1..xm] and deciders for the diagonal property
of its multiplication table (``ab = 1`` only when ``a = b``)."""

from .diagonal import (
    DiagonalReport,
    Method,
    counterexample_unit,
    diagonal_poly_enumerate,
    diagonal_poly_theorem,
    diagonal_zn_involution,
    diagonal_zn_table,
    structured_unit_generator,
    subring_restriction_check,
)
from .modring import Residue, RingSpec, make_ring, unit_group_exponent
from .polyring import Polynomial, enumerate_polynomials, parse_polynomial, total_degree
from .units import UnitCertificate, invert_unit, is_involution, is_unit_poly

__version__ = "0.1.0"
