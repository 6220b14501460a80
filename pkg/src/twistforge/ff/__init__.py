"""Finite-field engine: fields, point counts, Jacobi sums, zeta numerators."""
from .counting import char_sum_count, count_points, count_points_double_loop, is_pth_power
from .curve import Form, SuperCurve
from .fields import FiniteField, ext_field, field, prime_field, smallest_irreducible
from .jacobi import jacobi_sum, jacobi_sums
from .zeta import (
    ZetaReport,
    jacobian_order,
    newton_polygon_slopes,
    semi_primitive_numerator,
    zeta_numerator_jacobi,
    zeta_numerator_newton,
    zeta_report,
)

__all__ = [
    "FiniteField",
    "Form",
    "SuperCurve",
    "ZetaReport",
    "char_sum_count",
    "count_points",
    "count_points_double_loop",
    "ext_field",
    "field",
    "is_pth_power",
    "jacobi_sum",
    "jacobi_sums",
    "jacobian_order",
    "newton_polygon_slopes",
    "prime_field",
    "semi_primitive_numerator",
    "smallest_irreducible",
    "zeta_numerator_jacobi",
    "zeta_numerator_newton",
    "zeta_report",
]
