"""Exact arithmetic: cyclotomic numbers, polynomials and rational functions."""
from .cyclotomic import CycInt, cyc_conjugate, cyc_norm, cyc_norm_resultant, cyclotomic_polynomial, euler_phi
from .parse import parse_curve, parse_poly, parse_ratfunc
from .poly import VARIABLES, MultiPoly, gcd_generic, poly_gcd
from .printing import format_poly, format_ratfunc
from .ratfunc import RatFunc, apply_root_automorphism, evaluate, ratfunc_normalize, substitute

__all__ = [
    "CycInt",
    "MultiPoly",
    "RatFunc",
    "VARIABLES",
    "apply_root_automorphism",
    "cyc_conjugate",
    "cyc_norm",
    "cyc_norm_resultant",
    "cyclotomic_polynomial",
    "euler_phi",
    "evaluate",
    "format_poly",
    "format_ratfunc",
    "gcd_generic",
    "parse_curve",
    "parse_poly",
    "parse_ratfunc",
    "poly_gcd",
    "ratfunc_normalize",
    "substitute",
]
