"""Exact Fibonacci-Hessenberg and Lorentz-product determinants, with a claims audit."""

from fibhess.algebra import GaussianInt, Poly, fib, lucas, render
from fibhess.determinants import cofactor_det, det_of_lorentz_product, hessenberg_det
from fibhess.matrix import (
    SquareMatrix,
    SubstitutionMode,
    build,
    build_a,
    build_b,
    build_family,
    build_substituted,
    lorentz_identity,
    lorentz_mul,
    standard_mul,
)

__all__ = [
    "GaussianInt",
    "Poly",
    "SquareMatrix",
    "SubstitutionMode",
    "build",
    "build_a",
    "build_b",
    "build_family",
    "build_substituted",
    "cofactor_det",
    "det_of_lorentz_product",
    "fib",
    "hessenberg_det",
    "lorentz_identity",
    "lorentz_mul",
    "lucas",
    "render",
    "standard_mul",
]
