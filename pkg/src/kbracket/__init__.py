"""Exact Kauffman bracket computation and extreme-coefficient analysis."""

from .laurent import LaurentPoly, delta_pow, span_min_max

__all__ = ["LaurentPoly", "delta_pow", "span_min_max"]
