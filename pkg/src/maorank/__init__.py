"""Exact q-series engine and partition-rank oracle for the M2 rank difference mod 6."""

from .series import LaurentSeries, monomial, one, zero

__version__ = "0.1.0"

__all__ = ["LaurentSeries", "monomial", "one", "zero"]
