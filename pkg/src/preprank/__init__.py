"""Exact computations with graded preprojective algebras and maximal-rank tensor maps."""

__version__ = "0.1.0"
