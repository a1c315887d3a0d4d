"""Exact basket calculus for 3-fold terminal quotient singularities."""

__version__ = "0.1.0"
