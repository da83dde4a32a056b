"""Exact-arithmetic lab for depth-2/3 multiple zeta value combinatorics."""

__version__ = "0.1.0"
