"""Exact computations on nilpotent orbits, sheets, singular vectors and W-algebra data."""

__version__ = "0.1.0"
