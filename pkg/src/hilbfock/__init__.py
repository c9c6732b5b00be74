"""Exact Fock-space operator calculus for Hilbert schemes of points."""

__version__ = "0.1.0"
