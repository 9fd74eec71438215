"""Spherical curves, inverse-half-twisted splices, and gon classification."""

__version__ = "0.1.0"
