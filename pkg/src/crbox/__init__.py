"""Numerical engine for the weakly nonlinear large-box limit of 2D cubic NLS."""

__version__ = "0.1.0"
