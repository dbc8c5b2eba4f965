"""Exact integral bases, Gram matrices and lattice-shape statistics of pure sextic fields."""

__version__ = "0.1.0"
