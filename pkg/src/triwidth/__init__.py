"""Triangulated 3-manifolds, dual-graph widths and Heegaard splittings."""

__version__ = "0.1.0"
