"""Exact arithmetic for the discrete 2D Toda molecule, its lattice-path
combinatorics, and multiplicative partition functions for reverse plane
partitions."""

__version__ = "0.1.0"
