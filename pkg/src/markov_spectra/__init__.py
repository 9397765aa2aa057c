"""Exact tools for the Lagrange and Markov spectra near 1 + 3/sqrt(2)."""

__version__ = "0.1.0"
