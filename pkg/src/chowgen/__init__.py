"""Exact integral Chow ring presentations of the space of conics in P^r."""

__version__ = "1.0.0"
