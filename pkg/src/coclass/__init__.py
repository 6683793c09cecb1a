"""Desk-scale Galois cohomology through etale algebras, Kummer data,
and local symbols."""

__version__ = "0.1.0"
