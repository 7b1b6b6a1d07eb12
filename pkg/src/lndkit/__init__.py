"""Exact polynomial toolkit for locally nilpotent derivations and weighted hypersurfaces."""

__version__ = "0.1.0"
