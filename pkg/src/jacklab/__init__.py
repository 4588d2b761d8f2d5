"""Exact Jack-polynomial generating series for non-oriented constellations."""

__version__ = "0.1.0"
