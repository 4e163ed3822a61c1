"""Exact verification toolkit for an explicit family of genus-one plane cubics
that have points over every completion of Q but no rational point."""

__version__ = "0.1.0"
