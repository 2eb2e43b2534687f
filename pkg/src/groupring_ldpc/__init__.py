"""Quasi-cyclic LDPC codes from group rings."""

__version__ = "0.1.0"
