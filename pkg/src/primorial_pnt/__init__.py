"""Primorial reformulation of the prime number theorem."""

__version__ = "0.1.0"
