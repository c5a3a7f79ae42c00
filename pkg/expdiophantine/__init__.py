"""Exact verifiers for exponential Diophantine equations."""

__version__ = "1.0.0"
