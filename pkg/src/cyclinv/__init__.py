"""Exact invariant theory of the cyclic group acting on the free associative algebra."""

__version__ = "0.1.0"
