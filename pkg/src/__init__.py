"""Exact construction of Gorenstein point sets from Hadamard products of lines."""

__version__ = "0.1.0"
