"""Exact constructions and finite-field arithmetic for twists of hyperelliptic
and superelliptic curves."""

__version__ = "0.1.0"
