"""Exact algebra for the enhanced nilHecke algebra, its p-derivations and
the small quantum sl2 data attached to them."""

__version__ = "0.1.0"
