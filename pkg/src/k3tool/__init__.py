"""Modular invariants, elliptic fibrations and lattices of Inose-form K3 surfaces."""

__version__ = "0.1.0"
