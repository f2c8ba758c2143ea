"""Exact computations with Jacobian elliptic fibrations on the K3 double
plane branched along six lines."""

__version__ = "0.1.0"
