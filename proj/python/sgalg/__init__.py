"""Exact invariants of affine semigroups <a, a+d, ..., a+kd> in N^2."""

from ._sgalg import Family, SgalgError, run_cli

__all__ = ["Family", "SgalgError", "run_cli"]
