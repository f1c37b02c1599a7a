"""Exact Kuperberg invariants of Heegaard diagrams over finite-dimensional Hopf algebras."""

from .heegaard import HeegaardCode, PlanarHeegaardDiagram, builtin, builtin_planar, derive_code
from .hopf import HopfAlgebra, builtin_hopf, group_algebra
from .kuperberg import invariant
from .planar import planar_invariant

__all__ = ["HeegaardCode", "PlanarHeegaardDiagram", "builtin", "builtin_planar", "derive_code",
           "HopfAlgebra", "builtin_hopf", "group_algebra", "invariant", "planar_invariant"]
__version__ = "0.1.0"
