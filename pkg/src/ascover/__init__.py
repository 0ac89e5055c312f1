"""Genus-3 curves with many involutions over binary fields.

Explicit families, their elliptic quotients, Artin-Schreier cover criteria
for triples of elliptic curves, and maximal-curve constructions, all backed
by exact point counting.
"""

from .gf2 import GF2n, make_field
from . import ec, genus3, quotients, covers, maximal

__all__ = ["GF2n", "make_field", "ec", "genus3", "quotients", "covers", "maximal"]
__version__ = "0.1.0"
