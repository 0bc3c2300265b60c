"""Exact verification toolkit for a catalog of K3 surfaces covered by Fermat
surfaces: character combinatorics, Jacobi-sum zeta factors, brute-force point
counts, and lattice/discriminant-form checks.

Everything is integer/rational exact; no floating point is used anywhere.
"""

__version__ = "0.1.0"
