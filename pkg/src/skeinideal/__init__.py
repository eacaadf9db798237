"""Exact Kauffman bracket ideals of ball tangles and genus-1 tangles.

The library computes Kauffman brackets by a sparse Temperley-Lieb transfer
matrix, builds the finite generating sets of bracket ideals for tangles in a
ball or a solid torus, decides ideal (non)triviality with strong Groebner
bases over the integers, and reruns the braid-census search for tangles that
cannot embed in the unknot.  Everything is exact: integer and Laurent
arithmetic at arbitrary precision, no floats anywhere in a verdict path.
"""

from __future__ import annotations

__version__ = "0.1.0"

from . import laurent  # noqa: F401  (re-exported module namespaces)

__all__ = ["laurent", "__version__"]
