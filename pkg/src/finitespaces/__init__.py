"""Hopf-algebraic and homotopy computations on finite topological spaces."""

from .scalar import Q, Scalar
from .spaces import (
    FiniteSpace,
    OpenSet,
    Preorder,
    canonicalize,
    dual,
    expand,
    from_open_sets,
    minimal_open,
    open_sets,
    restrict,
)

__all__ = [
    "FiniteSpace",
    "OpenSet",
    "Preorder",
    "Q",
    "Scalar",
    "canonicalize",
    "dual",
    "expand",
    "from_open_sets",
    "minimal_open",
    "open_sets",
    "restrict",
]
