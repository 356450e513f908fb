"""Exact symbolic computation in quantum matrix superalgebras.

The package machine-checks presentations, coactions and basis theorems for
the quantum matrix superalgebra of a 4|1 supermatrix, the quantum
Grassmannian of 2|0 planes, its lower parabolic quotient and the big cell
(quantum Minkowski superspace).  All arithmetic is exact over the ring of
integer Laurent polynomials in the deformation parameter q.
"""

from .laurent import Laurent
from .freealg import Generator, FreeSuperalgebra, Element, TensorElement
from .rewrite import Rule, Presentation

__all__ = [
    "Laurent",
    "Generator",
    "FreeSuperalgebra",
    "Element",
    "TensorElement",
    "Rule",
    "Presentation",
]
