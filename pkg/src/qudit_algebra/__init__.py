"""Clock-and-shift operator algebras on finite lattices, verified exactly.

The package constructs the two standard operator families on a d-point
lattice -- the unitary clock/shift pair on a periodic lattice and the
nilpotent raising/lowering pair on a non-periodic one -- together with their
projection calculus, matrix-unit representations, cross-family conversion
formulas, and two-factor product-lattice constructions.  Every defining
relation ships as a named, runnable check that evaluates either exactly
(cyclotomic rational arithmetic, residual literally zero) or numerically
(complex floating point, residual below a configurable tolerance).
"""

from .cyclo import CycloScalar, CyclotomicPolynomial, cyclotomic_polynomial, root_power

__version__ = "0.1.0"

__all__ = [
    "CycloScalar",
    "CyclotomicPolynomial",
    "cyclotomic_polynomial",
    "root_power",
    "__version__",
]
