"""Two-dimensional lattice translation operators from one-dimensional pieces.

A d1 x d2 grid of sites, walked row by row (d1 horizontal sites per row, d2
rows), is isomorphic to a single chain of D = d1*d2 sites.  On the tensor
product of the two one-dimensional operator algebras the chain's raising
operator becomes

    1 (x) raise_1  +  raise_2 (x) lower_1^(d1-1)

(step right within a row; at a row's end, jump to the start of the next
row), and the periodic translation additionally wraps the final corner
around via  lower_2^(d2-1) (x) lower_1^(d1-1).

The first tensor factor indexes rows (the vertical direction, d2) and the
second indexes columns (horizontal, d1), so the composite basis index of
row j, column i is j*d1 + i, matching both the Kronecker block layout of
the matrix module and the flat chain order.  ``flatten_permutation`` makes
that identification explicit as a basis-relabelling permutation matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import matrix
from .lattice_ops import EXACT, FLOAT, LatticeConfig, make_a, make_a_dagger, make_U
from .matrix import OperatorMatrix, from_rows, identity, kron, matpow


@dataclass(frozen=True)
class ProductLatticeConfig:
    """Grid extent (d1 horizontal, d2 vertical) plus arithmetic settings."""

    d1: int
    d2: int
    mode: str = EXACT
    tolerance: float = matrix.DEFAULT_TOLERANCE

    def __post_init__(self):
        if self.d1 < 2 or self.d2 < 2:
            raise ValueError(
                f"both factors must satisfy d >= 2, got d1={self.d1}, d2={self.d2}"
            )
        if self.mode not in (EXACT, FLOAT):
            raise ValueError(f"mode must be '{EXACT}' or '{FLOAT}', got {self.mode!r}")
        if self.tolerance < 0:
            raise ValueError(f"tolerance must be nonnegative, got {self.tolerance}")

    @property
    def dim(self) -> int:
        return self.d1 * self.d2

    @property
    def scalar_mode(self):
        if self.mode == EXACT:
            import math

            return matrix.ExactMode(math.lcm(self.d1, self.d2))
        return matrix.FloatMode()

    def horizontal(self) -> LatticeConfig:
        return LatticeConfig(d=self.d1, mode=self.mode, tolerance=self.tolerance)

    def vertical(self) -> LatticeConfig:
        return LatticeConfig(d=self.d2, mode=self.mode, tolerance=self.tolerance)


def flat_config(pcfg: ProductLatticeConfig) -> LatticeConfig:
    """Configuration of the equivalent one-dimensional D-site chain."""
    return LatticeConfig(d=pcfg.dim, mode=pcfg.mode, tolerance=pcfg.tolerance)


@lru_cache(maxsize=None)
def coproduct_a_dagger(pcfg: ProductLatticeConfig) -> OperatorMatrix:
    """Raising operator of the grid: right steps plus row-end jumps.

    Advances column i, wrapping column d1-1 of row j to column 0 of row
    j+1, and annihilating the final site (row d2-1, column d1-1).
    """
    h, v = pcfg.horizontal(), pcfg.vertical()
    step = kron(identity(pcfg.d2, v.scalar_mode), make_a_dagger(h))
    jump = kron(make_a_dagger(v), matpow(make_a(h), pcfg.d1 - 1))
    return step + jump


@lru_cache(maxsize=None)
def coproduct_U(pcfg: ProductLatticeConfig) -> OperatorMatrix:
    """Periodic translation of the grid: the raising operator plus the corner wrap."""
    return coproduct_a_dagger(pcfg) + corner_wrap_term(pcfg)


@lru_cache(maxsize=None)
def corner_wrap_term(pcfg: ProductLatticeConfig) -> OperatorMatrix:
    """The rank-one wrap mapping the last site back to the first."""
    h, v = pcfg.horizontal(), pcfg.vertical()
    return kron(matpow(make_a(v), pcfg.d2 - 1), matpow(make_a(h), pcfg.d1 - 1))


@lru_cache(maxsize=None)
def flatten_permutation(pcfg: ProductLatticeConfig) -> OperatorMatrix:
    """Permutation matrix identifying chain index j*d1 + i with ket |j> (x) |i>.

    Conjugation by this matrix carries the canonical D-site chain operators
    onto the coproduct images: S a_D^dagger S^(-1) equals
    ``coproduct_a_dagger`` and S U_D S^(-1) equals ``coproduct_U``.  With
    the row-major basis order used throughout, the relabelling is the
    identity permutation; it is still constructed from the index map so the
    layout convention stays checkable.
    """
    d1, d2 = pcfg.d1, pcfg.d2
    dim = pcfg.dim
    rows = [[0] * dim for _ in range(dim)]
    for j in range(d2):
        for i in range(d1):
            chain_index = j * d1 + i
            tensor_index = j * d1 + i
            rows[tensor_index][chain_index] = 1
    return from_rows(rows, pcfg.scalar_mode)


@lru_cache(maxsize=None)
def arrow_raiser(pcfg: ProductLatticeConfig) -> OperatorMatrix:
    """The grid-walk raising operator written down directly from the arrows.

    Independent of the tensor-product construction: each site maps to its
    successor along the row-by-row walk, and the final site maps to zero.
    """
    d1, d2 = pcfg.d1, pcfg.d2
    dim = pcfg.dim
    rows = [[0] * dim for _ in range(dim)]
    for j in range(d2):
        for i in range(d1):
            src = j * d1 + i
            if i < d1 - 1:
                rows[j * d1 + i + 1][src] = 1
            elif j < d2 - 1:
                rows[(j + 1) * d1][src] = 1
    return from_rows(rows, pcfg.scalar_mode)


def coproduct_shift_pair(pcfg: ProductLatticeConfig):
    """Convenience pair (coproduct_a_dagger, coproduct_U)."""
    return coproduct_a_dagger(pcfg), coproduct_U(pcfg)
