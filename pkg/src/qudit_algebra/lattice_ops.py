"""Canonical operators of both lattice algebras on d points.

Two operator families act on the d-dimensional space spanned by the basis
kets |0>, ..., |d-1> (standard basis columns, operators act on column
vectors):

* the raising/lowering pair of a *non-periodic* lattice: ``make_a_dagger``
  steps a site to the right and annihilates the last site, so it is
  nilpotent of order d and unitary up to boundary-defect projections;
* the clock/shift pair of a *periodic* lattice: ``make_U`` permutes the
  sites cyclically and ``make_V`` is the diagonal phase operator, with
  V U = q U V for the primitive root q = exp(2*pi*i/d).

The module also builds both families' projection calculus (``proj_P`` /
``proj_R`` from the shift side, ``proj_scriptP`` / ``proj_scriptR`` from the
clock side), the position operator, the matrix units of the full d x d
matrix algebra in both representations, and the conversion formulas that
reconstruct each family from the other.

The canonical representation is fixed by a_dagger[m, n] = delta(m, n+1);
every other choice is unitarily equivalent and out of scope.  All
constructors are pure and cached, so repeated suite runs reuse operators.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import matrix
from .cyclo import root_power
from .matrix import (
    ExactMode,
    FloatMode,
    OperatorMatrix,
    adjoint,
    from_rows,
    identity,
    matpow,
    scalar_mul,
    zeros,
)

EXACT = "exact"
FLOAT = "float"


@dataclass(frozen=True)
class LatticeConfig:
    """Lattice size, grid spacing, and the arithmetic the operators live in.

    ``beta`` is kept as an exact rational in exact mode so that identities
    involving the position operator verify to literal zero.  ``tolerance``
    is the absolute entry-wise bound used by float-mode comparisons.
    """

    d: int
    beta: Fraction | float = Fraction(1)
    mode: str = EXACT
    tolerance: float = matrix.DEFAULT_TOLERANCE

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(
                f"lattice size must satisfy d >= 2, got d={self.d}; "
                "a single-site lattice collapses both operator families"
            )
        if self.mode not in (EXACT, FLOAT):
            raise ValueError(f"mode must be '{EXACT}' or '{FLOAT}', got {self.mode!r}")
        beta = Fraction(self.beta) if self.mode == EXACT else float(self.beta)
        if beta <= 0:
            raise ValueError(f"grid spacing must be positive, got {self.beta}")
        object.__setattr__(self, "beta", beta)
        if self.tolerance < 0:
            raise ValueError(f"tolerance must be nonnegative, got {self.tolerance}")

    @property
    def scalar_mode(self):
        return ExactMode(self.d) if self.mode == EXACT else FloatMode()


def root_scalar(cfg: LatticeConfig, k: int):
    """q^k in cfg's arithmetic, q = exp(2*pi*i/d)."""
    if cfg.mode == EXACT:
        return root_power(cfg.d, k)
    return cmath.exp(2j * cmath.pi * (k % cfg.d) / cfg.d)


def _rational_scalar(cfg: LatticeConfig, value):
    return cfg.scalar_mode.coerce(
        Fraction(value) if cfg.mode == EXACT else float(value)
    )


@lru_cache(maxsize=None)
def make_a_dagger(cfg: LatticeConfig) -> OperatorMatrix:
    """Right-translation raising operator: a_dagger|n> = |n+1>, a_dagger|d-1> = 0."""
    d = cfg.d
    return from_rows(
        [[1 if m == n + 1 else 0 for n in range(d)] for m in range(d)],
        cfg.scalar_mode,
    )


@lru_cache(maxsize=None)
def make_a(cfg: LatticeConfig) -> OperatorMatrix:
    """Left-translation lowering operator, the adjoint of make_a_dagger."""
    return adjoint(make_a_dagger(cfg))


def _check_projection_index(cfg: LatticeConfig, n: int) -> None:
    if not 0 <= n <= cfg.d:
        raise ValueError(
            f"projection index must lie in 0..d={cfg.d}, got {n}"
        )


@lru_cache(maxsize=None)
def proj_P(cfg: LatticeConfig, n: int) -> OperatorMatrix:
    """P_n = a_dagger^n a^n, the projection onto sites >= n (P_0 = 1, P_d = 0)."""
    _check_projection_index(cfg, n)
    return matpow(make_a_dagger(cfg), n) @ matpow(make_a(cfg), n)


@lru_cache(maxsize=None)
def proj_R(cfg: LatticeConfig, n: int) -> OperatorMatrix:
    """R_n = a^n a_dagger^n, the projection onto sites < d-n (R_0 = 1, R_d = 0)."""
    _check_projection_index(cfg, n)
    return matpow(make_a(cfg), n) @ matpow(make_a_dagger(cfg), n)


@lru_cache(maxsize=None)
def position_X(cfg: LatticeConfig) -> OperatorMatrix:
    """Position operator: beta times the sum of P_1..P_(d-1); X|n> = beta*n |n>."""
    total = zeros(cfg.d, cfg.scalar_mode)
    for m in range(1, cfg.d):
        total = total + proj_P(cfg, m)
    return scalar_mul(_rational_scalar(cfg, cfg.beta), total)


@lru_cache(maxsize=None)
def make_U(cfg: LatticeConfig) -> OperatorMatrix:
    """Cyclic shift U = a_dagger + a^(d-1); U|n> = |n+1 mod d>, U^d = 1."""
    return make_a_dagger(cfg) + matpow(make_a(cfg), cfg.d - 1)


@lru_cache(maxsize=None)
def make_V(cfg: LatticeConfig) -> OperatorMatrix:
    """Clock operator, assembled from the projection ladder.

    V = sum_n q^n (P_n - P_(n+1)), which is diag(1, q, ..., q^(d-1)) in the
    canonical representation.
    """
    total = zeros(cfg.d, cfg.scalar_mode)
    for n in range(cfg.d):
        step = proj_P(cfg, n) - proj_P(cfg, n + 1)
        total = total + scalar_mul(root_scalar(cfg, n), step)
    return total


def script_P_from_clock(cfg: LatticeConfig, clock: OperatorMatrix, n: int) -> OperatorMatrix:
    """Spectral projection (1/d) * sum_j q^(j*n) clock^j of a supplied clock."""
    if clock.dim != cfg.d:
        raise ValueError(f"clock dimension {clock.dim} does not match d={cfg.d}")
    total = zeros(cfg.d, clock.mode)
    for j in range(cfg.d):
        total = total + scalar_mul(root_scalar(cfg, j * n), matpow(clock, j))
    return scalar_mul(_rational_scalar(cfg, Fraction(1, cfg.d)), total)


@lru_cache(maxsize=None)
def proj_scriptP(cfg: LatticeConfig, n: int) -> OperatorMatrix:
    """Clock-side spectral projection; the index is periodic modulo d."""
    return script_P_from_clock(cfg, make_V(cfg), n % cfg.d)


@lru_cache(maxsize=None)
def proj_scriptR(cfg: LatticeConfig, n: int) -> OperatorMatrix:
    """Complement 1 - proj_scriptP(n)."""
    return identity(cfg.d, cfg.scalar_mode) - proj_scriptP(cfg, n)


def a_dagger_from_UV(cfg: LatticeConfig, U: OperatorMatrix, V: OperatorMatrix) -> OperatorMatrix:
    """Rebuild the raising operator from a clock/shift pair: U minus its wrap.

    Subtracting scriptP_0 U (built from the supplied V) removes exactly the
    periodic wrap-around matrix element, leaving the nilpotent raiser.
    """
    if U.dim != cfg.d or V.dim != cfg.d:
        raise ValueError(
            f"operator dimensions {U.dim}, {V.dim} do not match d={cfg.d}"
        )
    return U - script_P_from_clock(cfg, V, 0) @ U


def edge_powers_from_UV(cfg: LatticeConfig, U: OperatorMatrix, V: OperatorMatrix):
    """The extremal powers (a_dagger^(d-1), a^(d-1)) built from clock/shift."""
    if U.dim != cfg.d or V.dim != cfg.d:
        raise ValueError(
            f"operator dimensions {U.dim}, {V.dim} do not match d={cfg.d}"
        )
    wrap = script_P_from_clock(cfg, V, 0)
    return matpow(U, cfg.d - 1) @ wrap, wrap @ matpow(adjoint(U), cfg.d - 1)


def _check_unit_index(cfg: LatticeConfig, m: int, n: int) -> None:
    if not (0 <= m < cfg.d and 0 <= n < cfg.d):
        raise ValueError(
            f"matrix-unit indices must lie in 0..{cfg.d - 1}, got ({m}, {n})"
        )


@lru_cache(maxsize=None)
def matrix_unit_shift(cfg: LatticeConfig, m: int, n: int) -> OperatorMatrix:
    """Standard matrix unit |m><n| in the raising/lowering representation.

    e_mn = a_dagger^m R_(d-1) a^n, since R_(d-1) is the projection onto the
    first site.
    """
    _check_unit_index(cfg, m, n)
    return (
        matpow(make_a_dagger(cfg), m)
        @ proj_R(cfg, cfg.d - 1)
        @ matpow(make_a(cfg), n)
    )


@lru_cache(maxsize=None)
def matrix_unit_schwinger(cfg: LatticeConfig, m: int, n: int) -> OperatorMatrix:
    """Standard matrix unit |m><n| in the clock/shift representation."""
    _check_unit_index(cfg, m, n)
    pivot = proj_scriptP(cfg, cfg.d - n)
    if m > n:
        return matpow(make_U(cfg), m - n) @ pivot
    if m == n:
        return pivot
    return matpow(adjoint(make_U(cfg)), n - m) @ pivot
