"""Dense square matrices over an exact cyclotomic or complex floating scalar mode.

A matrix carries its scalar mode: ``ExactMode(d)`` entries live in Q(zeta_d)
and all identities evaluate to literal zero; ``FloatMode()`` entries are
double-precision complex numbers compared against an absolute tolerance.
Matrices are immutable, all operations are pure, and binary operations
between exact matrices of different cyclotomic orders transparently lift
both sides into the common field Q(zeta_lcm) so that mixed products stay
exact (tensor constructions rely on this).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloScalar

DEFAULT_TOLERANCE = 1e-10


@dataclass(frozen=True)
class ExactMode:
    """Scalars are elements of Q(zeta_d)."""

    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"cyclotomic order must be positive, got {self.d}")

    def zero(self):
        return CycloScalar.zero(self.d)

    def one(self):
        return CycloScalar.one(self.d)

    def coerce(self, value):
        if isinstance(value, CycloScalar):
            if value.d == self.d:
                return value
            return value.lift(self.d)
        if isinstance(value, (int, Fraction)):
            return CycloScalar.from_rational(self.d, value)
        raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")

    @staticmethod
    def conj(scalar):
        return scalar.conjugate()

    @staticmethod
    def is_zero(scalar):
        return scalar.is_zero()

    @staticmethod
    def to_complex(scalar):
        return scalar.to_complex()


@dataclass(frozen=True)
class FloatMode:
    """Scalars are double-precision complex numbers."""

    @staticmethod
    def zero():
        return 0j

    @staticmethod
    def one():
        return 1 + 0j

    @staticmethod
    def coerce(value):
        if isinstance(value, CycloScalar):
            raise TypeError("exact scalars must be embedded explicitly; see to_float")
        if isinstance(value, (int, float, complex, Fraction)):
            return complex(value)
        raise TypeError(f"cannot use {type(value).__name__} as a float scalar")

    @staticmethod
    def conj(scalar):
        return scalar.conjugate()

    @staticmethod
    def is_zero(scalar):
        return scalar == 0

    @staticmethod
    def to_complex(scalar):
        return scalar


ScalarMode = ExactMode | FloatMode


def _common_mode(a: "OperatorMatrix", b: "OperatorMatrix"):
    """Bring two matrices into a shared scalar mode, lifting exact conductors."""
    if a.mode == b.mode:
        return a, b
    if isinstance(a.mode, ExactMode) and isinstance(b.mode, ExactMode):
        conductor = math.lcm(a.mode.d, b.mode.d)
        return a.lift(conductor), b.lift(conductor)
    raise ValueError(f"scalar mode mismatch: {a.mode} vs {b.mode}")


@dataclass(frozen=True)
class OperatorMatrix:
    """An immutable dense square matrix over a scalar mode."""

    mode: ScalarMode
    entries: tuple[tuple[object, ...], ...]

    def __post_init__(self):
        dim = len(self.entries)
        if dim == 0 or any(len(row) != dim for row in self.entries):
            raise ValueError("entries must form a nonempty square array")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __add__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        a, b = _common_mode(self, other)
        if a.dim != b.dim:
            raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
        return OperatorMatrix(
            a.mode,
            tuple(
                tuple(x + y for x, y in zip(ra, rb))
                for ra, rb in zip(a.entries, b.entries)
            ),
        )

    def __sub__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        a, b = _common_mode(self, other)
        if a.dim != b.dim:
            raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
        return OperatorMatrix(
            a.mode,
            tuple(
                tuple(x - y for x, y in zip(ra, rb))
                for ra, rb in zip(a.entries, b.entries)
            ),
        )

    def __matmul__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        a, b = _common_mode(self, other)
        if a.dim != b.dim:
            raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
        mode = a.mode
        is_zero = mode.is_zero
        n = a.dim
        rows = []
        for i in range(n):
            acc = [mode.zero()] * n
            for k in range(n):
                aik = a.entries[i][k]
                if is_zero(aik):
                    continue
                brow = b.entries[k]
                for j in range(n):
                    if not is_zero(brow[j]):
                        acc[j] = acc[j] + aik * brow[j]
            rows.append(tuple(acc))
        return OperatorMatrix(mode, tuple(rows))

    def __rmul__(self, scalar):
        return scalar_mul(scalar, self)

    def __neg__(self):
        return OperatorMatrix(
            self.mode, tuple(tuple(-x for x in row) for row in self.entries)
        )

    def adjoint(self) -> "OperatorMatrix":
        conj = self.mode.conj
        n = self.dim
        return OperatorMatrix(
            self.mode,
            tuple(tuple(conj(self.entries[j][i]) for j in range(n)) for i in range(n)),
        )

    def lift(self, conductor: int) -> "OperatorMatrix":
        """Re-express an exact matrix over Q(zeta_conductor)."""
        if not isinstance(self.mode, ExactMode):
            raise ValueError("only exact-mode matrices can be lifted")
        if conductor == self.mode.d:
            return self
        return OperatorMatrix(
            ExactMode(conductor),
            tuple(tuple(x.lift(conductor) for x in row) for row in self.entries),
        )


def identity(dim: int, mode: ScalarMode) -> OperatorMatrix:
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    one, zero = mode.one(), mode.zero()
    return OperatorMatrix(
        mode,
        tuple(
            tuple(one if i == j else zero for j in range(dim)) for i in range(dim)
        ),
    )


def zeros(dim: int, mode: ScalarMode) -> OperatorMatrix:
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    zero = mode.zero()
    return OperatorMatrix(mode, tuple((zero,) * dim for _ in range(dim)))


def from_rows(rows, mode: ScalarMode) -> OperatorMatrix:
    """Build a matrix from nested scalars coercible into the given mode."""
    return OperatorMatrix(mode, tuple(tuple(mode.coerce(x) for x in row) for row in rows))


def matmul(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    return a @ b


def add(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    return a + b


def sub(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    return a - b


def scalar_mul(scalar, a: OperatorMatrix) -> OperatorMatrix:
    if isinstance(scalar, CycloScalar) and isinstance(a.mode, ExactMode):
        conductor = math.lcm(scalar.d, a.mode.d)
        scalar = scalar.lift(conductor)
        a = a.lift(conductor)
    s = a.mode.coerce(scalar)
    return OperatorMatrix(a.mode, tuple(tuple(s * x for x in row) for row in a.entries))


def adjoint(a: OperatorMatrix) -> OperatorMatrix:
    return a.adjoint()


@lru_cache(maxsize=None)
def matpow(a: OperatorMatrix, k: int) -> OperatorMatrix:
    """k-th matrix power, with a^0 the identity; repeated squaring."""
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    if k == 0:
        return identity(a.dim, a.mode)
    if k == 1:
        return a
    half = matpow(a, k // 2)
    out = half @ half
    return out @ a if k % 2 else out


def kron(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    """Kronecker product with block layout (a x b)[i*db+k, j*db+l] = a[i,j]*b[k,l]."""
    a, b = _common_mode(a, b)
    db = b.dim
    dim = a.dim * db
    mode = a.mode
    rows = []
    for i in range(a.dim):
        for k in range(db):
            row = []
            for j in range(a.dim):
                aij = a.entries[i][j]
                if mode.is_zero(aij):
                    row.extend([mode.zero()] * db)
                else:
                    row.extend(aij * b.entries[k][l] for l in range(db))
            rows.append(tuple(row))
    assert len(rows) == dim
    return OperatorMatrix(mode, tuple(rows))


def max_residual(a: OperatorMatrix, b: OperatorMatrix) -> float:
    """Largest entry-wise magnitude of a - b; literally 0.0 for equal exact matrices."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    a, b = _common_mode(a, b)
    if isinstance(a.mode, ExactMode):
        if a.entries == b.entries:
            return 0.0
        diff = a - b
        return max(
            abs(a.mode.to_complex(x)) for row in diff.entries for x in row
        )
    return max(
        abs(x - y) for ra, rb in zip(a.entries, b.entries) for x, y in zip(ra, rb)
    )


def equals(a: OperatorMatrix, b: OperatorMatrix, tol: float | None = None) -> bool:
    """Structural equality in exact mode; residual within tolerance in float mode."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    a, b = _common_mode(a, b)
    if isinstance(a.mode, ExactMode):
        return a.entries == b.entries
    return max_residual(a, b) <= (DEFAULT_TOLERANCE if tol is None else tol)


def to_float(a: OperatorMatrix) -> OperatorMatrix:
    """Embed a matrix into float mode via the canonical complex embedding."""
    if isinstance(a.mode, FloatMode):
        return a
    emb = a.mode.to_complex
    return OperatorMatrix(
        FloatMode(), tuple(tuple(emb(x) for x in row) for row in a.entries)
    )
