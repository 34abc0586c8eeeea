"""Exact arithmetic in the cyclotomic field Q(zeta_d).

The scalar field for exact-mode computations is Q(zeta_d), where
zeta_d = exp(2*pi*i/d) is a *primitive* d-th root of unity.  Elements are
stored as rational coefficient vectors of the basis 1, q, ..., q^(phi(d)-1),
fully reduced modulo the d-th cyclotomic polynomial Phi_d.  Reducing modulo
Phi_d (and not modulo x^d - 1) is what makes root-of-unity cancellations such
as 1 + q + ... + q^(d-1) = 0 hold exactly, for composite d as well as prime.

All values are immutable and every operation is a pure function, so scalars
can be shared freely between threads.
"""

from __future__ import annotations

import cmath
import functools
from dataclasses import dataclass
from fractions import Fraction


def _trimmed(coeffs):
    """Drop trailing zero coefficients (constant term first)."""
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return list(coeffs[:end])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trimmed(out)


def _poly_divmod(num, den):
    """Quotient and remainder of dense rational coefficient lists."""
    num = _trimmed([Fraction(c) for c in num])
    den = _trimmed([Fraction(c) for c in den])
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    rem = num
    lead = den[-1]
    while len(rem) >= len(den):
        shift = len(rem) - len(den)
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(den):
            rem[shift + i] -= factor * c
        rem = _trimmed(rem)
    return _trimmed(quot), rem


@dataclass(frozen=True)
class CyclotomicPolynomial:
    """The d-th cyclotomic polynomial Phi_d, monic with integer coefficients.

    ``coeffs`` lists the coefficients constant term first; the degree equals
    the Euler totient phi(d).
    """

    d: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> CyclotomicPolynomial:
    """Compute Phi_d by exact division of x^d - 1 by all lower Phi_e, e | d."""
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    poly = [Fraction(-1)] + [Fraction(0)] * (d - 1) + [Fraction(1)]
    for e in range(1, d):
        if d % e == 0:
            quot, rem = _poly_divmod(poly, list(cyclotomic_polynomial(e).coeffs))
            assert not rem, f"Phi_{e} does not divide the remaining factor of x^{d}-1"
            poly = quot
    ints = []
    for c in poly:
        assert c.denominator == 1
        ints.append(int(c))
    return CyclotomicPolynomial(d, tuple(ints))


def _phi(d: int) -> int:
    """Euler totient, read off as the degree of Phi_d."""
    return cyclotomic_polynomial(d).degree


def _reduce(d: int, coeffs) -> tuple[Fraction, ...]:
    """Reduce a rational coefficient list modulo Phi_d; pad to length phi(d)."""
    phi_coeffs = cyclotomic_polynomial(d).coeffs
    deg = len(phi_coeffs) - 1
    work = [Fraction(c) for c in coeffs]
    for i in range(len(work) - 1, deg - 1, -1):
        top = work[i]
        if top:
            # x^i = x^(i-deg) * (x^deg - Phi_d) since Phi_d is monic
            for j in range(deg):
                work[i - deg + j] -= top * phi_coeffs[j]
        work.pop()
    work.extend([Fraction(0)] * (deg - len(work)))
    return tuple(work)


@dataclass(frozen=True)
class CycloScalar:
    """An element of Q(zeta_d) in canonical reduced form.

    ``coeffs`` has length exactly phi(d), so equality of values is
    coefficient-wise equality of the dataclass fields.
    """

    d: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_rational(cls, d: int, value) -> "CycloScalar":
        head = Fraction(value)
        return cls(d, (head,) + (Fraction(0),) * (_phi(d) - 1))

    @classmethod
    def zero(cls, d: int) -> "CycloScalar":
        return cls.from_rational(d, 0)

    @classmethod
    def one(cls, d: int) -> "CycloScalar":
        return cls.from_rational(d, 1)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _require_same_field(self, other: "CycloScalar") -> None:
        if self.d != other.d:
            raise ValueError(
                f"cyclotomic order mismatch: Q(zeta_{self.d}) vs Q(zeta_{other.d})"
            )

    def __add__(self, other):
        if isinstance(other, CycloScalar):
            self._require_same_field(other)
            return CycloScalar(
                self.d, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
            )
        if isinstance(other, (int, Fraction)):
            return self + CycloScalar.from_rational(self.d, other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, CycloScalar):
            self._require_same_field(other)
            return CycloScalar(
                self.d, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
            )
        if isinstance(other, (int, Fraction)):
            return self - CycloScalar.from_rational(self.d, other)
        return NotImplemented

    def __neg__(self):
        return CycloScalar(self.d, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, CycloScalar):
            self._require_same_field(other)
            return CycloScalar(self.d, _reduce(self.d, _poly_mul(self.coeffs, other.coeffs)))
        if isinstance(other, (int, Fraction)):
            factor = Fraction(other)
            return CycloScalar(self.d, tuple(c * factor for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CycloScalar):
            return self * other.invert()
        if isinstance(other, (int, Fraction)):
            factor = Fraction(other)
            if factor == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / factor)
        return NotImplemented

    def invert(self) -> "CycloScalar":
        """Multiplicative inverse via the extended Euclidean algorithm.

        Phi_d is irreducible over Q, so every nonzero element is invertible.
        """
        if self.is_zero():
            raise ZeroDivisionError(f"cannot invert zero in Q(zeta_{self.d})")
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.d).coeffs]
        r0, r1 = modulus, _trimmed(self.coeffs)
        # t tracks the coefficient of `self` in the Bezout combination
        t0, t1 = [], [Fraction(1)]
        while len(r1) > 1:
            quot, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            prod = _poly_mul(quot, t1)
            width = max(len(t0), len(prod))
            t0, t1 = t1, _trimmed(
                [
                    (t0[i] if i < len(t0) else 0) - (prod[i] if i < len(prod) else 0)
                    for i in range(width)
                ]
            )
        assert r1, "gcd degenerated; Phi_d should be irreducible"
        scale = 1 / r1[0]
        return CycloScalar(self.d, _reduce(self.d, [c * scale for c in t1]))

    def conjugate(self) -> "CycloScalar":
        """Complex conjugation: the field automorphism sending q to q^(d-1)."""
        acc = CycloScalar.zero(self.d)
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + c * root_power(self.d, -i)
        return acc

    def lift(self, conductor: int) -> "CycloScalar":
        """Embed into Q(zeta_L) for a multiple L of d, via q_d = q_L^(L/d)."""
        if conductor % self.d != 0:
            raise ValueError(
                f"cannot lift Q(zeta_{self.d}) into Q(zeta_{conductor}): "
                f"{self.d} does not divide {conductor}"
            )
        if conductor == self.d:
            return self
        step = conductor // self.d
        acc = CycloScalar.zero(conductor)
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + c * root_power(conductor, i * step)
        return acc

    def to_complex(self) -> complex:
        """Evaluate the coefficient polynomial at exp(2*pi*i/d), double precision."""
        root = cmath.exp(2j * cmath.pi / self.d)
        return sum((float(c) * root**i for i, c in enumerate(self.coeffs)), 0j)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if not power:
                terms.append(str(c))
            elif c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{c}*{power}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


@functools.lru_cache(maxsize=None)
def root_power(d: int, k: int) -> CycloScalar:
    """The scalar q^(k mod d), where q = exp(2*pi*i/d), in reduced form."""
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    exponent = k % d
    return CycloScalar(d, _reduce(d, [Fraction(0)] * exponent + [Fraction(1)]))


def add(a: CycloScalar, b: CycloScalar) -> CycloScalar:
    return a + b


def mul(a: CycloScalar, b: CycloScalar) -> CycloScalar:
    return a * b


def negate(a: CycloScalar) -> CycloScalar:
    return -a


def invert(a: CycloScalar) -> CycloScalar:
    return a.invert()


def conjugate(a: CycloScalar) -> CycloScalar:
    return a.conjugate()


def to_complex(a: CycloScalar) -> complex:
    return a.to_complex()
