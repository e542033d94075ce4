"""Exact scalars, quadratic-extension elements, and 2x2 matrices.

Every value in this package is built from these three layers:

* ``Rational`` -- arbitrary-precision fractions. This is the stdlib
  ``fractions.Fraction``, which already guarantees the canonical form we
  rely on everywhere: positive denominator, lowest terms, zero as 0/1.
* ``QuadExt`` -- elements u + v*sqrt(d) of a quadratic extension of the
  rationals. The radical is purely formal: no square root is ever taken,
  so negative and non-square d work the same as positive square d.
* ``Mat2`` -- 2x2 matrices. Entries are usually Rational but any scalar
  type with field arithmetic (in particular QuadExt) is accepted.

All values are immutable; all operations are pure functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction

_RationalLike = Union[int, Fraction]


class DiscriminantMismatchError(ValueError):
    """Arithmetic attempted between elements of different extensions."""


class SingularMatrixError(ZeroDivisionError):
    """Inverse of a matrix whose determinant is exactly zero."""


def parse_rational(text: str) -> Fraction:
    """Parse the strict ``N``, ``-N``, ``N/D`` syntax (D > 0, no decimals).

    Decimal notation is rejected on purpose: the interface contract is
    exactness, and accepting ``0.1`` would silently smuggle in a binary or
    denominator-10 approximation the caller did not write.
    """
    s = text.strip()
    num_part, slash, den_part = s.partition("/")
    neg = num_part.startswith("-")
    if neg:
        num_part = num_part[1:]
    if not (num_part.isascii() and num_part.isdigit()):
        raise ValueError(f"invalid rational {text!r}: expected N, -N or N/D")
    if slash:
        if not (den_part.isascii() and den_part.isdigit()) or int(den_part) == 0:
            raise ValueError(f"invalid rational {text!r}: denominator must be a positive integer")
        value = Fraction(int(num_part), int(den_part))
    else:
        value = Fraction(int(num_part))
    return -value if neg else value


def format_rational(x: _RationalLike) -> str:
    """Canonical string form: ``num/den`` with ``/den`` omitted when den is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _coerce_scalar(x):
    if isinstance(x, (Fraction, QuadExt)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"unsupported scalar type {type(x).__name__}")


@dataclass(frozen=True)
class QuadExt:
    """u + v*sqrt(d) with exact rational coordinates.

    Two elements may be combined only when their ``d`` fields agree;
    rationals (int/Fraction) are lifted into the operand's extension.
    """

    u: Fraction
    v: Fraction
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))
        object.__setattr__(self, "d", Fraction(self.d))

    def __repr__(self) -> str:
        return f"QuadExt({self.u!s}, {self.v!s}, d={self.d!s})"

    def __str__(self) -> str:
        return f"{self.u} + {self.v}*sqrt({self.d})"

    def _lift(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DiscriminantMismatchError(
                    f"cannot combine sqrt({self.d}) with sqrt({other.d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.v == 0 and self.u == other
        if isinstance(other, QuadExt):
            if self.v == 0 and other.v == 0:
                return self.u == other.u
            return self.u == other.u and self.v == other.v and self.d == other.d
        return NotImplemented

    def __hash__(self):
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v, self.d))

    def __add__(self, other) -> "QuadExt":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.u + o.u, self.v + o.v, self.d)

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.u, -self.v, self.d)

    def __sub__(self, other) -> "QuadExt":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.u - o.u, self.v - o.v, self.d)

    def __rsub__(self, other) -> "QuadExt":
        return (-self) + other

    def __mul__(self, other) -> "QuadExt":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(
            self.u * o.u + self.d * self.v * o.v,
            self.u * o.v + o.u * self.v,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QuadExt":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "QuadExt":
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        return lifted * self.inverse()

    def conj(self) -> "QuadExt":
        return QuadExt(self.u, -self.v, self.d)

    def norm(self) -> Fraction:
        """u^2 - d*v^2, the product with the conjugate. Always rational."""
        return self.u * self.u - self.d * self.v * self.v

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"division by zero-norm element {self}")
        return QuadExt(self.u / n, -self.v / n, self.d)

    def __pow__(self, n: int) -> "QuadExt":
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = QuadExt(Fraction(1), Fraction(0), self.d)
        for bit in bin(abs(n))[2:]:
            result = result * result
            if bit == "1":
                result = result * base
        return result

    def as_rational(self) -> Fraction:
        """Extract the rational part, requiring the radical part to be exactly 0."""
        if self.v != 0:
            raise ValueError(f"{self} has a nonzero sqrt({self.d}) component")
        return self.u


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 matrix over any exact scalar (Rational or QuadExt)."""

    e11: object
    e12: object
    e21: object
    e22: object

    def __post_init__(self):
        object.__setattr__(self, "e11", _coerce_scalar(self.e11))
        object.__setattr__(self, "e12", _coerce_scalar(self.e12))
        object.__setattr__(self, "e21", _coerce_scalar(self.e21))
        object.__setattr__(self, "e22", _coerce_scalar(self.e22))

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    def __repr__(self) -> str:
        return f"Mat2[[{self.e11}, {self.e12}], [{self.e21}, {self.e22}]]"

    def __mul__(self, other) -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def scaled(self, factor) -> "Mat2":
        return Mat2(
            factor * self.e11, factor * self.e12, factor * self.e21, factor * self.e22
        )

    def det(self):
        return self.e11 * self.e22 - self.e12 * self.e21

    def trace(self):
        return self.e11 + self.e22

    def inverse(self) -> "Mat2":
        d = self.det()
        if d == 0:
            raise SingularMatrixError(f"matrix {self} has determinant 0")
        return Mat2(self.e22 / d, -self.e12 / d, -self.e21 / d, self.e11 / d)

    def __pow__(self, n: int) -> "Mat2":
        result, _ = mat_pow_counted(self, n)
        return result


def mat_pow_counted(m: Mat2, n: int) -> tuple[Mat2, int]:
    """Square-and-multiply power for n >= 0, returning the matrix product count.

    The count is at most 2*ceil(log2(n+1)): one squaring per bit after the
    leading one, plus one extra product per set bit after the leading one.
    """
    if n < 0:
        raise ValueError("mat_pow_counted requires n >= 0; invert first for negative powers")
    if n == 0:
        return Mat2.identity(), 0
    result = m
    count = 0
    for bit in bin(n)[3:]:
        result = result * result
        count += 1
        if bit == "1":
            result = result * m
            count += 1
    return result, count


def mat_pow(m: Mat2, n: int) -> Mat2:
    return mat_pow_counted(m, n)[0]
