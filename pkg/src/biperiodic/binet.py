"""Closed-form (Binet) evaluation in the quadratic extension field.

The characteristic roots of both sequences solve X^2 - ab*X - ab = 0:

    alpha = (ab + sqrt(D))/2,  beta = (ab - sqrt(D))/2,  D = ab*(ab+4)

and the terms are recovered exactly as

    fibonacci(n) = a^(1-parity(n)) / (ab)^floor(n/2) * (alpha^n - beta^n)/(alpha - beta)
    lucas(n)     = (alpha^n + beta^n) / (a^floor(n/2) * b^floor((n+1)/2))

All arithmetic stays inside QuadExt with the formal radical sqrt(D); the
radical component of the finished expression must cancel to exactly zero
before the rational part is extracted, and extraction enforces that.

D = 0 (equivalently ab = -4) collapses the two roots. The fibonacci
formula divides by alpha - beta and is rejected there; the lucas formula
has no such division and keeps working through the formal d = 0 algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Mat2, QuadExt, Rational
from .genmatrix import generating_matrix
from .sequences import SeqParams, parity


class DegenerateDiscriminantError(ValueError):
    """Operation requires distinct characteristic roots (ab != -4)."""


@dataclass(frozen=True)
class RootPair:
    alpha: QuadExt
    beta: QuadExt


def roots(p: SeqParams) -> RootPair:
    """Both roots of X^2 - ab*X - ab = 0 as formal elements of Q(sqrt(D))."""
    half_ab = p.ab / 2
    half = Fraction(1, 2)
    d = p.disc
    return RootPair(QuadExt(half_ab, half, d), QuadExt(half_ab, -half, d))


def binet_fib(p: SeqParams, n: int) -> Rational:
    if p.disc == 0:
        raise DegenerateDiscriminantError(
            "ab = -4 gives a repeated root; the fibonacci closed form divides by alpha - beta"
        )
    pair = roots(p)
    kernel = (pair.alpha**n - pair.beta**n) / (pair.alpha - pair.beta)
    prefactor = p.a ** (1 - parity(n)) / p.ab ** (n // 2)
    return (prefactor * kernel).as_rational()


def binet_lucas(p: SeqParams, n: int) -> Rational:
    pair = roots(p)
    kernel = pair.alpha**n + pair.beta**n
    prefactor = 1 / (p.a ** (n // 2) * p.b ** ((n + 1) // 2))
    return (prefactor * kernel).as_rational()


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues and eigenvector matrix of the generating matrix, over Q(sqrt(D))."""

    lambda1: QuadExt
    lambda2: QuadExt
    u_matrix: Mat2


def eigen_decompose(p: SeqParams) -> EigenDecomposition:
    """Diagonalize the generating matrix exactly.

    The eigenvalues reduce to (a/b)*(root + 2), which lives in the same
    field Q(sqrt(D)) as the roots themselves, so no half-integer powers of
    a, b or ab+4 are ever formed. The columns of the eigenvector matrix
    pair each eigenvalue with the opposite root:

        u1 = (a^2/b, -(a/b)*beta),  u2 = (a^2/b, -(a/b)*alpha)

    The defining relation G*U = U*diag(lambda1, lambda2) is checked before
    returning.
    """
    if p.disc == 0:
        raise DegenerateDiscriminantError("repeated root (ab = -4): no eigenbasis over Q(sqrt(D))")
    pair = roots(p)
    ratio = p.a / p.b
    lambda1 = ratio * (pair.alpha + 2)
    lambda2 = ratio * (pair.beta + 2)
    d = p.disc
    top = QuadExt(p.a * p.a / p.b, Fraction(0), d)
    u = Mat2(top, top, -(ratio * pair.beta), -(ratio * pair.alpha))
    zero = QuadExt(Fraction(0), Fraction(0), d)
    diag = Mat2(lambda1, zero, zero, lambda2)
    if generating_matrix(p) * u != u * diag:
        raise AssertionError("eigendecomposition failed its defining relation")
    return EigenDecomposition(lambda1, lambda2, u)
