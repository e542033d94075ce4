"""Shared brute-force oracles.

These deliberately reimplement the sequence walk and matrix powering in
the most naive way possible (direct dict-building loops, repeated
multiplication) so the package's fast paths are always checked against
arithmetic that shares none of their code.
"""
from fractions import Fraction

from biperiodic import Mat2


def oracle_fib_table(a, b, lo, hi):
    """Coefficient a at even index, b at odd; seeds 0, 1; backward solve for n < 0."""
    a, b = Fraction(a), Fraction(b)
    t = {0: Fraction(0), 1: Fraction(1)}
    for n in range(2, hi + 1):
        c = a if n % 2 == 0 else b
        t[n] = c * t[n - 1] + t[n - 2]
    for n in range(1, lo + 1, -1):
        c = a if n % 2 == 0 else b
        t[n - 2] = t[n] - c * t[n - 1]
    return t


def oracle_lucas_table(a, b, lo, hi):
    """Coefficient b at even index, a at odd; seeds 2, a; backward solve for n < 0."""
    a, b = Fraction(a), Fraction(b)
    t = {0: Fraction(2), 1: a}
    for n in range(2, hi + 1):
        c = b if n % 2 == 0 else a
        t[n] = c * t[n - 1] + t[n - 2]
    for n in range(1, lo + 1, -1):
        c = b if n % 2 == 0 else a
        t[n - 2] = t[n] - c * t[n - 1]
    return t


def brute_mat_pow(m: Mat2, n: int) -> Mat2:
    """n-fold repeated multiplication; the oracle for binary exponentiation."""
    result = Mat2.identity()
    for _ in range(n):
        result = result * m
    return result


def classical_fib(count):
    """0, 1, 1, 2, ... by seed-and-add, ints only."""
    seq = [0, 1]
    while len(seq) < count:
        seq.append(seq[-1] + seq[-2])
    return seq[:count]


def classical_lucas(count):
    """2, 1, 3, 4, ... by seed-and-add, ints only."""
    seq = [2, 1]
    while len(seq) < count:
        seq.append(seq[-1] + seq[-2])
    return seq[:count]
