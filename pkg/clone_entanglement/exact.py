"""Exact numbers used by the analytic path.

All density-matrix entries are rationals except the clone-ancilla coherence,
which for N >= 2 is a finite sum of rational multiples of square roots.
"""
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

import sympy
from sympy.ntheory.factor_ import core


Rational = Fraction

RationalLike = Union[int, Fraction]

_SIGN_DIGITS = 30
_SIGN_MAX_PRECISION = 2000
_FLOAT_FILTER = 16 * sys.float_info.epsilon


def square_free_split(n: int) -> Tuple[int, int]:
    """Split n >= 0 as k**2 * r with r square-free; returns (k, r)."""
    if n < 0:
        raise ValueError(f"cannot split a negative integer: {n}")
    if n == 0:
        return 0, 1
    radicand = int(core(n, 2))
    return math.isqrt(n // radicand), radicand


@dataclass(frozen=True)
class QuadraticSurd:
    """Exact value sum_k r_k * sqrt(n_k).

    terms holds (n_k, r_k) pairs with distinct square-free n_k in increasing
    order and non-zero rational r_k; the empty tuple is zero. Distinct
    square-free radicands are linearly independent over the rationals, so this
    representation is canonical and equality is structural.
    """
    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def from_rational(cls, value: RationalLike) -> "QuadraticSurd":
        value = Fraction(value)
        return cls(((1, value),)) if value else cls()

    @classmethod
    def from_sqrt(cls, coefficient: RationalLike, radicand: RationalLike) -> "QuadraticSurd":
        """coefficient * sqrt(radicand) for a non-negative rational radicand."""
        radicand = Fraction(radicand)
        if radicand < 0:
            raise ValueError(f"negative radicand: {radicand}")
        # sqrt(p/q) = sqrt(p*q) / q
        k, r = square_free_split(radicand.numerator * radicand.denominator)
        return cls._collect([(r, Fraction(coefficient) * k / radicand.denominator)])

    @classmethod
    def _collect(cls, pairs) -> "QuadraticSurd":
        merged = {}
        for radicand, coefficient in pairs:
            merged[radicand] = merged.get(radicand, Fraction(0)) + coefficient
        return cls(tuple(sorted((n, r) for n, r in merged.items() if r)))

    @classmethod
    def sum(cls, values) -> "QuadraticSurd":
        return cls._collect(pair for value in values for pair in value.terms)

    @property
    def is_rational(self) -> bool:
        return all(n == 1 for n, _ in self.terms)

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.terms[0][1] if self.terms else Fraction(0)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadraticSurd.from_rational(other)
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return QuadraticSurd._collect(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(tuple((n, -r) for n, r in self.terms))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadraticSurd.from_rational(other)
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return QuadraticSurd(tuple((n, r * other) for n, r in self.terms)) if other else QuadraticSurd()
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        pairs = []
        for m, r in self.terms:
            for n, s in other.terms:
                # sqrt(m)*sqrt(n) = g*sqrt(m*n/g^2), square-free since m and n are
                g = math.gcd(m, n)
                pairs.append(((m // g) * (n // g), r * s * g))
        return QuadraticSurd._collect(pairs)

    __rmul__ = __mul__

    def square(self) -> "QuadraticSurd":
        return self * self

    def to_sympy(self) -> sympy.Expr:
        return sympy.Add(*[sympy.Rational(r.numerator, r.denominator) * sympy.sqrt(n) for n, r in self.terms])

    def sign(self) -> int:
        if not self.terms:
            return 0
        if self.is_rational:
            return 1 if self.to_fraction() > 0 else -1
        if all(r > 0 for _, r in self.terms):
            return 1
        if all(r < 0 for _, r in self.terms):
            return -1
        values = [float(r) * math.sqrt(n) for n, r in self.terms]
        estimate = math.fsum(values)
        # each term carries at most a few ulps of relative error and fsum adds none
        if abs(estimate) > _FLOAT_FILTER * math.fsum(abs(v) for v in values):
            return 1 if estimate > 0 else -1
        # non-zero by linear independence, so a guaranteed-accuracy evaluation settles the sign
        value = self.to_sympy().evalf(_SIGN_DIGITS, strict=True, maxn=_SIGN_MAX_PRECISION)
        return 1 if value > 0 else -1

    def compare(self, other) -> int:
        """Exact sign of self - other."""
        return (self - other).sign()

    def compare_square(self, bound: RationalLike) -> int:
        """Exact sign of self**2 - bound for non-negative self and bound."""
        bound = Fraction(bound)
        if bound < 0 or self.sign() < 0:
            raise ValueError("compare_square needs a non-negative value and bound")
        if len(self.terms) <= 1:
            square = sum((r * r * n for n, r in self.terms), Fraction(0))
            return (square > bound) - (square < bound)
        values = [float(r) * math.sqrt(n) for n, r in self.terms]
        estimate = math.fsum(values)
        magnitude = math.fsum(abs(v) for v in values)
        gap = estimate * estimate - float(bound)
        if abs(gap) > 2 * _FLOAT_FILTER * (magnitude * magnitude + float(bound)):
            return 1 if gap > 0 else -1
        return (self.square() - bound).sign()

    def __float__(self) -> float:
        return float(sum(float(r) * math.sqrt(n) for n, r in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for n, r in self.terms:
            text = f"{r.numerator}" if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
            if n != 1:
                text = f"{text}*sqrt({n})"
            parts.append(text)
        return "+".join(parts).replace("+-", "-")
