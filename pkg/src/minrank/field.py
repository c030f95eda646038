"""Exact scalar fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

from .errors import MinRankError

Scalar = Union[Fraction, int]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``modulus is None``) or GF(modulus).

    Rational elements are ``Fraction`` instances, which are always in lowest
    terms with a positive denominator. Prime field elements are plain ints in
    ``range(modulus)``.
    """

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None:
            if not isinstance(self.modulus, int) or not is_prime(self.modulus):
                raise MinRankError(f"modulus {self.modulus!r} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def is_finite(self) -> bool:
        return self.modulus is not None

    @property
    def kind(self) -> str:
        return "Rationals" if self.modulus is None else "PrimeField"

    @property
    def order(self) -> Optional[int]:
        return self.modulus

    def __str__(self):
        return "Q" if self.modulus is None else f"GF({self.modulus})"

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.modulus is None else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.modulus is None else 1

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction or numeric string into this field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.modulus is None:
            if isinstance(value, (int, Rational)) and not isinstance(value, bool):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} to Q")
        p = self.modulus
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return value % p
        if isinstance(value, Rational):
            num, den = value.numerator, value.denominator
            if den % p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes in GF({p})")
            return num * pow(den, -1, p) % p
        raise TypeError(f"cannot coerce {value!r} to GF({p})")

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.modulus is None:
            return a + b
        return (a + b) % self.modulus

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.modulus is None:
            return a - b
        return (a - b) % self.modulus

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.modulus is None:
            return a * b
        return a * b % self.modulus

    def neg(self, a: Scalar) -> Scalar:
        if self.modulus is None:
            return -a
        return -a % self.modulus

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.modulus is None:
            return 1 / a
        return pow(a, -1, self.modulus)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def elements(self):
        """Iterate over the elements of a finite field in increasing order."""
        if self.modulus is None:
            raise MinRankError("Q is not finite")
        return iter(range(self.modulus))

    def format(self, a: Scalar) -> str:
        if self.modulus is None:
            return str(a)
        return str(int(a))


Q = FieldSpec.rationals()


def GF(p: int) -> FieldSpec:
    return FieldSpec.gf(p)
