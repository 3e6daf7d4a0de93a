"""
Scalars carried with an absolute error bound.

Every operation returns a bound on |f(x) - f(x~)| given |x - x~| <= error,
from the mean-value theorem or an exact worst case; these are what the
inequality evaluators add up into a certified error.
"""

import math
from dataclasses import dataclass

Number = int | float


@dataclass(frozen=True)
class Measured:
    value: float
    error: float = 0.0

    @classmethod
    def exact(cls, value: Number) -> "Measured":
        return cls(float(value), 0.0)

    @property
    def lower(self) -> float:
        return self.value - self.error

    @property
    def upper(self) -> float:
        return self.value + self.error

    def __add__(self, other: "Measured | Number") -> "Measured":
        o = _lift(other)
        return Measured(self.value + o.value, self.error + o.error)

    __radd__ = __add__

    def __neg__(self) -> "Measured":
        return Measured(-self.value, self.error)

    def __sub__(self, other: "Measured | Number") -> "Measured":
        o = _lift(other)
        return Measured(self.value - o.value, self.error + o.error)

    def __rsub__(self, other: Number) -> "Measured":
        return _lift(other) - self

    def __mul__(self, other: "Measured | Number") -> "Measured":
        o = _lift(other)
        error = abs(self.value) * o.error + abs(o.value) * self.error + self.error * o.error
        return Measured(self.value * o.value, error)

    __rmul__ = __mul__

    def __truediv__(self, other: "Measured | Number") -> "Measured":
        o = _lift(other)
        denominator = abs(o.value)
        if denominator <= o.error:
            return Measured(self.value / o.value if o.value else math.inf, math.inf)
        error = (abs(self.value) * o.error + denominator * self.error) / (denominator * (denominator - o.error))
        return Measured(self.value / o.value, error)

    def __rtruediv__(self, other: Number) -> "Measured":
        return _lift(other) / self

    def __pow__(self, p: Number) -> "Measured":
        """x^p for x >= 0 (negative values are clipped to 0) and p > 0."""
        if p <= 0:
            raise ValueError(f"exponent must be positive, got {p}")
        x = max(self.value, 0.0)
        value = x**p
        if self.error == 0.0:
            return Measured(value, 0.0)
        if p >= 1:
            return Measured(value, p * (x + self.error) ** (p - 1) * self.error)
        # |x^p - y^p| <= |x - y|^p for 0 < p < 1
        holder = self.error**p
        low = x - self.error
        if low <= 0.0:
            return Measured(value, holder)
        return Measured(value, min(p * low ** (p - 1) * self.error, holder))

    def __abs__(self) -> "Measured":
        return Measured(abs(self.value), self.error)

    def sqrt(self) -> "Measured":
        return self**0.5

    def __float__(self) -> float:
        return self.value


def _lift(x: "Measured | Number") -> Measured:
    return x if isinstance(x, Measured) else Measured(float(x), 0.0)


def sin(x: Measured) -> Measured:
    return Measured(math.sin(x.value), min(x.error, 2.0))


def cos(x: Measured) -> Measured:
    return Measured(math.cos(x.value), min(x.error, 2.0))


def csc(x: Measured) -> Measured:
    return 1.0 / sin(x)


def mmax(*xs: Measured) -> Measured:
    return Measured(max(x.value for x in xs), max(x.error for x in xs))


def mmin(*xs: Measured) -> Measured:
    return Measured(min(x.value for x in xs), max(x.error for x in xs))


def msum(xs: "list[Measured]") -> Measured:
    total = Measured(0.0, 0.0)
    for x in xs:
        total = total + x
    return total
