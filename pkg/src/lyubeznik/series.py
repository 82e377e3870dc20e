"""Truncated power series with exact integer coefficients.

A ``TruncatedSeries`` is a coefficient list of fixed length; addition and
multiplication discard everything above the truncation order.  Division
never appears: the only inverses needed are those of ``1 + c*h``, which
are alternating geometric series, so every intermediate value stays an
exact integer.
"""

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer polynomial truncated at ``order``: coefficients of h^0..h^order.

    >>> a = TruncatedSeries.binomial_power(3, 2)
    >>> a.coeffs
    (1, 3, 3)
    >>> (a * TruncatedSeries.geometric_inverse(1, 2)).coeffs
    (1, 2, 1)
    """

    order: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.order < 1:
            raise ValueError(f"truncation order must be positive, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}")
        if any(not isinstance(c, int) for c in self.coeffs):
            raise ValueError("coefficients must be integers")

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        """The multiplicative unit at the given truncation order."""
        return cls(order, (1,) + (0,) * order)

    @classmethod
    def binomial_power(cls, exponent: int, order: int) -> "TruncatedSeries":
        """(1 + h)**exponent, truncated.

        >>> TruncatedSeries.binomial_power(5, 3).coeffs
        (1, 5, 10, 10)
        """
        if exponent < 0:
            raise ValueError(f"exponent must be nonnegative, got {exponent}")
        return cls(order, tuple(comb(exponent, i) for i in range(order + 1)))

    @classmethod
    def geometric_inverse(cls, c: int, order: int) -> "TruncatedSeries":
        """The inverse of 1 + c*h: the alternating geometric series.

        >>> TruncatedSeries.geometric_inverse(5, 3).coeffs
        (1, -5, 25, -125)
        """
        return cls(order, tuple((-c) ** i for i in range(order + 1)))

    def _check_compatible(self, other) -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} and {other.order}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        return TruncatedSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        out = [0] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.order + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(self.order, tuple(out))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]
