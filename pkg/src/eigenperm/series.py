"""Truncated integer power series and the self-composition shift sequence.

Series here have zero constant term: ``coeffs[i]`` is the coefficient of
``x**(i+1)``.  All arithmetic is exact over Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perms import InvalidInputError

__all__ = ["PowerSeries", "compose", "eigensequence", "verify_shift"]


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients of x^1 .. x^N for a series with zero constant term."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) < 1:
            raise InvalidInputError("a series needs at least the x^1 coefficient")
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise InvalidInputError(f"coefficients must be ints, got {c!r}")

    @property
    def order(self) -> int:
        """The truncation order N."""
        return len(self.coeffs)

    @classmethod
    def identity(cls, order: int) -> "PowerSeries":
        """The series x, truncated at the given order."""
        if order < 1:
            raise InvalidInputError("order must be at least 1")
        return cls((1,) + (0,) * (order - 1))


def _mul(u: Sequence[int], v: Sequence[int], order: int) -> list[int]:
    # Truncated product; index i holds the coefficient of x^(i+1).
    out = [0] * order
    for i, ui in enumerate(u):
        if ui:
            for j in range(order - i - 1):
                vj = v[j]
                if vj:
                    out[i + j + 1] += ui * vj
    return out


def compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """The composition outer(inner(x)), truncated at the shared order.

    >>> b = PowerSeries((1, 1, 0, 0))
    >>> compose(b, b).coeffs
    (1, 2, 2, 1)
    """
    if outer.order != inner.order:
        raise InvalidInputError(
            f"truncation orders differ: {outer.order} != {inner.order}"
        )
    n = outer.order
    a = outer.coeffs
    b = list(inner.coeffs)
    out = [0] * n
    power = b[:]
    for k in range(1, n + 1):
        ak = a[k - 1]
        if ak:
            for i in range(n):
                ci = power[i]
                if ci:
                    out[i] += ak * ci
        if k < n:
            power = _mul(power, b, n)
    return PowerSeries(tuple(out))


def eigensequence(order: int) -> list[int]:
    """First ``order`` terms of the monic sequence whose series shifts left
    under self-composition: ``[x^n] B(B(x)) = b_{n+1}`` with ``b_1 = 1``.

    >>> eigensequence(7)
    [1, 1, 2, 6, 23, 104, 531]
    """
    if not isinstance(order, int) or order < 1:
        raise InvalidInputError(f"order must be a positive integer, got {order!r}")
    b = [1]
    for n in range(1, order):
        prefix = PowerSeries(tuple(b))
        b.append(compose(prefix, prefix).coeffs[n - 1])
    return b


def verify_shift(terms: Iterable[int], order: int) -> bool:
    """Check the shift property ``[x^n] B(B(x)) = b_{n+1}`` for n < order.

    ``terms`` supplies b_1, b_2, ...; at least ``order`` terms are needed.

    >>> verify_shift([1, 1, 2, 6, 23], 5)
    True
    >>> verify_shift([1, 1, 1, 1, 1], 3)
    False
    """
    ts = list(terms)
    if order < 1 or len(ts) < order:
        raise InvalidInputError("need at least `order` terms")
    if order == 1:
        return True
    prefix = PowerSeries(tuple(ts[: order - 1]))
    comp = compose(prefix, prefix).coeffs
    return all(comp[n - 1] == ts[n] for n in range(1, order))
