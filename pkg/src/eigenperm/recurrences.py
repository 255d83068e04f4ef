"""Counting recurrences for the ``3(5)241`` class.

Three interlocking tables: ``a[n]`` counts class members of length n,
``ascent_start[n]`` counts members of length n+1 whose entries start with
an ascent at the bottom value (the convolution partner of ``a``), and
``by_first`` refines ``a`` by the value of the first entry.  A separate
route expresses ``a[n]`` as a sum over compositions of n weighted by how
many same-length compositions dominate them; dropping the dominance
weight collapses the sum to the Catalan numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perms import InvalidInputError, ResourceLimitError

__all__ = [
    "RecurrenceTables",
    "bell_numbers",
    "catalan_via_compositions",
    "compositions",
    "counts_via_dominance",
    "dominance_count",
    "recurrence_tables",
]


@dataclass(frozen=True)
class RecurrenceTables:
    """Joint tables a_n, c_n and the triangle a_{n,k}.

    ``a[n]`` is the class count for length n (n = 0..N); ``ascent_start``
    holds c_1..c_N; ``by_first[n-1]`` is the row (a_{n,1}, ..., a_{n,n})
    counting members of length n with first entry k.
    """

    a: tuple[int, ...]
    ascent_start: tuple[int, ...]
    by_first: tuple[tuple[int, ...], ...]


def recurrence_tables(n_max: int) -> RecurrenceTables:
    """Fill the three tables up to length ``n_max``.

    a_0 = c_1 = 1 and, for n >= 1:

    * a_n   = sum_{i<n} a_i * c_{n-i}
    * c_n   = sum_{i<n} i * a_{n-1,i}              (n >= 2)
    * a_{n,k} = sum_{i<k} a_i * sum_{j>=k-i} a_{n-1-i,j}   (k < n),
      and a_{n,n} = a_{n-1}.

    >>> t = recurrence_tables(4)
    >>> t.a
    (1, 1, 2, 6, 23)
    >>> t.ascent_start
    (1, 1, 3, 12)
    >>> t.by_first[2]
    (2, 2, 2)
    """
    if not isinstance(n_max, int) or n_max < 1:
        raise InvalidInputError(f"n_max must be a positive integer, got {n_max!r}")
    a = [1]
    c = [1]
    rows: list[tuple[int, ...]] = []
    suffix: list[list[int]] = []
    for n in range(1, n_max + 1):
        if n >= 2:
            prev = rows[n - 2]
            c.append(sum(i * prev[i - 1] for i in range(1, n)))
        a.append(sum(a[i] * c[n - i - 1] for i in range(n)))
        row = []
        for k in range(1, n):
            total = 0
            for i in range(k):
                m = n - 1 - i
                j0 = k - i
                if 1 <= j0 <= m:
                    total += a[i] * suffix[m - 1][j0]
            row.append(total)
        row.append(a[n - 1])
        rows.append(tuple(row))
        suf = [0] * (n + 2)
        for j in range(n, 0, -1):
            suf[j] = suf[j + 1] + row[j - 1]
        suffix.append(suf)
    return RecurrenceTables(tuple(a), tuple(c), tuple(rows))


def compositions(n: int) -> list[tuple[int, ...]]:
    """All compositions of n, first part descending then recursively so.

    >>> compositions(3)
    [(3,), (2, 1), (1, 2), (1, 1, 1)]
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"n must be a positive integer, got {n!r}")
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    def rec(remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(remaining, 0, -1):
            acc.append(part)
            rec(remaining - part)
            acc.pop()

    rec(n)
    return out


def dominance_count(comp: Sequence[int]) -> int:
    """Number of same-length compositions whose prefix sums dominate ``comp``.

    d dominates c when d_1+...+d_i >= c_1+...+c_i for every i (both have
    the same total, so the last prefix is automatic).

    >>> dominance_count((1, 2))
    2
    >>> dominance_count((1, 1, 1))
    1
    """
    c = tuple(comp)
    if not c or any(not isinstance(x, int) or x < 1 for x in c):
        raise InvalidInputError(f"a composition needs positive integer parts, got {c!r}")
    n = sum(c)
    r = len(c)
    prefix = []
    s = 0
    for x in c:
        s += x
        prefix.append(s)
    # g[s] = number of admissible d-prefixes with the current length and sum s
    g = [0] * (n + 1)
    g[0] = 1
    for i in range(1, r + 1):
        cum = 0
        cums = [0] * (n + 2)
        for s in range(n + 1):
            cum += g[s]
            cums[s + 1] = cum
        h = [0] * (n + 1)
        # after i parts the sum is at least prefix[i-1] and leaves >= 1 per remaining part
        for t in range(prefix[i - 1], n - (r - i) + 1):
            h[t] = cums[t]
        g = h
    return g[n]


def counts_via_dominance(n_max: int, limit: int = 16) -> list[int]:
    """Class counts a_0..a_{n_max} from the dominance-weighted composition sum.

    a_n = sum over compositions c of n of
    ``dominance_count(c) * prod a_{c_i - 1}``.

    >>> counts_via_dominance(4)
    [1, 1, 2, 6, 23]
    """
    return _composition_sum(n_max, limit, weighted=True)


def catalan_via_compositions(n_max: int, limit: int = 16) -> list[int]:
    """Same composition sum with the dominance weight dropped: Catalan numbers.

    >>> catalan_via_compositions(4)
    [1, 1, 2, 5, 14]
    """
    return _composition_sum(n_max, limit, weighted=False)


def _composition_sum(n_max: int, limit: int, weighted: bool) -> list[int]:
    if not isinstance(n_max, int) or n_max < 0:
        raise InvalidInputError(f"n_max must be a nonnegative integer, got {n_max!r}")
    if n_max > limit:
        raise ResourceLimitError(
            f"composition sum at n={n_max} exceeds the limit {limit}"
        )
    a = [1]
    for n in range(1, n_max + 1):
        total = 0
        for c in compositions(n):
            term = dominance_count(c) if weighted else 1
            for part in c:
                term *= a[part - 1]
            total += term
        a.append(total)
    return a


def bell_numbers(n_max: int) -> list[int]:
    """Bell numbers B_0..B_{n_max} via the standard triangle.

    >>> bell_numbers(5)
    [1, 1, 2, 5, 15, 52]
    """
    if not isinstance(n_max, int) or n_max < 0:
        raise InvalidInputError(f"n_max must be a nonnegative integer, got {n_max!r}")
    bells = [1]
    row = [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        bells.append(nxt[0])
        row = nxt
    return bells[: n_max + 1]
