"""Permutations, marked-letter patterns, and the OK predicate.

Permutations are tuples of distinct positive integers in one-line notation.
A *standard* permutation on [n] uses each of the values 1..n exactly once.

A marked pattern such as ``3(5)241`` is a standard permutation with one
letter singled out.  A permutation *satisfies* the pattern when every
occurrence of the pattern-minus-marked-letter extends, by one extra entry
in the position gap and value gap left by the marked letter, to an
occurrence of the full pattern.  For ``3(5)241`` this says: every 3241
instance is part of a 35241 instance.

The module also provides the left-to-right-maximum factorization, the
terminal increasing run of top values (LIT entries), the dihedral symmetry
action on permutations and patterns, brute-force censuses, and a fast
structural recognizer for the ``3(5)241`` class.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "GENERATORS",
    "InvalidInputError",
    "LRMaxFactorization",
    "Perm",
    "ResourceLimitError",
    "UnderlinedPattern",
    "apply_pattern_symmetry",
    "apply_symmetry",
    "as_perm",
    "census",
    "complement",
    "contains",
    "fast_35241ok",
    "format_pattern",
    "invert",
    "is_avoider",
    "is_standard",
    "lit_entries",
    "lrmax_factorize",
    "occurrences",
    "parse_pattern",
    "reduce_word",
    "reverse",
    "satisfies",
]

Perm = tuple[int, ...]

GENERATORS = ("complement", "reverse", "inverse")


class InvalidInputError(ValueError):
    """An argument violates a documented precondition."""


class ResourceLimitError(RuntimeError):
    """A brute-force operation would exceed its configured size limit."""


def as_perm(word: Iterable[int]) -> Perm:
    """Return ``word`` as a tuple after checking entries are distinct positive ints.

    >>> as_perm([3, 1, 2])
    (3, 1, 2)
    """
    p = tuple(word)
    for e in p:
        if not isinstance(e, int) or isinstance(e, bool) or e < 1:
            raise InvalidInputError(f"entries must be positive integers, got {p!r}")
    if len(set(p)) != len(p):
        raise InvalidInputError(f"entries must be distinct, got {p!r}")
    return p


def is_standard(p: Sequence[int]) -> bool:
    """True when ``p`` uses exactly the values 1..len(p).

    >>> is_standard((2, 3, 1))
    True
    >>> is_standard((9, 4, 7))
    False
    """
    return sorted(p) == list(range(1, len(p) + 1))


def reduce_word(word: Iterable[int]) -> Perm:
    """Rank the entries of ``word``: the i-th smallest entry becomes i.

    >>> reduce_word((9, 4, 7))
    (3, 1, 2)
    >>> reduce_word(())
    ()
    """
    p = as_perm(word)
    rank = {v: i for i, v in enumerate(sorted(p), start=1)}
    return tuple(rank[v] for v in p)


def lit_entries(word: Iterable[int]) -> Perm:
    """Terminal run of top values appearing in increasing order (LIT entries).

    These are the values ``s_j < s_{j+1} < ... < s_m`` (consecutive in the
    sorted support, ending at the maximum) that occur left to right in
    ``word``, with ``j`` as small as possible.

    >>> lit_entries((2, 1, 4, 7, 6, 5, 8, 9, 3))
    (7, 8, 9)
    >>> lit_entries((3, 1, 5, 2, 4))
    (5,)
    >>> lit_entries(())
    ()
    """
    p = as_perm(word)
    if not p:
        return ()
    support = sorted(p)
    pos = {v: i for i, v in enumerate(p)}
    j = len(support) - 1
    while j > 0 and pos[support[j - 1]] < pos[support[j]]:
        j -= 1
    return tuple(support[j:])


@dataclass(frozen=True)
class LRMaxFactorization:
    """Factorization of a permutation at its left-to-right maxima.

    ``factors[i]`` is a pair ``(head, tail)``: a left-to-right maximum and
    the (possibly empty) run of smaller entries following it before the
    next maximum.  ``lit_start`` is the index of the first factor whose
    head is an LIT entry; the LIT entries always form a terminal segment
    of the heads.
    """

    factors: tuple[tuple[int, Perm], ...]
    lit_start: int

    @property
    def heads(self) -> Perm:
        return tuple(h for h, _ in self.factors)

    @property
    def lit(self) -> Perm:
        """The LIT entry values, ascending."""
        return self.heads[self.lit_start:]


def lrmax_factorize(p: Iterable[int]) -> LRMaxFactorization:
    """Split ``p`` into factors headed by its left-to-right maxima.

    >>> f = lrmax_factorize((3, 1, 5, 2, 4))
    >>> f.factors
    ((3, (1,)), (5, (2, 4)))
    >>> f.lit
    (5,)
    """
    p = as_perm(p)
    factors: list[tuple[int, Perm]] = []
    head: int | None = None
    tail: list[int] = []
    for v in p:
        if head is None or v > head:
            if head is not None:
                factors.append((head, tuple(tail)))
            head, tail = v, []
        else:
            tail.append(v)
    if head is not None:
        factors.append((head, tuple(tail)))
    lit = lit_entries(p)
    lit_start = len(factors) - len(lit)
    if tuple(h for h, _ in factors[lit_start:]) != lit:
        raise AssertionError("LIT entries are not a terminal segment of the heads")
    return LRMaxFactorization(tuple(factors), lit_start)


def complement(p: Iterable[int]) -> Perm:
    """Replace each entry e of a standard permutation by n+1-e."""
    p = _checked_standard(p)
    n = len(p)
    return tuple(n + 1 - e for e in p)


def reverse(p: Iterable[int]) -> Perm:
    """Read the permutation right to left."""
    return _checked_standard(p)[::-1]


def invert(p: Iterable[int]) -> Perm:
    """Group-theoretic inverse: entry i of the result is the position of i in p.

    >>> invert((2, 3, 1))
    (3, 1, 2)
    """
    p = _checked_standard(p)
    out = [0] * len(p)
    for i, v in enumerate(p, start=1):
        out[v - 1] = i
    return tuple(out)


def _checked_standard(p: Iterable[int]) -> Perm:
    q = as_perm(p)
    if not is_standard(q):
        raise InvalidInputError(f"a standard permutation is required, got {q!r}")
    return q


def _generator_list(g: str | Iterable[str]) -> tuple[str, ...]:
    names = tuple(g.split()) if isinstance(g, str) else tuple(g)
    for name in names:
        if name not in GENERATORS:
            raise InvalidInputError(f"unknown symmetry generator {name!r}")
    return names


def apply_symmetry(p: Iterable[int], g: str | Iterable[str]) -> Perm:
    """Apply a word over {complement, reverse, inverse}, left to right.

    >>> apply_symmetry((2, 3, 1), "reverse")
    (1, 3, 2)
    >>> apply_symmetry((2, 3, 1), ("reverse", "reverse"))
    (2, 3, 1)
    """
    q = _checked_standard(p)
    for name in _generator_list(g):
        if name == "complement":
            q = complement(q)
        elif name == "reverse":
            q = reverse(q)
        else:
            q = invert(q)
    return q


@dataclass(frozen=True)
class UnderlinedPattern:
    """A standard permutation with one marked letter.

    ``full`` is the complete pattern and ``mark`` the 1-based position of
    the marked letter.  ``3(5)241`` is ``UnderlinedPattern((3, 5, 2, 4, 1), 2)``.
    """

    full: Perm
    mark: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "full", as_perm(self.full))
        if not self.full or not is_standard(self.full):
            raise InvalidInputError(f"pattern must be a nonempty standard permutation, got {self.full!r}")
        if not isinstance(self.mark, int) or not 1 <= self.mark <= len(self.full):
            raise InvalidInputError(f"mark position {self.mark!r} out of range for {self.full!r}")

    @cached_property
    def base(self) -> Perm:
        """The pattern with the marked letter deleted, reduced."""
        rest = self.full[: self.mark - 1] + self.full[self.mark:]
        return reduce_word(rest)

    @cached_property
    def _extension(self) -> tuple[int, int, int]:
        # (slot, lo_idx, hi_idx): the inserted entry must sit after base
        # position slot-1 and before base position slot, with value between
        # the occurrence values at base indices lo_idx and hi_idx (-1: none).
        w = self.full[self.mark - 1]
        rest = self.full[: self.mark - 1] + self.full[self.mark:]
        lo = hi = -1
        for t, v in enumerate(rest):
            if v == w - 1:
                lo = t
            elif v == w + 1:
                hi = t
        return self.mark - 1, lo, hi

    def __str__(self) -> str:
        return format_pattern(self)


def parse_pattern(text: str) -> UnderlinedPattern:
    """Parse e.g. ``"3(5)241"`` into an :class:`UnderlinedPattern`.

    Letters are single digits; exactly one letter is parenthesized.

    >>> parse_pattern("3(5)241").mark
    2
    """
    letters: list[int] = []
    mark: int | None = None
    i, s = 0, text.strip()
    while i < len(s):
        ch = s[i]
        if ch == "(":
            if mark is not None:
                raise InvalidInputError(f"more than one marked letter in {text!r}")
            if i + 2 >= len(s) or not s[i + 1].isdigit() or s[i + 2] != ")":
                raise InvalidInputError(f"malformed mark in {text!r}")
            letters.append(int(s[i + 1]))
            mark = len(letters)
            i += 3
        elif ch.isdigit():
            letters.append(int(ch))
            i += 1
        elif ch.isspace():
            i += 1
        else:
            raise InvalidInputError(f"unexpected character {ch!r} in pattern {text!r}")
    if mark is None:
        raise InvalidInputError(f"no marked letter in {text!r}")
    return UnderlinedPattern(tuple(letters), mark)


def format_pattern(up: UnderlinedPattern) -> str:
    """Inverse of :func:`parse_pattern`.

    >>> format_pattern(UnderlinedPattern((3, 5, 2, 4, 1), 2))
    '3(5)241'
    """
    return "".join(f"({v})" if i == up.mark else str(v) for i, v in enumerate(up.full, start=1))


def apply_pattern_symmetry(up: UnderlinedPattern, g: str | Iterable[str]) -> UnderlinedPattern:
    """Apply a symmetry word to a marked pattern, transporting the mark.

    Complement keeps the marked position, reverse mirrors it, and inverse
    moves the mark to the position given by the marked letter's value.
    """
    full, mark = up.full, up.mark
    for name in _generator_list(g):
        if name == "complement":
            full = complement(full)
        elif name == "reverse":
            full = reverse(full)
            mark = len(full) + 1 - mark
        else:
            value = full[mark - 1]
            full = invert(full)
            mark = value
    return UnderlinedPattern(full, mark)


@lru_cache(maxsize=None)
def _tight_bounds(pattern: Perm) -> tuple[tuple[int, int], ...]:
    # For each pattern index t, the earlier indices holding the closest
    # pattern values below and above pattern[t] (-1: unbounded).  Checking
    # these two suffices for order-isomorphism of a partial match.
    bounds = []
    for t, v in enumerate(pattern):
        lo_ref = hi_ref = -1
        lo_val, hi_val = 0, len(pattern) + 1
        for s in range(t):
            if lo_val < pattern[s] < v:
                lo_val, lo_ref = pattern[s], s
            elif v < pattern[s] < hi_val:
                hi_val, hi_ref = pattern[s], s
        bounds.append((lo_ref, hi_ref))
    return tuple(bounds)


def _iter_occurrences(p: Perm, pattern: Perm) -> Iterator[tuple[int, ...]]:
    # Yields 0-based position tuples in lexicographic order.
    m, n = len(pattern), len(p)
    if m == 0:
        yield ()
        return
    if m > n:
        return
    bounds = _tight_bounds(pattern)
    occ = [0] * m
    vals = [0] * m
    big = n + 1
    t = q = 0
    while True:
        if q > n - (m - t):
            if t == 0:
                return
            t -= 1
            q = occ[t] + 1
            continue
        v = p[q]
        lo_ref, hi_ref = bounds[t]
        if (vals[lo_ref] if lo_ref >= 0 else 0) < v < (vals[hi_ref] if hi_ref >= 0 else big):
            occ[t] = q
            vals[t] = v
            if t == m - 1:
                yield tuple(occ)
                q += 1
            else:
                t += 1
                q += 1
        else:
            q += 1


def occurrences(p: Iterable[int], pattern: Iterable[int]) -> list[tuple[int, ...]]:
    """All occurrences of ``pattern`` in ``p`` as 1-based position tuples.

    >>> occurrences((3, 2, 1), (3, 2, 1))
    [(1, 2, 3)]
    >>> occurrences((1, 2), (2, 1))
    []
    """
    p = as_perm(p)
    pattern = as_perm(pattern)
    if pattern and not is_standard(pattern):
        raise InvalidInputError(f"pattern must be standard, got {pattern!r}")
    return [tuple(q + 1 for q in occ) for occ in _iter_occurrences(p, pattern)]


def contains(p: Iterable[int], pattern: Iterable[int]) -> bool:
    """True when ``pattern`` occurs in ``p`` at least once."""
    p = as_perm(p)
    pattern = as_perm(pattern)
    if pattern and not is_standard(pattern):
        raise InvalidInputError(f"pattern must be standard, got {pattern!r}")
    return next(_iter_occurrences(p, pattern), None) is not None


def is_avoider(p: Iterable[int], pattern: Iterable[int]) -> bool:
    """True when ``pattern`` does not occur in ``p``."""
    return not contains(p, pattern)


def _satisfies(p: Perm, up: UnderlinedPattern) -> bool:
    # Core loop without argument validation; p standard, possibly empty.
    n = len(p)
    base = up.base
    slot, lo_idx, hi_idx = up._extension
    big = n + 1
    nb = len(base)
    for occ in _iter_occurrences(p, base):
        lo = p[occ[lo_idx]] if lo_idx >= 0 else 0
        hi = p[occ[hi_idx]] if hi_idx >= 0 else big
        a = occ[slot - 1] + 1 if slot > 0 else 0
        b = occ[slot] if slot < nb else n
        for x in range(a, b):
            if lo < p[x] < hi:
                break
        else:
            return False
    return True


def satisfies(p: Iterable[int], up: UnderlinedPattern) -> bool:
    """True when every base occurrence of ``up`` in ``p`` extends to the full pattern.

    The extension entry must land in the position gap and the value gap
    that the marked letter occupies inside ``up.full``.  The empty
    permutation satisfies every pattern whose base is nonempty.

    >>> satisfies((3, 2, 4, 1), parse_pattern("3(5)241"))
    False
    >>> satisfies((3, 5, 2, 4, 1), parse_pattern("3(5)241"))
    True
    """
    q = as_perm(p)
    if q and not is_standard(q):
        raise InvalidInputError(f"a standard permutation is required, got {q!r}")
    return _satisfies(q, up)


def census(up: UnderlinedPattern, n: int, limit: int = 10) -> int:
    """Number of standard permutations of [n] satisfying ``up``.

    Brute force over all n! permutations; refuses to run past ``limit``.

    >>> census(parse_pattern("3(5)241"), 4)
    23
    """
    if not isinstance(n, int) or n < 0:
        raise InvalidInputError(f"n must be a nonnegative integer, got {n!r}")
    if n > limit:
        raise ResourceLimitError(f"census at n={n} exceeds the limit {limit}")
    if n == 0:
        return int(_satisfies((), up))
    count = 0
    sat = _satisfies
    for p in itertools.permutations(range(1, n + 1)):
        if sat(p, up):
            count += 1
    return count


def fast_35241ok(p: Iterable[int]) -> bool:
    """Structural recognizer for the ``3(5)241`` class.

    A permutation is in the class iff the tails of its left-to-right
    maximum factorization are value-ordered (everything in an earlier tail
    is smaller than everything in a later tail) and each reduced tail is
    recursively in the class.

    >>> fast_35241ok((3, 2, 4, 1))
    False
    >>> fast_35241ok((3, 5, 2, 4, 1))
    True
    """
    q = as_perm(p)
    if q and not is_standard(q):
        raise InvalidInputError(f"a standard permutation is required, got {q!r}")
    return _fast_ok(q)


def _fast_ok(p: Perm) -> bool:
    if len(p) < 4:
        return True
    tails: list[list[int]] = []
    head = 0
    for v in p:
        if v > head:
            head = v
            tails.append([])
        else:
            tails[-1].append(v)
    prev_max = 0
    for tail in tails:
        if tail:
            if min(tail) < prev_max:
                return False
            prev_max = max(tail)
    for tail in tails:
        if len(tail) >= 4 and not _fast_ok(reduce_word(tail)):
            return False
    return True
