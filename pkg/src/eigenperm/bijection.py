"""The bijection pipeline between the ``3(5)241`` class and shorter data.

A class member p of length n splits at its maximum as sigma n tau.  The
pipeline encodes tau's interleaving into stars on the reduced sigma
(:func:`star_encode`), collapses star runs into marked LIT entries plus a
bit sequence (:func:`collapse_stars`), sorts factor tails to reach a
321-avoiding permutation, and rearranges the LRmax factors of that
permutation into a list of shorter class members with a moving window
(:func:`window_forward`).  Composing the stages maps p of length n to a
pair (rho, v) -- a shorter class member and a list of class members --
carrying total size n-1, which is exactly the structure behind the
left-shift-under-composition recurrence.

Every stage has an explicit inverse here, and each is exercised round-trip
by the test suite.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .perms import (
    InvalidInputError,
    Perm,
    as_perm,
    fast_35241ok,
    is_avoider,
    is_standard,
    lit_entries,
    lrmax_factorize,
    reduce_word,
)

__all__ = [
    "MarkedPermutation",
    "StarredPermutation",
    "WindowPlan",
    "collapse_stars",
    "eigen_compose",
    "eigen_decompose",
    "expand_stars",
    "list_to_marked",
    "marked_to_list",
    "sort_factor_tails",
    "split_at_max_ok",
    "star_decode",
    "star_encode",
    "window_forward",
    "window_inverse",
    "window_plan",
]


def split_at_max_ok(sigma: Iterable[int], tau: Iterable[int]) -> bool:
    """Whether sigma (n) tau is in the class, tested on the two halves.

    True iff both halves are in the class after reduction and every entry
    of sigma exceeding min(tau) is an LIT entry of sigma.

    >>> split_at_max_ok((3, 2), (1,))
    False
    >>> split_at_max_ok((2, 3), (1,))
    True
    """
    s = as_perm(sigma)
    t = as_perm(tau)
    n = len(s) + len(t) + 1
    if sorted(s + t) != list(range(1, n)):
        raise InvalidInputError("sigma and tau together must use the values 1..n-1")
    if not fast_35241ok(reduce_word(s)) or not fast_35241ok(reduce_word(t)):
        return False
    if t:
        floor = min(t)
        lit = set(lit_entries(s))
        if any(v > floor and v not in lit for v in s):
            return False
    return True


@dataclass(frozen=True)
class StarredPermutation:
    """A standard permutation with stars before LIT entries or after the max.

    ``before[i]`` counts the stars immediately preceding position i;
    ``after_max`` counts the stars immediately after the maximum entry.
    Stars may only precede LIT entries.  An empty base may still carry
    ``after_max`` stars (the degenerate all-from-tau case).
    """

    base: Perm
    before: tuple[int, ...]
    after_max: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_perm(self.base))
        object.__setattr__(self, "before", tuple(self.before))
        if self.base and not is_standard(self.base):
            raise InvalidInputError(f"base must be standard, got {self.base!r}")
        if len(self.before) != len(self.base):
            raise InvalidInputError("one star count per position is required")
        if any(not isinstance(c, int) or c < 0 for c in self.before) or self.after_max < 0:
            raise InvalidInputError("star counts must be nonnegative integers")
        lit = set(lit_entries(self.base))
        for cnt, v in zip(self.before, self.base):
            if cnt and v not in lit:
                raise InvalidInputError(f"stars may only precede LIT entries, found {cnt} before {v}")

    @property
    def star_count(self) -> int:
        return sum(self.before) + self.after_max


@dataclass(frozen=True)
class MarkedPermutation:
    """A standard permutation with a set of marked non-maximal LIT entries."""

    perm: Perm
    marks: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "perm", as_perm(self.perm))
        object.__setattr__(self, "marks", frozenset(self.marks))
        if self.perm and not is_standard(self.perm):
            raise InvalidInputError(f"a standard permutation is required, got {self.perm!r}")
        allowed = set(lit_entries(self.perm)) - {len(self.perm)}
        if not self.marks <= allowed:
            raise InvalidInputError(
                f"marks {sorted(self.marks)} are not non-maximal LIT entries of {self.perm!r}"
            )

    @property
    def k(self) -> int:
        return len(self.marks) + 1


def star_encode(p: Iterable[int]) -> tuple[Perm, StarredPermutation]:
    """Encode a class member p = sigma n tau as (reduce(tau), starred sigma).

    Each entry c of tau contributes one star, placed before the smallest
    sigma entry exceeding c (always an LIT entry) or after sigma's maximum
    when no such entry exists.

    >>> rho, starred = star_encode((1, 2, 3))
    >>> rho, starred.base, starred.star_count
    ((), (1, 2), 0)
    """
    q = _checked_member(p)
    if not q:
        raise InvalidInputError("the empty permutation has no maximum to split at")
    n = len(q)
    pos = q.index(n)
    sigma, tau = q[:pos], q[pos + 1:]
    rho = reduce_word(tau)
    base = reduce_word(sigma)
    before = [0] * len(base)
    after = 0
    if sigma:
        sig_sorted = sorted(sigma)
        pos_of = {v: i for i, v in enumerate(sigma)}
        for c in tau:
            i = bisect_right(sig_sorted, c)
            if i == len(sig_sorted):
                after += 1
            else:
                before[pos_of[sig_sorted[i]]] += 1
    else:
        after = len(tau)
    return rho, StarredPermutation(base, tuple(before), after)


def star_decode(rho: Iterable[int], starred: StarredPermutation) -> Perm:
    """Inverse of :func:`star_encode`.

    Walks the base values bottom-up, letting each star group consume the
    next free values for tau's support; rho is then transplanted onto that
    support and appended after the new maximum.
    """
    r = as_perm(rho)
    if r and not is_standard(r):
        raise InvalidInputError(f"rho must be standard, got {r!r}")
    if not fast_35241ok(r):
        raise InvalidInputError("rho must itself be in the class")
    base = starred.base
    if not fast_35241ok(base):
        raise InvalidInputError("the starred permutation must be in the class")
    m = len(base)
    k = starred.star_count + 1
    if len(r) != k - 1:
        raise InvalidInputError(f"rho must have length {k - 1} (one per star), got {len(r)}")
    n = m + k
    stars_at = [0] * (m + 2)
    for cnt, v in zip(starred.before, base):
        stars_at[v] = cnt
    sigma_val = [0] * (m + 1)
    support: list[int] = []
    nxt = 1
    for t in range(1, m + 1):
        for _ in range(stars_at[t]):
            support.append(nxt)
            nxt += 1
        sigma_val[t - 1] = nxt
        nxt += 1
    for _ in range(starred.after_max):
        support.append(nxt)
        nxt += 1
    sigma = tuple(sigma_val[v - 1] for v in base)
    tau = tuple(support[x - 1] for x in r)
    return sigma + (n,) + tau


def collapse_stars(starred: StarredPermutation) -> tuple[MarkedPermutation, tuple[int, ...]]:
    """Collapse star runs to marks and record the lost structure as bits.

    Star groups before non-maximal LIT entries shrink to a single mark;
    groups around the maximum disappear.  Reading tokens left to right,
    the bit sequence keeps a 1 for each surviving star and for the maximum
    itself, and a 0 for every deleted star.  Its length is the original
    star count plus one.
    """
    base = starred.base
    if not base:
        raise InvalidInputError("cannot collapse stars on an empty permutation")
    top = len(base)
    bits: list[int] = []
    marks: list[int] = []
    for cnt, v in zip(starred.before, base):
        if v == top:
            bits.extend([0] * cnt)
            bits.append(1)
        elif cnt:
            bits.extend([0] * (cnt - 1))
            bits.append(1)
            marks.append(v)
    bits.extend([0] * starred.after_max)
    return MarkedPermutation(base, frozenset(marks)), tuple(bits)


def expand_stars(marked: MarkedPermutation, bits: Sequence[int]) -> StarredPermutation:
    """Inverse of :func:`collapse_stars`.

    The i-th 1 of ``bits`` lands on the i-th mark (in value order), the
    last 1 on the maximum; 0s become extra stars at the location of the
    next 1, or after the maximum once the 1s are exhausted.
    """
    p = marked.perm
    if not p:
        raise InvalidInputError("cannot expand stars on an empty permutation")
    bts = tuple(bits)
    if any(b not in (0, 1) for b in bts):
        raise InvalidInputError(f"bits must be 0 or 1, got {bts!r}")
    marks = sorted(marked.marks)
    if sum(bts) != len(marks) + 1:
        raise InvalidInputError(
            f"expected {len(marks) + 1} ones in the bit sequence, got {sum(bts)}"
        )
    pos_of = {v: i for i, v in enumerate(p)}
    targets = [pos_of[v] for v in marks] + [pos_of[len(p)]]
    before = [0] * len(p)
    run = 0
    idx = 0
    for b in bts:
        if b == 0:
            run += 1
        else:
            if idx == len(targets) - 1:
                before[targets[idx]] += run
            else:
                before[targets[idx]] += run + 1
            run = 0
            idx += 1
    return StarredPermutation(p, tuple(before), run)


def sort_factor_tails(
    p: Iterable[int], marks: Iterable[int] = ()
) -> tuple[MarkedPermutation, tuple[tuple[int, Perm], ...]]:
    """Sort every LRmax factor tail ascending, keeping marks and positions.

    Returns the sorted permutation as a :class:`MarkedPermutation` plus the
    original factors, from which the unsorted tails can be restored (factor
    boundaries do not move).  LIT entries are unchanged by the sort.

    >>> sort_factor_tails((3, 2, 1, 4))[0].perm
    (3, 1, 2, 4)
    """
    fac = lrmax_factorize(p)
    q: list[int] = []
    for head, tail in fac.factors:
        q.append(head)
        q.extend(sorted(tail))
    return MarkedPermutation(tuple(q), frozenset(marks)), fac.factors


@dataclass(frozen=True)
class WindowPlan:
    """Everything the moving-window rearrangement decides for one input.

    ``pane_spans`` tile [0, n) in position order; ``initial_starts`` are
    the pane boundaries present before the window starts moving;
    ``associations`` records, in generation order, the pane-head value
    created at each step (None when the step only dropped a pane);
    ``insertion`` is the reversed association list followed by the values
    at the initial starts; ``rows[r]`` lists the pane-head values routed
    to item r, ascending, with row 0 the first item of the output list.
    """

    pane_spans: tuple[tuple[int, int], ...]
    initial_starts: tuple[int, ...]
    associations: tuple[int | None, ...]
    insertion: tuple[int | None, ...]
    rows: tuple[tuple[int, ...], ...]


def _lrmax_mask(p: Perm) -> list[bool]:
    mask = []
    head = 0
    for v in p:
        mask.append(v > head)
        head = max(head, v)
    return mask


def window_plan(q: Iterable[int], marks: Iterable[int] = ()) -> WindowPlan:
    """Run the moving-window pass over a 321-avoiding marked permutation.

    The window starts as the panes cut at the first LIT entry and at the
    LIT entry following each mark.  While the window is nonempty: let m be
    the largest non-LRmax entry in all panes but the last; if some
    not-yet-empaned LRmax entry exceeds m, the smallest such heads a new
    pane prepended to the window, and in every case the last pane drops
    out of the window.  Each step appends the new head (or None) to the
    association list.
    """
    marked = MarkedPermutation(as_perm(q), frozenset(marks))
    qq = marked.perm
    if not qq:
        raise InvalidInputError("an empty permutation has no window plan")
    if not is_avoider(qq, (3, 2, 1)):
        raise InvalidInputError(f"a 321-avoiding permutation is required, got {qq!r}")
    n = len(qq)
    pos_of = {v: i for i, v in enumerate(qq)}
    lit = lit_entries(qq)
    k = len(marked.marks) + 1
    starts = sorted({pos_of[lit[0]]} | {pos_of[e + 1] for e in marked.marks})
    bounds = starts + [n]
    window: list[tuple[int, int]] = [(bounds[i], bounds[i + 1]) for i in range(k)]
    all_spans = list(window)
    mask = _lrmax_mask(qq)
    lrpos = [i for i, flag in enumerate(mask) if flag]

    def loose_max(span: tuple[int, int]) -> int:
        return max((qq[x] for x in range(*span) if not mask[x]), default=0)

    pane_m = {span: loose_max(span) for span in window}
    left = starts[0]
    free = bisect_left(lrpos, left)  # number of un-empaned LRmax positions
    assoc: list[int | None] = []
    while window:
        m = 0
        for span in window[:-1]:
            pm = pane_m[span]
            if pm > m:
                m = pm
        choice = -1
        for x in lrpos[:free]:
            if qq[x] > m:
                choice = x
                break
        if choice < 0:
            assoc.append(None)
        else:
            assoc.append(qq[choice])
            span = (choice, left)
            pane_m[span] = loose_max(span)
            window.insert(0, span)
            all_spans.append(span)
            left = choice
            free = bisect_left(lrpos, left)
        window.pop()
    insertion = list(reversed(assoc)) + [qq[s] for s in starts]
    rows: list[list[int]] = [[] for _ in range(k)]
    cycle = list(range(k - 1, -1, -1))
    cur = 0
    for item in reversed(insertion):
        if not cycle:
            raise AssertionError("insertion list outlived the open rows")
        if item is None:
            cycle.pop(cur)
            if cycle:
                cur %= len(cycle)
        else:
            rows[cycle[cur]].append(item)
            cur = (cur + 1) % len(cycle)
    if cycle:
        raise AssertionError("some rows were never closed")
    if any(not row for row in rows):
        raise AssertionError("an output row received no pane")
    spans = tuple(sorted(all_spans))
    if [a for a, _ in spans] != sorted({a for a, _ in spans}) or spans[0][0] != 0:
        raise AssertionError("pane spans do not tile the permutation")
    return WindowPlan(
        pane_spans=spans,
        initial_starts=tuple(starts),
        associations=tuple(assoc),
        insertion=tuple(insertion),
        rows=tuple(tuple(sorted(row)) for row in rows),
    )


def _assemble(plan: WindowPlan, q: Perm, source: Perm) -> tuple[Perm, ...]:
    span_by_head = {q[a]: (a, b) for a, b in plan.pane_spans}
    items = []
    for row in plan.rows:
        word: list[int] = []
        for head in row:
            a, b = span_by_head[head]
            word.extend(source[a:b])
        items.append(reduce_word(word))
    return tuple(items)


def window_forward(marked: MarkedPermutation) -> tuple[Perm, ...]:
    """Rearrange a 321-avoiding marked permutation into a (marks+1)-list.

    Row r of the window plan names the panes whose concatenation, reduced,
    becomes item r.

    >>> window_forward(MarkedPermutation((1, 2, 3)))
    ((1, 2, 3),)
    """
    plan = window_plan(marked.perm, marked.marks)
    return _assemble(plan, marked.perm, marked.perm)


def marked_to_list(marked: MarkedPermutation) -> tuple[Perm, ...]:
    """Map a marked class member to a list of class members.

    Factor tails are sorted to reach the 321-avoiding case, the window
    plan is computed there, and the original tails are restored inside
    each pane before reducing (boundaries are unchanged by the sort).
    """
    p = marked.perm
    if not fast_35241ok(p):
        raise InvalidInputError(f"a 3(5)241-OK permutation is required, got {p!r}")
    sorted_marked, _ = sort_factor_tails(p, marked.marks)
    plan = window_plan(sorted_marked.perm, marked.marks)
    return _assemble(plan, sorted_marked.perm, p)


def _inverse_core(
    items: Sequence[Perm],
) -> tuple[list[list[int]], list[list[tuple[int, int]]], frozenset[int]]:
    # items: nonempty standard permutations.  Assigns a global value to
    # every position, grows panes per item, and reads off the marks.
    k = len(items)
    n = sum(len(it) for it in items)
    values: list[list[int]] = [[0] * len(it) for it in items]
    lit_pos: list[list[int]] = []
    masks: list[list[bool]] = []
    covered: list[int] = []
    panes: list[list[tuple[int, int]]] = []
    blanks: list[list[int]] = []
    for it in items:
        lits = set(lit_entries(it))
        pos_of = {v: i for i, v in enumerate(it)}
        lp = [pos_of[v] for v in sorted(lits)]
        lit_pos.append(lp)
        masks.append(_lrmax_mask(it))
        covered.append(lp[0])
        panes.append([(lp[0], len(it))])
        blanks.append([pos_of[v] for v in sorted(set(it) - lits, reverse=True)])
    val = n
    for i in range(k - 1, -1, -1):
        for pos in reversed(lit_pos[i]):
            values[i][pos] = val
            val -= 1
    remaining = val
    ptr = [0] * k
    cur = k - 1
    b = val
    stalled = 0
    while remaining:
        i = cur
        newly: list[int] = []
        while ptr[i] < len(blanks[i]):
            pos = blanks[i][ptr[i]]
            if pos >= covered[i] or masks[i][pos]:
                values[i][pos] = b
                b -= 1
                remaining -= 1
                newly.append(pos)
                ptr[i] += 1
            else:
                break
        if newly:
            stalled = 0
            first = min(newly)
            if first < covered[i]:
                panes[i].insert(0, (first, covered[i]))
                covered[i] = first
        else:
            stalled += 1
            if stalled > k:
                raise InvalidInputError("the inverse window pass stalled; invalid item list")
        cur = (cur - 1) % k
    marks = frozenset(
        max(values[i][x] for x in range(*panes[i][-1])) for i in range(k - 1)
    )
    return values, panes, marks


def _checked_items(items: Iterable[Iterable[int]], avoiding: bool) -> tuple[Perm, ...]:
    its = tuple(as_perm(it) for it in items)
    if not its:
        raise InvalidInputError("the item list must be nonempty")
    for it in its:
        if not it:
            raise InvalidInputError("every item must be nonempty")
        if not is_standard(it):
            raise InvalidInputError(f"every item must be standard, got {it!r}")
        if avoiding:
            if not is_avoider(it, (3, 2, 1)):
                raise InvalidInputError(f"every item must be 321-avoiding, got {it!r}")
        elif not fast_35241ok(it):
            raise InvalidInputError(f"every item must be 3(5)241-OK, got {it!r}")
    return its


def window_inverse(items: Iterable[Iterable[int]]) -> MarkedPermutation:
    """Inverse of :func:`window_forward` on lists of 321-avoiding items.

    LIT entries take the top global values (last item first, right to
    left); the rest are dealt out in descending order by visiting the
    items cyclically leftwards, each visit filling the largest blank entry
    while it is empaned or a left-to-right maximum, then adding a pane.
    One pane boundary per item (except the last visited structure) yields
    the marks.
    """
    its = _checked_items(items, avoiding=True)
    values, panes, marks = _inverse_core(its)
    return _collect(its, values, panes, marks, identity_tails=True)


def list_to_marked(items: Iterable[Iterable[int]]) -> MarkedPermutation:
    """Inverse of :func:`marked_to_list` on lists of class members.

    Runs the inverse window pass on the tail-sorted items, then lets each
    item's monotone local-to-global value map carry its original tails
    into the assembled permutation.
    """
    its = _checked_items(items, avoiding=False)
    sorted_items = tuple(sort_factor_tails(it)[0].perm for it in its)
    values, panes, marks = _inverse_core(sorted_items)
    return _collect(its, values, panes, marks, identity_tails=False)


def _collect(
    items: tuple[Perm, ...],
    values: list[list[int]],
    panes: list[list[tuple[int, int]]],
    marks: frozenset[int],
    identity_tails: bool,
) -> MarkedPermutation:
    chunks: list[tuple[int, ...]] = []
    for i, it in enumerate(items):
        if identity_tails:
            content = values[i]
        else:
            ascending = sorted(values[i])
            content = [ascending[v - 1] for v in it]
        for a, b in panes[i]:
            chunks.append(tuple(content[a:b]))
    chunks.sort(key=lambda c: c[0])
    perm = tuple(itertools.chain.from_iterable(chunks))
    return MarkedPermutation(perm, marks)


def eigen_decompose(p: Iterable[int]) -> tuple[Perm, tuple[Perm, ...]]:
    """Map a class member of length n to (rho, v) of total size n-1.

    rho is the reduction of the part after the maximum; v is a list with
    one slot per star-plus-one, empty slots placed where the collapsed
    bit sequence has 0s and the window items placed at its 1s.  When the
    maximum comes first the list is all-empty and rho is the rest.

    >>> eigen_decompose((1,))
    ((), ((),))
    """
    q = _checked_member(p)
    if not q:
        raise InvalidInputError("the empty permutation does not decompose")
    n = len(q)
    pos = q.index(n)
    sigma, tau = q[:pos], q[pos + 1:]
    if not sigma:
        return tau, ((),) * (n - pos)
    rho, starred = star_encode(q)
    marked, bits = collapse_stars(starred)
    items = iter(marked_to_list(marked))
    v = tuple(next(items) if b else () for b in bits)
    return rho, v


def eigen_compose(rho: Iterable[int], items: Iterable[Iterable[int]]) -> Perm:
    """Inverse of :func:`eigen_decompose`.

    >>> eigen_compose((1, 2), ((), (), (1,)))
    (3, 4, 1, 2)
    """
    r = as_perm(rho)
    its = tuple(as_perm(it) for it in items)
    k = len(its)
    if k == 0:
        raise InvalidInputError("the item list must contain at least one slot")
    if len(r) != k - 1:
        raise InvalidInputError(f"rho must have length {k - 1}, got {len(r)}")
    if r and not is_standard(r):
        raise InvalidInputError(f"rho must be standard, got {r!r}")
    if not fast_35241ok(r):
        raise InvalidInputError("rho must be in the class")
    nonempty = tuple(it for it in its if it)
    if not nonempty:
        return (k,) + r
    bits = tuple(1 if it else 0 for it in its)
    marked = list_to_marked(nonempty)
    starred = expand_stars(marked, bits)
    return star_decode(r, starred)


def _checked_member(p: Iterable[int]) -> Perm:
    q = as_perm(p)
    if q and not is_standard(q):
        raise InvalidInputError(f"a standard permutation is required, got {q!r}")
    if not fast_35241ok(q):
        raise InvalidInputError(f"a 3(5)241-OK permutation is required, got {q!r}")
    return q
