"""Acceptance gate: one test per numbered criterion.

Each test prints a single "PASS criterion NN" line on success (visible
with -s) or a "FAIL criterion NN" line before the assertion report; the
per-test verdicts under ``pytest -v`` give the same one-line-per-criterion
summary.  All comparisons are exact integer equality.
"""

from __future__ import annotations

import itertools
import math
import time
from contextlib import contextmanager

from eigenperm import (
    MarkedPermutation,
    bell_numbers,
    catalan_via_compositions,
    census,
    classify,
    count_1342ok_by_position,
    eigen_compose,
    eigen_decompose,
    eigensequence,
    fast_35241ok,
    format_starred,
    is_avoider,
    lit_entries,
    list_to_marked,
    marked_to_list,
    parse_pattern,
    patience_ok,
    recurrence_tables,
    satisfies,
    star_encode,
    wilf_map,
    window_forward,
    window_inverse,
)
from eigenperm.four_patterns import (
    from_partition_decreasing,
    from_partition_increasing,
    to_partition_decreasing,
    to_partition_increasing,
)

from test_bijection import P15, P15_RHO, P30, P30_LIST, P30_MARKS, all_marked


@contextmanager
def criterion(num, text):
    try:
        yield
    except BaseException:
        print(f"FAIL criterion {num:02d}: {text}")
        raise
    print(f"PASS criterion {num:02d}: {text}")


def perms_of(n):
    return itertools.permutations(range(1, n + 1))


def avoiders_321(n):
    return [p for p in perms_of(n) if is_avoider(p, (3, 2, 1))]


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def test_criterion_01_eigensequence_prefix():
    with criterion(1, "eigensequence terms 1..7, under 0.1 s"):
        start = time.perf_counter()
        terms = eigensequence(7)
        elapsed = time.perf_counter() - start
        assert terms == [1, 1, 2, 6, 23, 104, 531]
        assert elapsed < 0.1


def test_criterion_02_census_matches_eigensequence():
    with criterion(2, "census of 3(5)241 equals the shifted eigensequence, n <= 9"):
        up = parse_pattern("3(5)241")
        b = eigensequence(10)
        for n in range(9):
            assert census(up, n) == b[n]
        start = time.perf_counter()
        top = census(up, 9)
        elapsed = time.perf_counter() - start
        assert top == b[9] == 117545
        assert elapsed < 60


def test_criterion_03_recurrence_routes_agree():
    with criterion(3, "both recurrence routes match the eigensequence, n <= 25"):
        start = time.perf_counter()
        tables = recurrence_tables(25)
        row_sums = [1] + [sum(row) for row in tables.by_first]
        for n in range(15):
            assert tables.a[n] == row_sums[n]
        b = eigensequence(26)
        for n in range(26):
            assert tables.a[n] == b[n]
            assert row_sums[n] == b[n]
        elapsed = time.perf_counter() - start
        assert elapsed < 5


def test_criterion_04_catalan_via_compositions():
    with criterion(4, "composition sum gives Catalan numbers, n <= 9"):
        got = catalan_via_compositions(9)
        assert got[:9] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]
        for n in range(10):
            assert got[n] == len(avoiders_321(n))
            assert got[n] == catalan(n)


def test_criterion_05_window_bijectivity():
    with criterion(5, "moving window is bijective with the exact image, n <= 8"):
        for n in range(1, 9):
            by_k = {}
            for p in avoiders_321(n):
                for marked in all_marked(p):
                    items = window_forward(marked)
                    k = len(marked.marks) + 1
                    assert len(items) == k
                    assert all(it and is_avoider(it, (3, 2, 1)) for it in items)
                    assert sum(map(len, items)) == n
                    assert window_inverse(items) == marked
                    bucket = by_k.setdefault(k, set())
                    assert items not in bucket
                    bucket.add(items)
            pools = {
                s: [tuple(q) for q in avoiders_321(s)] for s in range(1, n + 1)
            }
            for k, got in by_k.items():
                expected = set()
                for cuts in itertools.combinations(range(1, n), k - 1):
                    sizes = [
                        b - a for a, b in itertools.pairwise((0, *cuts, n))
                    ]
                    expected.update(
                        itertools.product(*(pools[s] for s in sizes))
                    )
                assert got == expected
        # independent counts out to n = 9
        cat = [catalan(m) for m in range(10)]
        for n in range(1, 10):
            x_counts = {}
            for p in avoiders_321(n):
                free = len(lit_entries(p)) - 1
                for k in range(1, n + 1):
                    x_counts[k] = x_counts.get(k, 0) + math.comb(free, k - 1)
            for k in range(1, n + 1):
                y = 0
                for sizes in itertools.combinations(range(1, n), k - 1):
                    parts = [
                        b - a for a, b in itertools.pairwise((0, *sizes, n))
                    ]
                    prod = 1
                    for s in parts:
                        prod *= cat[s]
                    y += prod
                assert x_counts[k] == y


def test_criterion_06_general_window_round_trips(ok_perms):
    with criterion(6, "factor-tail sorting round trips on the whole class, n <= 7"):
        for n in range(1, 8):
            for p in ok_perms[n]:
                for marked in all_marked(p):
                    items = marked_to_list(marked)
                    assert all(it and fast_35241ok(it) for it in items)
                    assert list_to_marked(items) == marked


def test_criterion_07_eigen_round_trips_with_example():
    with criterion(7, "one-letter-removal bijection round trips on A_n, n <= 9"):
        rho, starred = star_encode(P15)
        assert rho == P15_RHO
        assert format_starred(starred) == "2 8 3 1 * * 9 4 6 5 * 10 * 7"
        assert len(eigen_decompose(P15)[1]) == 5
        sizes = []
        for n in range(1, 10):
            members = 0
            for p in perms_of(n):
                if not fast_35241ok(p):
                    continue
                members += 1
                rho, v = eigen_decompose(p)
                assert eigen_compose(rho, v) == p
            sizes.append(members)
        assert sizes == [1, 2, 6, 23, 104, 531, 2982, 18109, 117545]


def test_criterion_08_length_30_worked_example():
    with criterion(8, "length-30 window example and its inverse"):
        marked = MarkedPermutation(P30, P30_MARKS)
        assert window_forward(marked) == P30_LIST
        assert marked_to_list(marked) == P30_LIST
        assert window_inverse(P30_LIST) == marked
        assert list_to_marked(P30_LIST) == marked


def test_criterion_09_classification():
    with criterion(9, "96 patterns classify into the expected orbits, n <= 7"):
        start = time.perf_counter()
        classes = classify(max_n=7)
        elapsed = time.perf_counter() - start
        trivial = [c for c in classes if c.trivial]
        assert sum(len(c.members) for c in trivial) == 64
        assert sorted(len(c.members) for c in trivial) == [4] * 6 + [8] * 5
        nontrivial = sorted(
            (c.label, len(c.members)) for c in classes if not c.trivial
        )
        assert nontrivial == [
            ("a051295", 4), ("a051295", 8),
            ("bell", 8), ("bell", 8), ("new4", 4),
        ]
        prefixes = {
            "catalan": (1, 1, 2, 5, 14, 42, 132, 429),
            "bell": (1, 1, 2, 5, 15, 52, 203, 877),
            "a051295": (1, 1, 2, 5, 15, 54, 235, 1237),
            "new4": (1, 1, 2, 5, 15, 55, 248, 1357),
        }
        for c in classes:
            assert c.counts == prefixes[c.label]
        assert elapsed < 600


def test_criterion_10_reference_sequences():
    with criterion(10, "reference sequences match censuses and coefficients"):
        a051295 = parse_pattern("(1)324")
        new4 = parse_pattern("321(4)")
        from eigenperm import a051295_terms, new4_terms

        a_terms = a051295_terms(8)
        n_terms = new4_terms(8)
        for n in range(9):
            assert census(a051295, n) == a_terms[n]
            assert census(new4, n) == n_terms[n]
        # u_{n,k} against the coefficient of x^(n-k) in (sum m! x^m)^k
        order = 10
        facts = [math.factorial(m) for m in range(order + 1)]
        for n in range(1, 11):
            power = [1] + [0] * order  # (gf)^0
            for k in range(1, n + 1):
                nxt = [0] * (order + 1)
                for i, ai in enumerate(power):
                    if ai:
                        for j in range(order + 1 - i):
                            nxt[i + j] += ai * facts[j]
                power = nxt
                assert count_1342ok_by_position(n, k) == power[n - k]


def test_criterion_11_partition_maps_wilf_and_patience():
    with criterion(11, "partition bijections, the Wilf map, and patience checks, n <= 8"):
        inc = parse_pattern("32(4)1")
        dec = parse_pattern("31(4)2")
        src = parse_pattern("(1)324")
        dst = parse_pattern("(1)342")
        adj = parse_pattern("3(1)42")
        bell = bell_numbers(8)
        for n in range(1, 9):
            inc_members = set()
            dec_members = set()
            src_members = set()
            dst_members = set()
            for p in perms_of(n):
                if satisfies(p, inc):
                    inc_members.add(p)
                if satisfies(p, dec):
                    dec_members.add(p)
                if satisfies(p, src):
                    src_members.add(p)
                if satisfies(p, dst):
                    dst_members.add(p)
                assert patience_ok(p) == satisfies(p, adj)
            assert len(inc_members) == len(dec_members) == bell[n]
            for p in inc_members:
                assert from_partition_increasing(to_partition_increasing(p)) == p
            for p in dec_members:
                assert from_partition_decreasing(to_partition_decreasing(p)) == p
            images = {wilf_map(p) for p in src_members}
            assert len(images) == len(src_members)
            assert images == dst_members
