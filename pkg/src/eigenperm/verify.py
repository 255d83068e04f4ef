"""Re-runnable consistency suites behind the ``verify`` CLI command.

Each check cross-validates two independent routes to the same quantity at
a configurable size, returning one result per check rather than raising.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import bijection, four_patterns, perms, recurrences, series

__all__ = ["CheckResult", "SUITES", "run_suite"]

SUITES = ("recurrences", "bijection", "fourpatterns", "all")


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _ok_perms(n: int) -> list[perms.Perm]:
    return [
        p
        for p in itertools.permutations(range(1, n + 1))
        if perms.fast_35241ok(p)
    ]


def verify_recurrences(max_n: int) -> list[CheckResult]:
    out = []
    b = series.eigensequence(max_n + 2)
    tables = recurrences.recurrence_tables(max_n + 1)
    ok = all(tables.a[n] == b[n] for n in range(max_n + 1))
    out.append(CheckResult("a_n equals shifted eigensequence", ok, f"n <= {max_n}"))
    dom_n = min(max_n, 12)
    dom = recurrences.counts_via_dominance(dom_n)
    ok = all(dom[n] == tables.a[n] for n in range(dom_n + 1))
    out.append(CheckResult("dominance sum equals recurrence tables", ok, f"n <= {dom_n}"))
    ok = all(sum(row) == tables.a[n] for n, row in enumerate(tables.by_first, start=1))
    out.append(CheckResult("first-entry rows sum to a_n", ok, f"n <= {max_n + 1}"))
    census_n = min(max_n, 7)
    up = perms.parse_pattern("3(5)241")
    ok = all(perms.census(up, n) == b[n] for n in range(census_n + 1))
    out.append(CheckResult("census equals eigensequence", ok, f"n <= {census_n}"))
    ok = series.verify_shift(series.eigensequence(max_n + 2), max_n + 2)
    out.append(CheckResult("self-composition shifts left", ok, f"order {max_n + 2}"))
    return out


def verify_bijection(max_n: int) -> list[CheckResult]:
    out = []
    bound = min(max_n, 8)
    ok = True
    detail = f"n <= {bound}"
    for n in range(1, bound + 1):
        for p in _ok_perms(n):
            rho, v = bijection.eigen_decompose(p)
            if bijection.eigen_compose(rho, v) != p:
                ok = False
                detail = f"failed at {p}"
                break
        if not ok:
            break
    out.append(CheckResult("eigen decompose/compose round trip", ok, detail))
    bound = min(max_n, 7)
    ok = True
    detail = f"n <= {bound}"
    for n in range(1, bound + 1):
        for p in _ok_perms(n):
            lit = sorted(set(perms.lit_entries(p)) - {n})
            for r in range(len(lit) + 1):
                for marks in itertools.combinations(lit, r):
                    mp = bijection.MarkedPermutation(p, frozenset(marks))
                    if bijection.list_to_marked(bijection.marked_to_list(mp)) != mp:
                        ok = False
                        detail = f"failed at {p} marks {marks}"
                        break
    out.append(CheckResult("marked list round trip", ok, detail))
    return out


def verify_fourpatterns(max_n: int) -> list[CheckResult]:
    out = []
    bound = min(max_n, 7)
    try:
        classes = four_patterns.classify(max_n=bound)
    except four_patterns.ClassificationError as exc:
        return [CheckResult("classification", False, str(exc))]
    sizes = sorted(len(c.members) for c in classes if not c.trivial)
    ok = sizes == [4, 4, 8, 8, 8] and sum(
        len(c.members) for c in classes if c.trivial
    ) == 64
    out.append(CheckResult("orbit structure 64 + (8,8,8,4,4)", ok, f"n <= {bound}"))
    labels = sorted(c.label for c in classes if not c.trivial)
    ok = labels == ["a051295", "a051295", "bell", "bell", "new4"]
    out.append(CheckResult("nontrivial labels", ok, ", ".join(labels)))
    bell = recurrences.bell_numbers(bound)
    ok = True
    for n in range(1, bound + 1):
        members = [
            p
            for p in itertools.permutations(range(1, n + 1))
            if perms.satisfies(p, perms.parse_pattern("32(4)1"))
        ]
        if len(members) != bell[n]:
            ok = False
            break
        for p in members:
            sp = four_patterns.to_partition_increasing(p)
            if four_patterns.from_partition_increasing(sp) != p:
                ok = False
                break
    out.append(CheckResult("partition bijection round trip", ok, f"n <= {bound}"))
    return out


def run_suite(name: str, max_n: int) -> list[CheckResult]:
    if name == "recurrences":
        return verify_recurrences(max_n)
    if name == "bijection":
        return verify_bijection(max_n)
    if name == "fourpatterns":
        return verify_fourpatterns(max_n)
    if name == "all":
        return (
            verify_recurrences(max_n)
            + verify_bijection(max_n)
            + verify_fourpatterns(max_n)
        )
    raise perms.InvalidInputError(f"unknown suite {name!r}; choose from {SUITES}")
