"""
Exhaustive statistics over all n! permutations, in exact rational arithmetic.

``enumerate_stats`` walks the whole symmetric group accumulating integer sums
(total alternating length, total zigzag length, per-value peak counts, and
the count of words whose zigzag length exceeds their alternating length by
one); averages and probabilities are exact ``fractions.Fraction`` values, so
every identity below is checked with zero tolerance.  No floating point
enters this module.

``verify_identities`` checks, for every (n, k) in scope:

- average alternating length == (4(n - k) + 5) / 6
- average zigzag length == (2(n - k) + 4) / 3, exceeding the former by 1/2
- exactly half of all words have zigzag length = alternating length + 1
- the fraction of words in which the value j is a k-peak equals
  (j - k)(j - k + 1) / ((n - k)(n - k + 1)) for j > k and 0 otherwise
- twice the summed peak probabilities reproduces the zigzag average

Enumeration partitions cleanly by first entry, so the work can be spread
over worker processes; the accumulators are plain integer sums, making the
merged result identical for every worker count.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .perm import Permutation, _chain_extrema

MAX_ENUM_N = 13  # 13! is the practical ceiling for exhaustive runs
DEFAULT_VERIFY_MAX_N = 9

PeakFormula = Callable[[int, int, int], Fraction]


def _check_scope(n: int, k: int) -> None:
    if k < 1 or n < k + 1:
        raise ValueError(f"requires 1 <= k <= n - 1, got n={n}, k={k}")


def _check_enum_size(n: int) -> None:
    if n > MAX_ENUM_N:
        raise ValueError(f"exhaustive enumeration limited to n <= {MAX_ENUM_N}, got n={n}")


def _value_tuples(n: int, firsts: Sequence[int] | None) -> Iterator[tuple[int, ...]]:
    """All words of S_n as raw tuples, optionally restricted by first entry.

    Lexicographic within each first-entry class; the full stream (firsts
    None) is lexicographic overall.
    """
    universe = range(1, n + 1)
    if firsts is None:
        yield from itertools.permutations(universe)
        return
    for f in firsts:
        rest = tuple(v for v in universe if v != f)
        for tail in itertools.permutations(rest):
            yield (f,) + tail


def iterate_permutations(n: int, first_entry: int | None = None) -> Iterator[Permutation]:
    """Yield each element of S_n exactly once, in lexicographic order.

    ``first_entry`` restricts to the words starting with that value, giving
    n disjoint sub-streams whose union is the whole group; that is the unit
    of parallel partitioning.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check_enum_size(n)
    if first_entry is not None and not 1 <= first_entry <= n:
        raise ValueError(f"first_entry {first_entry} is outside 1..{n}")
    firsts = None if first_entry is None else (first_entry,)
    for vals in _value_tuples(n, firsts):
        yield Permutation(vals)


@dataclass(frozen=True)
class EnumReport:
    """Exact aggregate statistics of one exhaustive pass over S_n.

    ``peak_counts`` is indexed by entry value (index 0 unused): entry j is
    the number of words in which j is a k-peak.  ``half_split_count`` is the
    number of words whose zigzag length is one more than their alternating
    length.
    """

    n: int
    k: int
    perm_count: int
    sum_as: int
    sum_zs: int
    average_as: Fraction
    average_zs: Fraction
    peak_counts: tuple[int, ...]
    half_split_count: int


def _count_chunk(args: tuple[int, int, tuple[int, ...] | None]) -> tuple[int, int, int, list[int]]:
    """Accumulate one first-entry chunk; top level so process pools can pickle it."""
    n, k, firsts = args
    sum_as = sum_zs = half = 0
    peak_counts = [0] * (n + 1)
    for vals in _value_tuples(n, firsts):
        ext, valley_first = _chain_extrema(vals, k)
        m = len(ext)
        if m:
            sum_zs += m
            if valley_first:
                sum_as += m - 1
                half += 1
                peaks = ext[1::2]
            else:
                sum_as += m
                peaks = ext[0::2]
            for p in peaks:
                peak_counts[vals[p]] += 1
        else:
            sum_as += 1
            sum_zs += 1
    return sum_as, sum_zs, half, peak_counts


def enumerate_stats(n: int, k: int, workers: int = 1) -> EnumReport:
    """Exact sums and averages of the statistics over all of S_n.

    ``workers`` > 1 splits the first-entry classes over that many processes;
    the integer accumulators merge associatively, so the report is identical
    for every worker count and scheduling.
    """
    _check_scope(n, k)
    _check_enum_size(n)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers == 1:
        parts = [_count_chunk((n, k, None))]
    else:
        chunks = [tuple(range(1 + i, n + 1, workers)) for i in range(workers)]
        chunks = [c for c in chunks if c]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(_count_chunk, [(n, k, c) for c in chunks]))
    sum_as = sum(p[0] for p in parts)
    sum_zs = sum(p[1] for p in parts)
    half = sum(p[2] for p in parts)
    peak_counts = [0] * (n + 1)
    for part in parts:
        for j, c in enumerate(part[3]):
            peak_counts[j] += c
    fact = math.factorial(n)
    return EnumReport(
        n=n,
        k=k,
        perm_count=fact,
        sum_as=sum_as,
        sum_zs=sum_zs,
        average_as=Fraction(sum_as, fact),
        average_zs=Fraction(sum_zs, fact),
        peak_counts=tuple(peak_counts),
        half_split_count=half,
    )


def peak_value_probability(n: int, k: int, j: int) -> Fraction:
    """Probability that the value j is a k-peak of a uniform word in S_n.

    Zero for j <= k; (j - k)(j - k + 1) / ((n - k)(n - k + 1)) above that.
    At j = n this is 1 (the top value is always a peak), and summing over j
    and doubling reproduces the zigzag average; both would break if the
    denominator ended in (n - k - 1), which the regression tests pin down.
    """
    _check_scope(n, k)
    if not 1 <= j <= n:
        raise ValueError(f"value j={j} is outside 1..{n}")
    if j <= k:
        return Fraction(0)
    return Fraction((j - k) * (j - k + 1), (n - k) * (n - k + 1))


def expected_alternating_length(n: int, k: int) -> Fraction:
    """Exact average alternating length over S_n: (4(n - k) + 5) / 6."""
    _check_scope(n, k)
    return Fraction(4 * (n - k) + 5, 6)


def expected_zigzag_length(n: int, k: int) -> Fraction:
    """Exact average zigzag length over S_n: (2(n - k) + 4) / 3."""
    _check_scope(n, k)
    return Fraction(2 * (n - k) + 4, 3)


@dataclass(frozen=True)
class IdentityFailure:
    """One failed identity: which check, where, and both exact values."""

    identity: str
    n: int
    k: int
    j: int | None
    expected: str
    actual: str


@dataclass(frozen=True)
class VerificationReport:
    n_max: int
    pairs_checked: int
    identities_checked: int
    failures: tuple[IdentityFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_identities(
    report: EnumReport, peak_formula: PeakFormula | None = None
) -> tuple[IdentityFailure, ...]:
    """Check every closed-form identity against one exact EnumReport.

    ``peak_formula`` replaces the peak-probability formula under test;
    regression tests inject a deliberately wrong one and expect failures.
    A formula that divides by zero is recorded as a failure, not raised.
    """
    n, k = report.n, report.k
    fact = report.perm_count
    formula = peak_formula if peak_formula is not None else peak_value_probability
    failures: list[IdentityFailure] = []

    def check(identity: str, expected: Fraction, actual: Fraction, j: int | None = None) -> None:
        if expected != actual:
            failures.append(IdentityFailure(identity, n, k, j, str(expected), str(actual)))

    check("average-alternating", expected_alternating_length(n, k), report.average_as)
    check("average-zigzag", expected_zigzag_length(n, k), report.average_zs)
    check("zigzag-minus-alternating", Fraction(1, 2), report.average_zs - report.average_as)
    check("half-split", Fraction(fact, 2), Fraction(report.half_split_count))
    total_probability = Fraction(0)
    undefined = False
    for j in range(1, n + 1):
        try:
            p = formula(n, k, j)
        except ZeroDivisionError:
            failures.append(
                IdentityFailure(
                    "peak-probability", n, k, j, "defined probability", "division by zero"
                )
            )
            undefined = True
            continue
        total_probability += p
        check("peak-probability", p, Fraction(report.peak_counts[j], fact), j=j)
    if undefined:
        failures.append(
            IdentityFailure(
                "doubled-peak-sum", n, k, None, str(expected_zigzag_length(n, k)), "undefined"
            )
        )
    else:
        check("doubled-peak-sum", expected_zigzag_length(n, k), 2 * total_probability)
    return tuple(failures)


def verify_identities(
    n_max: int = DEFAULT_VERIFY_MAX_N,
    workers: int = 1,
    peak_formula: PeakFormula | None = None,
) -> VerificationReport:
    """Enumerate every (n, k) with 2 <= n <= n_max, 1 <= k <= n - 1 and
    check all identities with exact rational equality.

    Each (n, k) pair contributes n + 5 identity checks (three averages, the
    half split, one per value j, and the doubled peak sum).
    """
    if not 2 <= n_max <= MAX_ENUM_N:
        raise ValueError(f"n_max must be in 2..{MAX_ENUM_N}, got {n_max}")
    failures: list[IdentityFailure] = []
    pairs = 0
    identities = 0
    for n in range(2, n_max + 1):
        for k in range(1, n):
            report = enumerate_stats(n, k, workers=workers)
            failures.extend(check_identities(report, peak_formula))
            pairs += 1
            identities += n + 5
    return VerificationReport(
        n_max=n_max,
        pairs_checked=pairs,
        identities_checked=identities,
        failures=tuple(failures),
    )
