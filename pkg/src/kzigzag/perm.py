"""
Permutations of {1, ..., n} in one-line notation and their structure under a
gap parameter k: k-up / k-down pairs, maximal k-ascending and k-descending
sections, the alternating section chain, and k-peaks / k-valleys.

Positions are 1-based throughout the public API: a permutation w has entries
w_1 ... w_n and ``w.values[i - 1]`` is the entry at position i.

The central structure is the section chain.  A k-ascending section is a
contiguous block whose first entry is its minimum, whose last entry is its
maximum, whose total rise is at least k, and which contains no pair dropping
by k or more; k-descending is the mirror image.  The maximal such sections of
a permutation form an alternating chain (ascending, descending, ascending,
...), consecutive sections sharing exactly one position, with at most an
uncovered stretch before the first section and after the last.  The shared
link points are the k-peaks and k-valleys.

Two independent constructions are provided and tested against each other:

- ``decompose`` builds the chain in one left-to-right sweep (O(n)).
- ``decompose_reference`` scans every interval against the literal section
  conditions and keeps the maximal ones (slow, obviously correct).

A third, ``is_k_peak_at``, decides peak-hood of a single position directly
from the word without building the chain at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

ASCENDING = "ascending"
DESCENDING = "descending"


class InvalidPermutationError(ValueError):
    """Input is not a permutation of {1, ..., n}.

    ``reason`` distinguishes the failure mode: one of ``"empty"``,
    ``"non-integer"``, ``"out-of-range"``, ``"duplicate"``.
    """

    def __init__(self, reason: str, message: str) -> None:
        super().__init__(message)
        self.reason = reason


def _validate(values: tuple[int, ...]) -> None:
    if not values:
        raise InvalidPermutationError("empty", "a permutation needs at least one entry")
    n = len(values)
    seen = [False] * (n + 1)
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidPermutationError("non-integer", f"entry {v!r} is not an integer")
        if not 1 <= v <= n:
            raise InvalidPermutationError("out-of-range", f"entry {v} is outside 1..{n}")
        if seen[v]:
            raise InvalidPermutationError("duplicate", f"duplicate entry {v}")
        seen[v] = True


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    Construction validates the word, so every instance is a genuine
    permutation.

    >>> Permutation((2, 1, 3)).n
    3
    >>> Permutation((1, 1))
    Traceback (most recent call last):
        ...
    kzigzag.perm.InvalidPermutationError: duplicate entry 1
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        _validate(self.values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)


def make_permutation(values: Iterable[int]) -> Permutation:
    """Validate a sequence of integers as a permutation of {1, ..., n}.

    Rejects empty input, duplicates, and entries outside 1..n with an
    :class:`InvalidPermutationError` carrying a distinct ``reason``.

    >>> make_permutation([2, 1, 4, 3, 8, 6, 7, 5, 9]).n
    9
    """
    return Permutation(tuple(values))


def complement(w: Permutation) -> Permutation:
    """The entrywise complement: position i maps to n + 1 - w_i.

    Applying it twice returns the original word.  It swaps rises with falls
    of the same size, hence exchanges k-peaks with k-valleys and ascending
    sections with descending ones.

    >>> complement(Permutation((1, 2, 3))).values
    (3, 2, 1)
    """
    n = w.n
    return Permutation(tuple(n + 1 - v for v in w.values))


def _check_gap(k: int) -> None:
    if k < 1:
        raise ValueError(f"gap parameter k must be a positive integer, got {k}")


def _check_position(w: Permutation, i: int, name: str) -> None:
    if not 1 <= i <= w.n:
        raise ValueError(f"position {name}={i} is outside 1..{w.n}")


def is_k_up(w: Permutation, s: int, t: int, k: int) -> bool:
    """True iff s < t and the entry at t exceeds the entry at s by >= k."""
    _check_gap(k)
    _check_position(w, s, "s")
    _check_position(w, t, "t")
    return s < t and w.values[t - 1] - w.values[s - 1] >= k


def is_k_down(w: Permutation, s: int, t: int, k: int) -> bool:
    """True iff s < t and the entry at s exceeds the entry at t by >= k."""
    _check_gap(k)
    _check_position(w, s, "s")
    _check_position(w, t, "t")
    return s < t and w.values[s - 1] - w.values[t - 1] >= k


@dataclass(frozen=True)
class Section:
    """A maximal k-ascending or k-descending run, positions inclusive."""

    start: int
    end: int
    direction: str  # ASCENDING or DESCENDING


@dataclass(frozen=True)
class SectionChain:
    """The alternating chain of maximal sections covering a permutation.

    ``uncovered_prefix`` / ``uncovered_suffix`` are inclusive 1-based
    position ranges ``(lo, hi)`` strictly before the first section and
    strictly after the last one, or None when empty.  Interior gaps between
    sections cannot occur: consecutive sections always share exactly one
    position, their link point.
    """

    sections: tuple[Section, ...]
    uncovered_prefix: tuple[int, int] | None
    uncovered_suffix: tuple[int, int] | None


@dataclass(frozen=True)
class PeakValleySet:
    """Positions of the k-peaks and k-valleys, each in increasing order.

    Merged by position, peaks and valleys strictly alternate.  The induced
    subsequence is a longest k-zigzagging subsequence of the word.
    """

    peak_positions: tuple[int, ...]
    valley_positions: tuple[int, ...]


def values_at(w: Permutation, positions: Iterable[int]) -> tuple[int, ...]:
    """The entries of w at the given 1-based positions, in the given order."""
    positions = tuple(positions)
    for p in positions:
        _check_position(w, p, "position")
    return tuple(w.values[p - 1] for p in positions)


def _chain_extrema(values: Sequence[int], k: int) -> tuple[list[int], bool | None]:
    """One-pass sweep for the section-chain link points.

    Returns ``(extrema, first_is_valley)`` where ``extrema`` are 0-based
    positions of the k-valleys and k-peaks in increasing order (consecutive
    pairs bound the maximal sections) and ``first_is_valley`` tells whether
    the chain opens with an ascending section.  ``([], None)`` when no pair
    of entries is k or more apart, i.e. no section exists.

    The sweep watches the running extremum of the open section and closes
    the section the first time the word moves k or more against it; at that
    moment the running extremum is the committed link point and the current
    position seeds the next section.  Before the first section is seen, both
    the running minimum and maximum of the prefix are tracked, and whichever
    direction first reaches a gap of k fixes the opening direction.
    """
    n = len(values)
    if n < 2:
        return [], None
    mi = ma = 0
    asc: bool | None = None
    t = 1
    while t < n:
        v = values[t]
        if v < values[mi]:
            mi = t
        elif v > values[ma]:
            ma = t
        if v - values[mi] >= k:
            asc = True
            anchor = mi
            break
        if values[ma] - v >= k:
            asc = False
            anchor = ma
            break
        t += 1
    else:
        return [], None
    extrema = [anchor]
    first_is_valley = asc
    e = t
    t += 1
    while t < n:
        v = values[t]
        if asc:
            if v > values[e]:
                e = t
            elif values[e] - v >= k:
                extrema.append(e)
                e = t
                asc = False
        else:
            if v < values[e]:
                e = t
            elif v - values[e] >= k:
                extrema.append(e)
                e = t
                asc = True
        t += 1
    extrema.append(e)
    return extrema, first_is_valley


def decompose(w: Permutation, k: int) -> SectionChain:
    """Decompose w into its chain of maximal k-ascending/k-descending sections.

    If no gap of k exists anywhere, the chain is empty and the whole word is
    the uncovered prefix.

    >>> chain = decompose(Permutation((2, 1, 4, 3, 8, 6, 7, 5, 9)), 3)
    >>> [(s.start, s.end, s.direction) for s in chain.sections]
    [(2, 5, 'ascending'), (5, 8, 'descending'), (8, 9, 'ascending')]
    >>> chain.uncovered_prefix
    (1, 1)
    """
    _check_gap(k)
    ext, first_is_valley = _chain_extrema(w.values, k)
    n = w.n
    if not ext:
        return SectionChain((), (1, n), None)
    sections = []
    for idx in range(len(ext) - 1):
        ascending = (idx % 2 == 0) == first_is_valley
        sections.append(
            Section(ext[idx] + 1, ext[idx + 1] + 1, ASCENDING if ascending else DESCENDING)
        )
    prefix = (1, ext[0]) if ext[0] > 0 else None
    suffix = (ext[-1] + 2, n) if ext[-1] < n - 1 else None
    return SectionChain(tuple(sections), prefix, suffix)


def _interval_is_section(values: Sequence[int], i: int, j: int, k: int, direction: str) -> bool:
    """Literal check of the three section conditions on values[i..j], 0-based."""
    seg = values[i : j + 1]
    lo, hi = (seg[0], seg[-1]) if direction == ASCENDING else (seg[-1], seg[0])
    if lo != min(seg) or hi != max(seg) or hi - lo < k:
        return False
    if direction == ASCENDING:
        drops = ((seg[s] - seg[t]) for s in range(len(seg)) for t in range(s + 1, len(seg)))
    else:
        drops = ((seg[t] - seg[s]) for s in range(len(seg)) for t in range(s + 1, len(seg)))
    return all(d < k for d in drops)


def decompose_reference(w: Permutation, k: int) -> SectionChain:
    """Slow reference decomposition by exhaustive interval scan.

    Every interval is tested against the literal section conditions; a
    section is maximal when no other section of the same direction properly
    contains it.  The survivors are assembled into a chain, and the chain
    invariants (alternating directions, consecutive sections sharing exactly
    one position) are asserted rather than assumed.  Quadratically many
    intervals with a quadratic check each; intended for tests and small n.
    """
    _check_gap(k)
    values, n = w.values, w.n
    found: list[Section] = []
    for direction in (ASCENDING, DESCENDING):
        spans = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if _interval_is_section(values, i, j, k, direction)
        ]
        for i, j in spans:
            contained = any((i2, j2) != (i, j) and i2 <= i and j <= j2 for i2, j2 in spans)
            if not contained:
                found.append(Section(i + 1, j + 1, direction))
    found.sort(key=lambda s: s.start)
    for a, b in zip(found, found[1:]):
        if b.start != a.end or b.direction == a.direction:
            raise RuntimeError(
                f"maximal sections of {values} at k={k} do not form an alternating chain"
            )
    if not found:
        return SectionChain((), (1, n), None)
    prefix = (1, found[0].start - 1) if found[0].start > 1 else None
    suffix = (found[-1].end + 1, n) if found[-1].end < n else None
    return SectionChain(tuple(found), prefix, suffix)


def find_peaks_valleys(w: Permutation, k: int) -> PeakValleySet:
    """Read the k-peaks and k-valleys off the section chain.

    A peak is the top endpoint of a maximal section (the end of an ascending
    one, the start of a descending one); a valley is the bottom endpoint.
    Link points shared by two sections are reported once.

    >>> pv = find_peaks_valleys(Permutation((2, 1, 4, 3, 8, 6, 7, 5, 9)), 3)
    >>> pv.peak_positions, pv.valley_positions
    ((5, 9), (2, 8))
    """
    _check_gap(k)
    ext, first_is_valley = _chain_extrema(w.values, k)
    if not ext:
        return PeakValleySet((), ())
    peak_parity = 1 if first_is_valley else 0
    peaks = tuple(p + 1 for i, p in enumerate(ext) if i % 2 == peak_parity)
    valleys = tuple(p + 1 for i, p in enumerate(ext) if i % 2 != peak_parity)
    return PeakValleySet(peaks, valleys)


def is_k_peak_at(w: Permutation, i: int, k: int) -> bool:
    """Decide directly whether position i holds a k-peak, without the chain.

    The entry x at position i is a k-peak exactly when

    - some other entry is at least k below x (so x tops a large enough rise
      or starts a large enough fall), and
    - scanning right from i, no entry above x appears before an entry at or
      below x - k, and
    - scanning left from i, the same holds.

    Independent of :func:`decompose`; agreement between the two peak finders
    is enforced by the test suite over every permutation of small n.
    """
    _check_gap(k)
    _check_position(w, i, "i")
    values = w.values
    x = values[i - 1]
    low = x - k
    if not any(v <= low for idx, v in enumerate(values) if idx != i - 1):
        return False
    seen_low = False
    for v in values[i:]:
        if v <= low:
            seen_low = True
        elif v > x and not seen_low:
            return False
    seen_low = False
    for idx in range(i - 2, -1, -1):
        v = values[idx]
        if v <= low:
            seen_low = True
        elif v > x and not seen_low:
            return False
    return True
