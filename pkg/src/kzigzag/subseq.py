"""
Longest k-alternating and k-zigzagging subsequence statistics.

A subsequence is alternating when it falls, rises, falls, ... (first step a
fall) and reverse-alternating when it rises first; it is k-alternating /
k-reverse-alternating when every neighboring pair additionally differs by at
least k.  Zigzagging covers both orientations.  Single elements (and the
empty sequence) count as valid for either orientation, so both statistics
are always at least 1 on a nonempty word.

Three routes to the optima coexist here on purpose:

- ``alternating_length``: an O(n^2) dynamic program over the word.
- ``chain_lengths`` / ``zigzag_length``: O(n) from the section chain, whose
  link points induce a longest zigzagging subsequence.
- ``brute_force_longest``: exponential scan of every subsequence, the ground
  truth the other two are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm import Permutation, _chain_extrema, _check_gap

ALTERNATING = "alternating"
REVERSE_ALTERNATING = "reverse-alternating"
EITHER = "either"

_KINDS = (ALTERNATING, REVERSE_ALTERNATING)


@dataclass(frozen=True)
class SubsequenceWitness:
    """A concrete zigzagging subsequence: 1-based positions, induced values."""

    positions: tuple[int, ...]
    values: tuple[int, ...]
    kind: str  # ALTERNATING or REVERSE_ALTERNATING


def is_k_alternating(values: Sequence[int], k: int, kind: str) -> bool:
    """Check the strict zigzag comparisons and the minimum gap k.

    ``kind`` selects the orientation: ALTERNATING starts with a fall,
    REVERSE_ALTERNATING with a rise.  Sequences of length 0 or 1 are
    vacuously valid for both.
    """
    _check_gap(k)
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
    fall_first = kind == ALTERNATING
    for idx in range(len(values) - 1):
        a, b = values[idx], values[idx + 1]
        if fall_first == (idx % 2 == 0):
            if a - b < k:
                return False
        elif b - a < k:
            return False
    return True


def alternating_length(w: Permutation, k: int) -> int:
    """Length of a longest k-alternating subsequence, by dynamic programming.

    For each position the DP keeps the best subsequence ending there whose
    final step was a fall and the best whose final step was a rise.  A fall
    into position i may extend a rise-ended subsequence or open a new one (a
    lone first element); a rise may only extend a fall-ended subsequence,
    since the first step must be a fall.  O(n^2) time, O(n) space.
    """
    _check_gap(k)
    values = w.values
    n = len(values)
    fall_end = [0] * n  # best length ending here with a final fall, 0 if none
    rise_end = [0] * n
    best = 1
    for i in range(n):
        vi = values[i]
        fi = ri = 0
        for j in range(i):
            vj = values[j]
            if vj - vi >= k:
                c = rise_end[j] + 1 if rise_end[j] else 2
                if c > fi:
                    fi = c
            elif vi - vj >= k and fall_end[j]:
                c = fall_end[j] + 1
                if c > ri:
                    ri = c
        fall_end[i] = fi
        rise_end[i] = ri
        if fi > best:
            best = fi
        if ri > best:
            best = ri
    return best


def chain_lengths(values: Sequence[int], k: int) -> tuple[int, int]:
    """(alternating, zigzag) lengths from one section-chain sweep, O(n).

    The chain's link points induce a longest zigzagging subsequence, so the
    zigzag length is the number of link points (or 1 when there are none).
    When the chain opens with a valley that optimum starts with a rise and
    no fall-first subsequence reaches it, so the alternating length is one
    less; when it opens with a peak the two lengths agree.  The test suite
    pins this identity against the dynamic program for every permutation of
    each n <= 7 at every k, and against random larger words.

    Accepts a raw one-line word so enumeration and sampling loops can skip
    object construction.
    """
    _check_gap(k)
    ext, first_is_valley = _chain_extrema(values, k)
    m = len(ext)
    if m == 0:
        return 1, 1
    return (m - 1 if first_is_valley else m), m


def zigzag_length(w: Permutation, k: int) -> int:
    """Length of a longest k-zigzagging subsequence (either orientation).

    Equals the number of k-peaks and k-valleys when at least one exists,
    else 1; also equals the larger of the alternating lengths of w and of
    its complement.
    """
    return chain_lengths(w.values, k)[1]


def longest_zigzag_witness(w: Permutation, k: int) -> SubsequenceWitness:
    """A longest k-zigzagging subsequence: the link points in position order.

    Opens with a rise (REVERSE_ALTERNATING) when the first link point is a
    valley, with a fall otherwise.  When no link points exist the witness is
    the first element alone.

    >>> longest_zigzag_witness(Permutation((2, 1, 4, 3, 8, 6, 7, 5, 9)), 3).values
    (1, 8, 5, 9)
    """
    _check_gap(k)
    ext, first_is_valley = _chain_extrema(w.values, k)
    if not ext:
        return SubsequenceWitness((1,), (w.values[0],), ALTERNATING)
    positions = tuple(p + 1 for p in ext)
    return SubsequenceWitness(
        positions,
        tuple(w.values[p] for p in ext),
        REVERSE_ALTERNATING if first_is_valley else ALTERNATING,
    )


def brute_force_longest(w: Permutation, k: int, kind: str = EITHER) -> int:
    """Exact optimum by scanning every subsequence; testing oracle.

    Guarded at n <= 20 (the scan is exponential).  ``kind`` may be
    ALTERNATING, REVERSE_ALTERNATING, or EITHER for zigzagging.
    """
    _check_gap(k)
    if kind not in (_KINDS + (EITHER,)):
        raise ValueError(f"kind must be one of {_KINDS + (EITHER,)}, got {kind!r}")
    n = w.n
    if n > 20:
        raise ValueError(f"brute force limited to n <= 20, got n={n}")
    values = w.values
    kinds = _KINDS if kind == EITHER else (kind,)
    best = 1
    for mask in range(1, 1 << n):
        sub = [values[i] for i in range(n) if mask >> i & 1]
        if len(sub) <= best:
            continue
        if any(is_k_alternating(sub, k, kd) for kd in kinds):
            best = len(sub)
    return best
