"""Fast counting of min-constrained families.

Two independent methods are provided on purpose:

* :func:`count_schreier_direct` sums binomial rows grouped by the
  minimum element.  It is self-contained and serves as the seed
  supplier for the recurrence.
* :func:`count_schreier_recurrence` advances a constant-coefficient
  linear recurrence of depth p + q.

They share no code beyond the input checks, so agreement between them
(and with the brute-force oracle) is meaningful evidence.  Counts are
exact arbitrary-precision integers throughout.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .sets import Ratio

# Counts are plain Python ints: exact and unbounded, which the
# recurrence needs long before n reaches 10_000.
Count = int


@dataclass(frozen=True)
class CountSequence:
    """Family sizes for one ratio, indexed by n (``values[0]`` is 0)."""

    ratio: Ratio
    values: tuple[Count, ...]

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Count:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Count]:
        return iter(self.values)


def _require_count_index(n: int) -> None:
    if not (isinstance(n, int) and n >= 0):
        raise ValueError(f"n must be a non-negative integer, got {n!r}")


def binomial(n: int, k: int) -> Count:
    """C(n, k), with out-of-range k giving 0 instead of an error."""
    if not (isinstance(n, int) and n >= 0):
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def count_schreier_direct(n: int, ratio: Ratio) -> Count:
    """Count by summing, for each minimum m, the ways to fill the gap.

    A member with min m < n picks its remaining elements from the
    n - m - 1 values strictly between m and n; the size bound
    q*m >= p*|F| caps how many may be picked.  Saturated rows collapse
    to a power of two, partial rows accumulate C(t, j) terms with the
    usual multiplicative update.  The lone singleton {n} contributes
    when q*n >= p.
    """
    _require_count_index(n)
    p, q = ratio.p, ratio.q
    total = 1 if q * n >= p else 0
    for m in range(1, n):
        cap = q * m // p - 2  # extra elements allowed beyond {m, n}
        if cap < 0:
            continue
        t = n - m - 1
        if cap >= t:
            total += 1 << t
        else:
            term = 1
            acc = 1
            for j in range(1, cap + 1):
                term = term * (t - j + 1) // j
                acc += term
            total += acc
    return total


def _signed_coefficients(q: int) -> list[int]:
    """Coefficients of count(n-1) .. count(n-q) in the recurrence."""
    return [(-1) ** (k + 1) * comb(q, k) for k in range(1, q + 1)]


def count_schreier_recurrence(n: int, ratio: Ratio) -> Count:
    """Count via the depth-(p+q) linear recurrence.

    For n >= p + q,

        count(n) = sum_{k=1}^{q} (-1)^(k+1) C(q, k) count(n - k)
                   + count(n - p - q),

    seeded with count(0) = 0 and the direct formula for 0 < n < p + q.
    Runs in O(n * q) big-int additions.
    """
    _require_count_index(n)
    p, q = ratio.p, ratio.q
    depth = p + q
    if n < depth:
        return count_schreier_direct(n, ratio)
    hist: deque[Count] = deque(maxlen=depth)
    hist.append(0)
    for m in range(1, depth):
        hist.append(count_schreier_direct(m, ratio))
    signed = _signed_coefficients(q)
    for _ in range(depth, n + 1):
        # hist[depth - k] holds the count k steps back
        value = hist[0]
        for k in range(1, q + 1):
            value += signed[k - 1] * hist[depth - k]
        hist.append(value)
    return hist[-1]


def schreier_sequence(ratio: Ratio, n_max: int) -> CountSequence:
    """All counts for 0 <= n <= n_max in one forward pass."""
    _require_count_index(n_max)
    p, q = ratio.p, ratio.q
    depth = p + q
    values: list[Count] = [0]
    for m in range(1, min(depth, n_max + 1)):
        values.append(count_schreier_direct(m, ratio))
    signed = _signed_coefficients(q)
    for m in range(depth, n_max + 1):
        value = values[m - depth]
        for k in range(1, q + 1):
            value += signed[k - 1] * values[m - k]
        values.append(value)
    return CountSequence(ratio, tuple(values))
