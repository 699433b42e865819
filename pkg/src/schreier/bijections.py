"""Structure-preserving moves between families at different n.

The counting recurrence rests on two facts about the window of q
values just below n:

* members that avoid a prescribed nonempty set of window values
  correspond one-to-one with the family at a smaller n (close the
  gaps, relabel);
* members that contain the entire window correspond one-to-one with
  the family at n - p - q (strip the top of the set, shift down by p).

Both correspondences are implemented in both directions, with explicit
domain checks (``DomainError``) and postcondition re-checks (plain
``RuntimeError`` -- a failure there is a bug, not bad input).
:func:`inclusion_exclusion_decomposition` recounts the family from
these occupancy classes by brute force, so the claimed class sizes can
be checked against independent counts rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .counting import Count
from .enumeration import enumerate_schreier
from .sets import FiniteSet, Ratio, in_schreier_family


class DomainError(ValueError):
    """Argument lies outside the domain of the requested map."""


def gap_window(n: int, ratio: Ratio) -> tuple[int, ...]:
    """The q consecutive values {n-q, ..., n-1} just below n."""
    if n < ratio.q + 1:
        raise ValueError(f"window needs n >= q + 1, got n={n} with q={ratio.q}")
    return tuple(range(n - ratio.q, n))


@dataclass(frozen=True, init=False)
class GapSet:
    """A nonempty choice of values to vacate from the window below n."""

    n: int
    ratio: Ratio
    members: tuple[int, ...]

    def __init__(self, n: int, ratio: Ratio, members: Iterable[int]) -> None:
        window = gap_window(n, ratio)  # also validates n against q
        chosen = tuple(sorted(set(members)))
        if not chosen:
            raise ValueError("a GapSet must name at least one window value")
        stray = [g for g in chosen if g not in window]
        if stray:
            raise ValueError(
                f"gap values {stray} fall outside the window {window[0]}..{window[-1]}"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "ratio", ratio)
        object.__setattr__(self, "members", chosen)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


def relabeling_table(gaps: GapSet) -> dict[int, int]:
    """The order-preserving bijection {1..n} minus gaps -> {1..n-k}.

    Each surviving value x is sent to x minus the number of gap values
    below x; e.g. gaps {3} within 1..4 give {1: 1, 2: 2, 4: 3}.
    """
    table: dict[int, int] = {}
    fallen = 0
    for x in range(1, gaps.n + 1):
        if x in gaps.members:
            fallen += 1
        else:
            table[x] = x - fallen
    return table


def collapse_gaps(fs: FiniteSet, gaps: GapSet) -> FiniteSet:
    """Map a gap-avoiding family member at n to a member at n - k.

    ``fs`` must belong to the family at n = gaps.n, miss every gap
    value, and n must be at least p + q (below that the correspondence
    is not claimed).
    """
    n, ratio = gaps.n, gaps.ratio
    if n < ratio.p + ratio.q:
        raise DomainError(f"map needs n >= p + q = {ratio.p + ratio.q}, got n={n}")
    if not in_schreier_family(fs, ratio, n):
        raise DomainError(f"{fs} is not a member of the family at n={n} for {ratio}")
    collision = set(fs) & set(gaps.members)
    if collision:
        raise DomainError(f"{fs} meets the gaps at {sorted(collision)}")
    table = relabeling_table(gaps)
    image = FiniteSet(table[x] for x in fs)
    if not in_schreier_family(image, ratio, n - len(gaps)):
        raise RuntimeError(
            f"relabeling broke membership: {fs} -> {image} at n={n - len(gaps)}"
        )
    return image


def expand_gaps(fs: FiniteSet, gaps: GapSet) -> FiniteSet:
    """Inverse of :func:`collapse_gaps`: re-open the gaps.

    ``fs`` must belong to the family at n - k; its elements are pulled
    back through the relabeling table.
    """
    n, ratio = gaps.n, gaps.ratio
    k = len(gaps)
    if n < ratio.p + ratio.q:
        raise DomainError(f"map needs n >= p + q = {ratio.p + ratio.q}, got n={n}")
    if not in_schreier_family(fs, ratio, n - k):
        raise DomainError(
            f"{fs} is not a member of the family at n={n - k} for {ratio}"
        )
    backward = {image: x for x, image in relabeling_table(gaps).items()}
    image = FiniteSet(backward[y] for y in fs)
    if not in_schreier_family(image, ratio, n) or set(image) & set(gaps.members):
        raise RuntimeError(f"re-opening gaps produced a non-member: {fs} -> {image}")
    return image


def strip_window(fs: FiniteSet, ratio: Ratio, n: int) -> FiniteSet:
    """Map a member containing the whole window down to n - p - q.

    Drops the top q elements {n-q+1, ..., n} and shifts the remainder
    down by p.  The new maximum is the old window floor n - q, moved to
    n - p - q; the size bound transfers exactly, in both directions.
    """
    p, q = ratio.p, ratio.q
    if n < p + q:
        raise DomainError(f"map needs n >= p + q = {p + q}, got n={n}")
    if not in_schreier_family(fs, ratio, n):
        raise DomainError(f"{fs} is not a member of the family at n={n} for {ratio}")
    missing = [w for w in gap_window(n, ratio) if w not in fs]
    if missing:
        raise DomainError(f"{fs} misses window values {missing}")
    image = FiniteSet(x - p for x in fs if x <= n - q)
    if not in_schreier_family(image, ratio, n - p - q):
        raise RuntimeError(
            f"window strip broke membership: {fs} -> {image} at n={n - p - q}"
        )
    return image


def attach_window(fs: FiniteSet, ratio: Ratio, n: int) -> FiniteSet:
    """Inverse of :func:`strip_window`: shift up by p, restore the top.

    ``fs`` must belong to the family at n - p - q; the result belongs
    to the family at n and contains all of {n-q, ..., n}.
    """
    p, q = ratio.p, ratio.q
    if n < p + q:
        raise DomainError(f"map needs n >= p + q = {p + q}, got n={n}")
    if not in_schreier_family(fs, ratio, n - p - q):
        raise DomainError(
            f"{fs} is not a member of the family at n={n - p - q} for {ratio}"
        )
    image = FiniteSet([x + p for x in fs] + list(range(n - q + 1, n + 1)))
    window = gap_window(n, ratio)
    if not in_schreier_family(image, ratio, n) or any(w not in image for w in window):
        raise RuntimeError(f"window attach produced a non-member: {fs} -> {image}")
    return image


@dataclass(frozen=True)
class IEDecomposition:
    """Family size at n recounted by window occupancy classes.

    ``full_window_count`` counts members containing every window value;
    ``layer_sums[i-1]`` adds up, over every choice of i window values,
    the members avoiding that choice.  All classes are counted by
    filtering the brute-force enumeration -- no appeal to the
    correspondences above -- so comparing a layer against
    C(q, i) * (family size at n - i) genuinely tests them.
    ``assembled`` alternates the layers on top of the full-window term
    and should reproduce the family size at n.
    """

    n: int
    ratio: Ratio
    full_window_count: Count
    layer_sums: tuple[Count, ...]
    assembled: Count


def inclusion_exclusion_decomposition(n: int, ratio: Ratio) -> IEDecomposition:
    """Recount the family at n by window occupancy, class by class.

    Defined for n >= p + q (the recurrence's regime) and subject to the
    brute-force size guard.
    """
    p, q = ratio.p, ratio.q
    if n < p + q:
        raise ValueError(f"decomposition needs n >= p + q = {p + q}, got {n}")
    window = gap_window(n, ratio)
    listing = enumerate_schreier(n, ratio)
    full = sum(1 for fs in listing if all(w in fs for w in window))
    layers = []
    for size in range(1, q + 1):
        layer = 0
        for gap_values in combinations(window, size):
            layer += sum(1 for fs in listing if not any(g in fs for g in gap_values))
        layers.append(layer)
    assembled = full
    for i, layer in enumerate(layers, start=1):
        assembled += layer if i % 2 == 1 else -layer
    return IEDecomposition(n, ratio, full, tuple(layers), assembled)
