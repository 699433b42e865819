"""Set types and membership predicates for min-constrained set families.

A finite set F of positive integers is *generalized Schreier* for a
ratio p/q when q*min(F) >= p*|F|: the minimum must be large relative to
the cardinality.  The classical Schreier condition min(F) >= |F| is the
ratio 1/1.  Every family this package counts is built from these
predicates, optionally anchored by a fixed maximum element or
restricted to intervals of consecutive integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True, init=False)
class FiniteSet:
    """Nonempty set of positive integers, stored as a strictly increasing tuple.

    Accepts any iterable of distinct positive integers; elements are
    sorted on construction.  Instances are immutable, hashable, and
    ordered lexicographically by their element sequence.
    """

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        elems = tuple(sorted(elements))
        if not elems:
            raise ValueError("FiniteSet must be nonempty")
        for x in elems:
            if not isinstance(x, int):
                raise TypeError(f"elements must be integers, got {x!r}")
        if elems[0] < 1:
            raise ValueError(f"elements must be >= 1, got {elems[0]}")
        for a, b in zip(elems, elems[1:]):
            if a == b:
                raise ValueError(f"duplicate element {a}")
        object.__setattr__(self, "elements", elems)

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    def translate(self, offset: int) -> FiniteSet:
        """Element-wise shift by ``offset`` (may be negative)."""
        return FiniteSet(x + offset for x in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __str__(self) -> str:
        return "{%s}" % ",".join(str(x) for x in self.elements)


@dataclass(frozen=True)
class Ratio:
    """Parameter pair (p, q) of the defining inequality q*min(F) >= p*|F|.

    Kept unreduced: (2, 4) and (1, 2) describe the same family, and that
    equivalence is a tested property of the package rather than a
    normalization performed here.
    """

    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and self.p >= 1):
            raise ValueError(f"p must be a positive integer, got {self.p!r}")
        if not (isinstance(self.q, int) and self.q >= 1):
            raise ValueError(f"q must be a positive integer, got {self.q!r}")

    def scaled(self, k: int) -> Ratio:
        """The same ratio written with both parts multiplied by ``k``."""
        return Ratio(k * self.p, k * self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def is_generalized_schreier(fs: FiniteSet, ratio: Ratio) -> bool:
    """True iff q*min(fs) >= p*|fs|."""
    return ratio.q * fs.min >= ratio.p * len(fs)


def in_schreier_family(fs: FiniteSet, ratio: Ratio, n: int) -> bool:
    """True iff fs satisfies the ratio inequality and max(fs) == n."""
    return fs.max == n and is_generalized_schreier(fs, ratio)


def is_interval(fs: FiniteSet) -> bool:
    """True iff fs is a run of consecutive integers; singletons qualify."""
    return len(fs) == fs.max - fs.min + 1
