"""Beta-sets: first-column hook sets and the abacus moves on them.

A beta-set is a finite set of distinct non-negative integers.  Every
partition has a canonical one (its first-column hook lengths), and two
beta-sets describe the same partition exactly when one is a shift of the
other.  Removing a t-hook from a partition is the move h -> h - t on any
of its beta-sets, which is what makes t-cores computable without touching
the diagram.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import HookRemovalError
from .partitions import Partition


class BetaSet:
    """Distinct non-negative integers, kept sorted in descending order."""

    __slots__ = ("elements", "_members")

    def __init__(self, elements: Iterable[int] = ()):
        elems = tuple(sorted((int(x) for x in elements), reverse=True))
        for i, x in enumerate(elems):
            if x < 0:
                raise ValueError(f"beta-set elements must be non-negative, got {x}")
            if i and elems[i - 1] == x:
                raise ValueError(f"beta-set elements must be distinct, got {x} twice")
        self.elements = elems
        self._members = frozenset(elems)

    def __contains__(self, x: object) -> bool:
        return x in self._members

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BetaSet) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"

    def __repr__(self) -> str:
        return f"BetaSet({self.elements!r})"


def first_column_hooks(p: Partition) -> BetaSet:
    """The canonical beta-set of p: hook lengths of the first column.

    >>> first_column_hooks(Partition((2, 2, 2))).elements
    (4, 3, 2)
    """
    k = len(p.parts)
    return BetaSet(p.parts[i] + k - 1 - i for i in range(k))


def shift(x: BetaSet, r: int) -> BetaSet:
    """Add r to every element and fill in the new low positions 0..r-1."""
    if r < 0:
        raise ValueError(f"shift amount must be non-negative, got {r}")
    return BetaSet(tuple(e + r for e in x.elements) + tuple(range(r)))


def to_partition(x: BetaSet) -> Partition:
    """The partition a beta-set describes; inverse of first_column_hooks.

    >>> to_partition(BetaSet((9, 6, 4, 2, 1))).parts
    (5, 3, 2, 1, 1)
    """
    elems = x.elements
    k = len(elems)
    parts = []
    for i, h in enumerate(elems):
        part = h - (k - 1 - i)
        if part <= 0:
            break
        parts.append(part)
    return Partition(parts)


def normalize(x: BetaSet) -> BetaSet:
    """The canonical representative of x's shift class."""
    return first_column_hooks(to_partition(x))


def equivalent(x: BetaSet, y: BetaSet) -> bool:
    """True when x and y describe the same partition."""
    return to_partition(x) == to_partition(y)


def remove_hook(x: BetaSet, h: int, t: int) -> BetaSet:
    """Remove a t-hook: replace element h by h - t.

    Valid only when h is present, h >= t, and h - t is absent; each failed
    clause raises HookRemovalError saying which one.
    """
    if t < 1:
        raise ValueError(f"hook size must be positive, got {t}")
    if h not in x:
        raise HookRemovalError(f"{h} is not an element of {x}")
    if h < t:
        raise HookRemovalError(f"element {h} is smaller than the hook size {t}")
    if h - t in x:
        raise HookRemovalError(f"{h - t} is already in {x}; no {t}-hook at {h}")
    return BetaSet(tuple(e for e in x.elements if e != h) + (h - t,))


def t_core(p: Partition, t: int) -> Partition:
    """Remove t-hooks until none remain; the order taken does not matter.

    >>> t_core(Partition((5, 5, 5, 4, 2)), 5).parts
    (3, 1, 1, 1)
    """
    if t < 1:
        raise ValueError(f"hook size must be positive, got {t}")
    elems = set(first_column_hooks(p).elements)
    moved = True
    while moved:
        moved = False
        for h in sorted(elems, reverse=True):
            if h >= t and (h - t) not in elems:
                elems.remove(h)
                elems.add(h - t)
                moved = True
                break
    return to_partition(BetaSet(elems))


def parity_gap(x: BetaSet) -> int:
    """Number of even elements minus number of odd elements.

    >>> parity_gap(BetaSet((13, 12, 8, 5, 3, 1, 0)))
    -1
    """
    odd = sum(e & 1 for e in x.elements)
    return len(x.elements) - 2 * odd
