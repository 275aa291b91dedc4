"""Towers of 2-cores built by iterating the 2-quotient construction.

Splitting a hook set by parity yields two smaller partitions (the
2-quotient) plus a staircase remainder (the 2-core).  Doing this
recursively hangs a 2-core on every node of a binary tree; row k holds
2^k of them, and the total size satisfies

    size = sum over rows of 2^k * (sum of core sizes in row k).

The row weights of that tree decide the dimension's residue mod 4, which
is why the whole structure earns its keep here.

Parity split convention: the hook set is first padded to even
cardinality, even elements (halved) give component 0 and odd elements
give component 1.  Under this labelling, conjugating the partition
mirrors every row of the tower.
"""

from __future__ import annotations

from math import comb

from .beta_sets import BetaSet, first_column_hooks, shift, t_core, to_partition
from .partitions import Partition


def staircase(height: int) -> Partition:
    """The 2-core with the given number of rows: (h, h-1, ..., 1)."""
    if height < 0:
        raise ValueError(f"height must be non-negative, got {height}")
    return Partition(tuple(range(height, 0, -1)))


def is_two_core(p: Partition) -> bool:
    return p.parts == tuple(range(len(p), 0, -1))


def two_quotient(p: Partition) -> tuple[Partition, Partition]:
    """Split the hook set of p by parity into two smaller partitions.

    The hook set is padded to even cardinality first, so the result does
    not depend on how the diagram happened to be written down.

    >>> a, b = two_quotient(Partition((3, 3, 3)))
    >>> (a.parts, b.parts)
    ((1, 1), (2,))
    """
    elems = first_column_hooks(p).elements
    if len(elems) % 2:
        elems = tuple(e + 1 for e in elems) + (0,)
    evens = tuple(e // 2 for e in elems if e % 2 == 0)
    odds = tuple(e // 2 for e in elems if e % 2 == 1)
    return to_partition(BetaSet(evens)), to_partition(BetaSet(odds))


def two_core(p: Partition) -> Partition:
    """The staircase left after removing 2-hooks greedily.

    Only the parity census of the hook set matters: e even elements slide
    down to {0, 2, ..., 2e-2} and o odd ones to {1, 3, ..., 2o-1}.
    """
    elems = first_column_hooks(p).elements
    e = sum(1 for x in elems if x % 2 == 0)
    o = len(elems) - e
    beta = tuple(range(2 * o - 1, 0, -2)) + tuple(range(2 * e - 2, -1, -2))
    out = to_partition(BetaSet(tuple(sorted(beta, reverse=True))))
    assert out == t_core(p, 2), f"parity census core disagrees with removal on {p}"
    return out


def combine(q0: Partition, q1: Partition, core: Partition) -> Partition:
    """Inverse of (two_quotient, two_core): rebuild the partition.

    The staircase height fixes the imbalance d between odd and even slots
    (d = height for even heights, -(height + 1) for odd ones); the two
    components are then interleaved as evens and odds of one hook set.
    """
    if not is_two_core(core):
        raise ValueError(f"{core} is not a staircase")
    c = len(core)
    d = c if c % 2 == 0 else -(c + 1)
    e = max(len(q0), len(q1) - d, -d)
    o = e + d
    b0 = shift(first_column_hooks(q0), e - len(q0))
    b1 = shift(first_column_hooks(q1), o - len(q1))
    merged = tuple(sorted((2 * a for a in b0.elements), reverse=True))
    merged += tuple(sorted((2 * b + 1 for b in b1.elements), reverse=True))
    out = to_partition(BetaSet(tuple(sorted(merged, reverse=True))))
    assert two_quotient(out) == (q0, q1), f"combine does not invert the quotient on {out}"
    assert two_core(out) == core, f"combine does not restore the core on {out}"
    return out


class CoreTower:
    """Rows of 2-cores; row k has 2^k entries, children of node j are 2j, 2j+1."""

    __slots__ = ("rows",)

    rows: tuple[tuple[Partition, ...], ...]

    def __init__(self, rows: tuple[tuple[Partition, ...], ...]):
        if not rows:
            raise ValueError("a tower needs at least one row")
        for k, row in enumerate(rows):
            if len(row) != 1 << k:
                raise ValueError(f"row {k} has {len(row)} entries, expected {1 << k}")
            for node in row:
                if not is_two_core(node):
                    raise ValueError(f"row {k} entry {node} is not a 2-core")
        if len(rows) > 1 and not any(node.size for node in rows[-1]):
            raise ValueError("trailing all-empty row; trim before constructing")
        object.__setattr__(self, "rows", tuple(tuple(row) for row in rows))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CoreTower is immutable")

    @property
    def depth(self) -> int:
        return len(self.rows)

    @property
    def size(self) -> int:
        return sum((1 << k) * sum(node.size for node in row) for k, row in enumerate(self.rows))

    def flip(self) -> "CoreTower":
        """Mirror every row; this is what conjugation does to the tower."""
        return CoreTower(tuple(tuple(reversed(row)) for row in self.rows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoreTower):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"CoreTower({self.rows!r})"


def tower(p: Partition) -> CoreTower:
    """The full tower of 2-cores over p, trailing empty rows trimmed."""
    rows: list[tuple[Partition, ...]] = []
    level = [p]
    while any(q.size for q in level):
        rows.append(tuple(two_core(q) for q in level))
        nxt: list[Partition] = []
        for q in level:
            a, b = two_quotient(q)
            nxt.append(a)
            nxt.append(b)
        level = nxt
    if not rows:
        rows.append((p,))
    return CoreTower(tuple(rows))


def tower_to_partition(t: CoreTower) -> Partition:
    rows = t.rows

    def build(level: int, index: int) -> Partition:
        core = rows[level][index]
        if level + 1 >= len(rows):
            return core
        return combine(build(level + 1, 2 * index), build(level + 1, 2 * index + 1), core)

    return build(0, 0)


def truncate(t: CoreTower, depth: int) -> CoreTower:
    """Keep the first `depth` rows, trimming any all-empty tail."""
    if depth < 1:
        raise ValueError(f"depth must be at least 1, got {depth}")
    rows = list(t.rows[:depth])
    while len(rows) > 1 and not any(node.size for node in rows[-1]):
        rows.pop()
    return CoreTower(tuple(rows))


def row_weights(t: CoreTower) -> tuple[int, ...]:
    return tuple(sum(node.size for node in row) for row in t.rows)


def classify_by_tower(p: Partition) -> str:
    """Residue class of the dimension, read off the tower's row weights.

    "odd" when the weights reproduce the binary digits of n exactly;
    "two_mod_4" when exactly one digit 1 at position R is traded for an
    extra 2 at position R-1; "other" covers everything divisible by 4.
    """
    w = row_weights(tower(p))
    n = p.size
    depth = max(len(w), n.bit_length())
    ww = list(w) + [0] * (depth - len(w))
    bb = [(n >> i) & 1 for i in range(depth)]
    if ww == bb:
        return "odd"
    for r in range(1, depth):
        if bb[r] != 1:
            continue
        want = list(bb)
        want[r] = 0
        want[r - 1] += 2
        if ww == want:
            return "two_mod_4"
    return "other"


def count_row_fillings(k: int, weight: int) -> int:
    """How many ways row k can carry the given total weight (0 <= w <= 3).

    Weight 2 forces two nodes of size one (no 2-core has size two), and
    weight 3 is either a single (2,1) or three nodes of size one.
    """
    if k < 0:
        raise ValueError(f"row index must be non-negative, got {k}")
    nodes = 1 << k
    if weight == 0:
        return 1
    if weight == 1:
        return nodes
    if weight == 2:
        return comb(nodes, 2)
    if weight == 3:
        return comb(nodes, 3) + nodes
    raise ValueError(f"row weight {weight} out of supported range 0..3")


def render_tower(t: CoreTower) -> list[str]:
    """One string per row, nodes separated by ' | ', empty cores as '-'."""
    return [" | ".join(str(node) for node in row) for row in t.rows]
