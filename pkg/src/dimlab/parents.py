"""Partitions obtained by adding a single hook of length 2^R to a core.

For a core mu with |mu| < 2^R there are exactly 2^R such parents: one for
each first-column hook of mu (bump that element by 2^R), and one for each
admissible shift r (shift the hook set by r, then insert the element 2^R).
The sign of a parent's dimension follows the core's sign up to a parity
computable from the hook set alone, which is the engine behind all the
signed counting downstream.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .binary_arith import sign_parity, top_two_bits
from .beta_sets import BetaSet, first_column_hooks, shift, to_partition
from .partitions import DimClass, Partition, dim_mod4


class ParentRecord(NamedTuple):
    parent: Partition
    core: Partition
    r_power: int  # the added hook has length 2**r_power
    kind: str  # "I" bumps an existing element, "II" shifts then inserts
    param: int  # kind I: the bumped element; kind II: the shift amount
    affected: int  # first-column hook length of the added hook


def _check_core(core: Partition, r_power: int) -> int:
    if r_power < 1:
        raise ValueError(f"r_power must be at least 1, got {r_power}")
    t = 1 << r_power
    if core.size >= t:
        raise ValueError(f"core size {core.size} must be below 2^{r_power} = {t}")
    return t


def type1_parents(core: Partition, r_power: int) -> list[ParentRecord]:
    """Parents made by bumping one first-column hook of the core by 2^r_power.

    One record per element of the core's hook set, largest first.
    """
    t = _check_core(core, r_power)
    hooks = first_column_hooks(core)
    out = []
    for x in hooks.elements:
        raised = BetaSet(tuple(e for e in hooks.elements if e != x) + (x + t,))
        out.append(ParentRecord(to_partition(raised), core, r_power, "I", x, x + t))
    return out


def type2_parents(core: Partition, r_power: int) -> list[ParentRecord]:
    """Parents made by shifting the core's hook set, then inserting 2^r_power.

    Shifts r = 1..2^r_power are admissible whenever the shifted set misses
    2^r_power; that leaves exactly 2^r_power - len(hooks) records.
    """
    t = _check_core(core, r_power)
    hooks = first_column_hooks(core)
    out = []
    for r in range(1, t + 1):
        shifted = shift(hooks, r)
        if t in shifted:
            continue
        combined = BetaSet((t,) + tuple(e for e in shifted.elements if e != 0))
        out.append(ParentRecord(to_partition(combined), core, r_power, "II", r, t))
    return out


def all_parents(core: Partition, r_power: int) -> list[ParentRecord]:
    """Both kinds together: exactly 2^r_power records."""
    return type1_parents(core, r_power) + type2_parents(core, r_power)


def split_type2(records: Iterable[ParentRecord]) -> tuple[list[ParentRecord], list[ParentRecord]]:
    """Split kind-II records into shifts r <= 2^(R-1) and shifts above."""
    low: list[ParentRecord] = []
    high: list[ParentRecord] = []
    for rec in records:
        if rec.kind != "II":
            raise ValueError(f"expected kind II records, got kind {rec.kind}")
        half = 1 << (rec.r_power - 1)
        (low if rec.param <= half else high).append(rec)
    return low, high


def count_between(p: Partition, h: int, r_power: int) -> int:
    """First-column hooks of p strictly between h - 2^r_power and h."""
    hooks = first_column_hooks(p)
    if h not in hooks:
        raise ValueError(f"{h} is not a first-column hook of {p}")
    lo = h - (1 << r_power)
    return sum(1 for y in hooks.elements if lo < y < h)


def _flip_product_parity(rec: ParentRecord) -> int:
    # parity of the product over x in hooks(parent) - {h} of
    # odd_sign(|h - x|) / odd_sign(|h - 2^R - x|)
    h = rec.affected
    t = 1 << rec.r_power
    par = 0
    for x in first_column_hooks(rec.parent).elements:
        if x == h:
            continue
        par ^= sign_parity(abs(h - x)) ^ sign_parity(abs(h - t - x))
    return par


def sign_flip_parity(rec: ParentRecord) -> int:
    """Parity of sign flips between the core's dimension and the parent's.

    Counted by window and membership tests on the parent's hook set; in
    debug mode the defining product of odd-part signs is asserted equal.
    """
    h = rec.affected
    half = 1 << (rec.r_power - 1)
    hooks = first_column_hooks(rec.parent)
    eta = count_between(rec.parent, h, rec.r_power)
    eta -= h - half in hooks
    eta += h + half in hooks
    eta += h - 3 * half in hooks
    eta &= 1
    assert eta == _flip_product_parity(rec), f"flip parity routes disagree on {rec}"
    return eta


def predict_parent_sign(rec: ParentRecord, core_sign: int) -> int:
    """Odd-part sign of the parent's dimension, from the core's sign alone."""
    n = rec.parent.size
    if n <= 3:
        raise ValueError(f"prediction needs a parent of size above 3, got {n}")
    exponent = top_two_bits(n) + top_two_bits(rec.affected) + sign_flip_parity(rec)
    return core_sign if exponent % 2 == 0 else -core_sign


def signed_sum(records: Iterable[ParentRecord], core: Partition) -> int:
    """Sum of the parents' dimension signs, normalized by the core's sign.

    Every record must belong to the given core and every parent must have
    odd dimension.
    """
    total = 0
    for rec in records:
        if rec.core != core:
            raise ValueError(f"record {rec} does not belong to core {core}")
        cls: DimClass = dim_mod4(rec.parent)
        if cls.v2 != 0:
            raise ValueError(f"parent {rec.parent} has even dimension")
        total += cls.sign
    return total * dim_mod4(core).sign
