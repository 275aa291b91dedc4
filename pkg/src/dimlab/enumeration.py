"""Counting partitions of n by the residue of their dimension mod 4.

Closed forms and recursions cover most inputs: the odd count is read off
the binary expansion, the residue-2 count satisfies a two-branch
recursion on the leading binary digit, and the signed difference
a1 - a3 recurses whenever the two leading digits are "10".  Inputs whose
binary expansion starts "11" and carries three or more ones have no
proved formula; for those the signed difference falls back to a
brute-force sweep and says so in its status flag.
"""

from __future__ import annotations

import dataclasses
from functools import cache
from math import comb

from .binary_arith import bit_positions, is_sparse
from .errors import SizeLimitError
from .parents import all_parents
from .partitions import Partition, dim_mod4, enumerate_partitions

DEFAULT_ORACLE_BOUND = 40

EXACT = "exact-formula"
FALLBACK = "oracle-fallback"

CSV_HEADER = "n,a,a1,a2,a3,delta,m4,source"


@dataclasses.dataclass(frozen=True)
class CountReport:
    """Counts of partitions of n by dimension residue class mod 4.

    a1, a2, a3 count residues 1, 2, 3; a = a1 + a3 is the odd count,
    delta = a1 - a3, and m4 = a + a2 counts dimensions not divisible
    by 4.  source is "formula", "oracle", or "mixed" when a formula
    report needed oracle help for delta.
    """

    n: int
    a: int
    a1: int
    a2: int
    a3: int
    delta: int
    m4: int
    source: str

    def __post_init__(self) -> None:
        if self.a != self.a1 + self.a3:
            raise ValueError(f"a = {self.a} but a1 + a3 = {self.a1 + self.a3}")
        if self.delta != self.a1 - self.a3:
            raise ValueError(f"delta = {self.delta} but a1 - a3 = {self.a1 - self.a3}")
        if self.m4 != self.a + self.a2:
            raise ValueError(f"m4 = {self.m4} but a + a2 = {self.a + self.a2}")
        if self.source not in ("formula", "oracle", "mixed"):
            raise ValueError(f"unknown source {self.source!r}")


def to_csv_row(report: CountReport) -> str:
    r = report
    return f"{r.n},{r.a},{r.a1},{r.a2},{r.a3},{r.delta},{r.m4},{r.source}"


def count_odd(n: int) -> int:
    """Number of partitions of n with odd dimension: 2^(sum of bit positions).

    >>> count_odd(5)
    4
    >>> count_odd(6)
    8
    >>> count_odd(1)
    1
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    exponent = sum(bit_positions(n))
    if exponent >= 64:
        raise SizeLimitError(f"odd-partition count of {n} needs 2^{exponent}, past the 64-bit line")
    return 1 << exponent


def delta_sparse(n: int) -> int:
    """Closed form for a1 - a3 when n has no adjacent binary ones."""
    if n == 0:
        return 1
    if not is_sparse(n):
        raise ValueError(f"{n} is not sparse")
    if n == 2:
        return 2
    if n % 2 == 0:
        return 0
    return 4 ** (bin(n).count("1") - 1)


@cache
def _delta(n: int, bound: int) -> tuple[int, str]:
    if n <= 2:
        return ((1, 1, 2)[n], EXACT)
    r = n.bit_length() - 1
    m = n - (1 << r)
    half = 1 << (r - 1)
    if m == 0:
        return (0, EXACT)
    if m == half:
        return ({3: 2, 6: 8}.get(n, 0), EXACT)
    if m < half:
        if m % 2 == 0:
            return (0, EXACT)
        value, status = _delta(m, bound)
        return (4 * value, status)
    # leading binary digits "11" with more ones behind them: no proved
    # formula exists, so fall back to exhaustive classification
    if n > bound:
        raise SizeLimitError(
            f"delta({n}) has no closed form (leading 11 with extra ones) "
            f"and exceeds the oracle bound {bound}"
        )
    return (oracle_counts(n, bound).delta, FALLBACK)


def delta(n: int, oracle_bound: int | None = None) -> tuple[int, str]:
    """Signed count a1(n) - a3(n) and how it was obtained.

    >>> delta(5)
    (4, 'exact-formula')
    >>> delta(6)
    (8, 'exact-formula')
    >>> delta(4)
    (0, 'exact-formula')
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    out = _delta(n, DEFAULT_ORACLE_BOUND if oracle_bound is None else oracle_bound)
    if n > 0 and is_sparse(n):
        assert out[0] == delta_sparse(n), f"sparse closed form disagrees at {n}"
    return out


def a1_a3(n: int, oracle_bound: int | None = None) -> tuple[int, int]:
    """The residue-1 and residue-3 counts, from the odd count and delta."""
    a = count_odd(n)
    value, _ = delta(n, oracle_bound)
    if (a + value) % 2:
        raise RuntimeError(f"parity violation at n={n}: a={a}, delta={value}")
    a1 = (a + value) // 2
    a3 = (a - value) // 2
    if a3 < 0 or a1 < 0:
        raise RuntimeError(f"negative count at n={n}: a1={a1}, a3={a3}")
    return a1, a3


@cache
def a2(n: int) -> int:
    """Number of partitions of n with dimension exactly 2 mod 4.

    Recursion on the leading binary digit, with the branch split at the
    second-highest bit; totals for the smaller index enter through the
    odd count.

    >>> a2(4)
    1
    >>> a2(5)
    1
    >>> a2(6)
    2
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n <= 1:
        return 0
    r = n.bit_length() - 1
    m = n - (1 << r)
    half = 1 << (r - 1)
    if m < half:
        out = (1 << r) * a2(m) + comb(half, 2) * count_odd(m)
    else:
        scaled, rem = divmod((comb(half, 3) + half) * count_odd(m), half)
        assert rem == 0, f"inexact division in a2({n})"
        out = (1 << r) * a2(m) + scaled
    if is_sparse(n):
        assert out == a2_sparse(n), f"sparse shortcut disagrees at {n}"
    return out


def a2_sparse(n: int) -> int:
    """Shortcut for a2 on sparse n: odd n defers to n-1, even n is
    a(n)(n - 2*ones)/8."""
    if n == 0:
        return 0
    if not is_sparse(n):
        raise ValueError(f"{n} is not sparse")
    if n % 2:
        return a2_sparse(n - 1)
    scaled, rem = divmod(count_odd(n) * (n - 2 * bin(n).count("1")), 8)
    assert rem == 0, f"inexact division in a2_sparse({n})"
    return scaled


def m4(n: int) -> int:
    """Partitions of n whose dimension is not divisible by 4.

    >>> m4(6)
    10
    >>> m4(1)
    1
    >>> m4(4)
    5
    """
    return count_odd(n) + a2(n)


def enumerate_odd_partitions(n: int):
    """Yield exactly the partitions of n with odd dimension.

    Walks the binary expansion top bit first: the odd partitions of
    2^r + m are precisely the partitions obtained from odd partitions
    of m by adding one hook of length 2^r.  Even-dimension partitions
    are never touched, so the stream scales with the odd count, not
    with p(n).
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        yield Partition(())
        return
    if n == 1:
        yield Partition((1,))
        return
    r = n.bit_length() - 1
    m = n - (1 << r)
    for mu in enumerate_odd_partitions(m):
        for rec in all_parents(mu, r):
            yield rec.parent


@cache
def _oracle_sweep(n: int) -> tuple[int, int, int]:
    tally = [0, 0, 0]  # residues 1, 2, 3
    for p in enumerate_partitions(n):
        cls = dim_mod4(p)
        residue = cls.residue
        if residue:
            tally[residue - 1] += 1
    return tuple(tally)


def oracle_counts(n: int, oracle_bound: int | None = None) -> CountReport:
    """Classify every partition of n by brute force; fields all carry
    source "oracle"."""
    bound = DEFAULT_ORACLE_BOUND if oracle_bound is None else oracle_bound
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > bound:
        raise SizeLimitError(f"oracle sweep of n={n} exceeds the bound {bound}")
    c1, c2, c3 = _oracle_sweep(n)
    return CountReport(
        n=n, a=c1 + c3, a1=c1, a2=c2, a3=c3,
        delta=c1 - c3, m4=c1 + c2 + c3, source="oracle",
    )


def formula_counts(n: int, oracle_bound: int | None = None) -> CountReport:
    """Assemble a CountReport from the closed forms; source becomes
    "mixed" when delta needed the oracle."""
    _, status = delta(n, oracle_bound)
    a1, a3 = a1_a3(n, oracle_bound)
    two = a2(n)
    return CountReport(
        n=n, a=a1 + a3, a1=a1, a2=two, a3=a3,
        delta=a1 - a3, m4=a1 + a3 + two,
        source="formula" if status == EXACT else "mixed",
    )


def clear_caches() -> None:
    """Drop all memoized counting state (mainly for cold-start timing)."""
    _delta.cache_clear()
    a2.cache_clear()
    _oracle_sweep.cache_clear()
