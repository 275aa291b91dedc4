"""Bit-level statistics and the mod-4 sign of odd parts.

Every positive integer factors as 2^v * u with u odd, and u is congruent to
either 1 or 3 mod 4.  Encoding that residue as a sign +1/-1 makes it
multiplicative, which is what the dimension formulas downstream exploit.
The sign of the odd part of n! has a closed form in terms of the binary
digits of n, so none of this ever touches big integers.
"""

from __future__ import annotations

import threading
from typing import NamedTuple


def v2(n: int) -> int:
    """2-adic valuation: exponent of the largest power of 2 dividing n.

    >>> v2(40)
    3
    """
    if n <= 0:
        raise ValueError(f"v2 is defined for positive integers, got {n}")
    return (n & -n).bit_length() - 1


def adjacent_ones(n: int) -> int:
    """Number of positions where two consecutive binary digits are both 1.

    >>> adjacent_ones(7)   # 111
    2
    >>> adjacent_ones(42)  # 101010
    0
    """
    if n < 0:
        raise ValueError(f"expected a non-negative integer, got {n}")
    return (n & (n >> 1)).bit_count()


def top_two_bits(n: int) -> int:
    """Sum of the two most significant binary digits of n (1 or 2)."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    k = n.bit_length() - 1
    if k == 0:
        return 1
    return 1 + ((n >> (k - 1)) & 1)


def bit_positions(n: int) -> frozenset[int]:
    """Set of positions of the 1-digits in the binary expansion of n."""
    if n < 0:
        raise ValueError(f"expected a non-negative integer, got {n}")
    return frozenset(i for i in range(n.bit_length()) if (n >> i) & 1)


class BinaryStats(NamedTuple):
    n: int
    v2: int
    ones: int
    adjacent: int
    top_two: int
    bits: frozenset[int]


def binary_stats(n: int) -> BinaryStats:
    """All binary statistics of n in one pass.

    >>> binary_stats(12).v2, binary_stats(12).ones
    (2, 2)
    """
    if n <= 0:
        raise ValueError(f"binary_stats is defined for positive integers, got {n}")
    return BinaryStats(n, v2(n), n.bit_count(), adjacent_ones(n),
                       top_two_bits(n), bit_positions(n))


def sign_parity(n: int) -> int:
    """0 if the odd part of n is 1 mod 4, 1 if it is 3 mod 4."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    return (n >> (n & -n).bit_length()) & 1


def odd_sign(n: int) -> int:
    """Sign encoding of the odd part of n mod 4: +1 for 1, -1 for 3.

    Multiplicative: odd_sign(m * n) == odd_sign(m) * odd_sign(n).

    >>> odd_sign(12), odd_sign(20)
    (-1, 1)
    """
    return -1 if sign_parity(n) else 1


def factorial_sign_parity(n: int) -> int:
    """Parity form of odd_sign_factorial, for cheap accumulation."""
    if n < 0:
        raise ValueError(f"expected a non-negative integer, got {n}")
    return ((n & (n >> 1)).bit_count() + (n >> 2).bit_count()) & 1


def odd_sign_factorial(n: int) -> int:
    """Sign of the odd part of n! mod 4, in O(1) bit operations.

    Equals the product of odd_sign(r) for r = 1..n, but computed from the
    binary digits of n alone: -1 raised to (number of adjacent 1-digit pairs
    of n, plus the digit count of n//4).

    >>> odd_sign_factorial(4)   # 24 = 8 * 3
    -1
    >>> odd_sign_factorial(7)   # 5040 = 16 * 315, 315 = 4*78+3
    -1
    """
    return -1 if factorial_sign_parity(n) else 1


def is_sparse(n: int) -> bool:
    """True when no two consecutive binary digits of n are both 1.

    >>> is_sparse(42), is_sparse(7)
    (True, False)
    """
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    return (n & (n >> 1)) == 0


# Shared lookup tables for factorial valuations/signs, grown on demand.
# Readers index concurrently; growth is serialized by the lock.
_V2FACT: list[int] = [0]
_FACPAR: list[int] = [0]
_TABLE_LOCK = threading.Lock()


def _grow_tables(n: int) -> None:
    if n < len(_V2FACT):
        return
    with _TABLE_LOCK:
        for i in range(len(_V2FACT), n + 1):
            _V2FACT.append(i - i.bit_count())
            _FACPAR.append(((i & (i >> 1)).bit_count() + (i >> 2).bit_count()) & 1)


def binom_mod4_counts(n: int) -> tuple[int, int]:
    """How many entries of row n of Pascal's triangle are 1 and 3 mod 4.

    Residues come from valuation and sign arithmetic on factorials, never
    from the binomial values themselves: C(n,k) is odd exactly when the
    factorial valuations n - ones(n) cancel, and then its mod-4 residue is
    the product of the three factorial signs.

    >>> binom_mod4_counts(3)
    (2, 2)
    >>> binom_mod4_counts(5)
    (4, 0)
    """
    if n < 0:
        raise ValueError(f"expected a non-negative integer, got {n}")
    _grow_tables(n)
    vt = _V2FACT
    pt = _FACPAR
    vn = vt[n]
    pn = pt[n]
    ones = threes = 0
    for k in range(n + 1):
        if vt[k] + vt[n - k] == vn:
            if pn ^ pt[k] ^ pt[n - k]:
                threes += 1
            else:
                ones += 1
    return ones, threes
