import random

import pytest
from hypothesis import given, strategies as st

from dimlab.beta_sets import (
    BetaSet,
    equivalent,
    first_column_hooks,
    normalize,
    parity_gap,
    remove_hook,
    shift,
    t_core,
    to_partition,
)
from dimlab.errors import HookRemovalError
from dimlab.partitions import Partition, dim_mod4, enumerate_partitions


def test_beta_set_basics():
    x = BetaSet((5, 2, 8, 10, 7))
    assert x.elements == (10, 8, 7, 5, 2)
    assert 7 in x and 6 not in x
    assert len(x) == 5
    assert str(x) == "{10,8,7,5,2}"
    assert str(BetaSet(())) == "{}"


def test_beta_set_rejects_bad_input():
    with pytest.raises(ValueError):
        BetaSet((3, 3))
    with pytest.raises(ValueError):
        BetaSet((-1, 2))


def test_first_column_hooks_examples():
    assert first_column_hooks(Partition((2, 2, 2))).elements == (4, 3, 2)
    assert first_column_hooks(Partition((6, 5, 5, 4, 2))).elements == (10, 8, 7, 5, 2)
    assert first_column_hooks(Partition(())).elements == ()


def test_to_partition_examples():
    assert to_partition(BetaSet((9, 6, 4, 2, 1))).parts == (5, 3, 2, 1, 1)
    assert to_partition(BetaSet((10, 8, 7, 5, 2))).parts == (6, 5, 5, 4, 2)
    assert to_partition(BetaSet(())) == Partition(())
    assert to_partition(BetaSet((3, 1, 0))).parts == (1,)


def test_round_trip_canonical():
    for n in range(0, 21):
        for p in enumerate_partitions(n):
            assert to_partition(first_column_hooks(p)) == p


@given(
    st.lists(st.integers(min_value=1, max_value=25), max_size=7),
    st.integers(min_value=0, max_value=12),
)
def test_shift_preserves_partition(parts, r):
    p = Partition(tuple(sorted(parts, reverse=True)))
    shifted = shift(first_column_hooks(p), r)
    assert to_partition(shifted) == p
    assert len(shifted) == len(p) + r


def test_normalize_and_equivalent():
    x = BetaSet((6, 3, 1, 0))
    assert normalize(x).elements == (4, 1)
    assert equivalent(x, BetaSet((4, 1)))
    assert equivalent(shift(x, 4), x)
    assert not equivalent(x, BetaSet((6, 3, 1)))


def test_remove_hook_chain():
    x = BetaSet((10, 8, 7, 5, 2))
    x = remove_hook(x, 8, 5)
    assert x.elements == (10, 7, 5, 3, 2)
    x = remove_hook(x, 5, 5)
    assert x.elements == (10, 7, 3, 2, 0)
    x = remove_hook(x, 10, 5)
    assert x.elements == (7, 5, 3, 2, 0)
    assert to_partition(x).parts == (3, 2, 1, 1)


def test_remove_hook_errors():
    x = BetaSet((4, 3, 2))
    with pytest.raises(HookRemovalError, match="not an element"):
        remove_hook(x, 5, 2)
    with pytest.raises(HookRemovalError, match="smaller"):
        remove_hook(x, 2, 3)
    with pytest.raises(HookRemovalError, match="already in"):
        remove_hook(x, 4, 1)
    with pytest.raises(ValueError):
        remove_hook(x, 4, 0)


def test_t_core_examples():
    assert t_core(Partition((6, 5, 5, 4, 2)), 5).parts == (3, 2, 1, 1)
    assert t_core(Partition((5, 5, 5, 4, 2)), 5).parts == (3, 1, 1, 1)
    assert t_core(Partition((3, 3, 3)), 2).parts == (1,)
    assert t_core(Partition((2, 2)), 2) == Partition(())
    assert t_core(Partition(()), 3) == Partition(())


def test_t_core_is_idempotent_and_size_consistent():
    for n in range(0, 16):
        for p in enumerate_partitions(n):
            for t in (2, 3, 4, 5):
                core = t_core(p, t)
                assert t_core(core, t) == core
                assert (n - core.size) % t == 0


def test_t_core_order_independent():
    # remove hooks in random legal orders; the end state never changes
    rng = random.Random(20240817)
    for _ in range(200):
        n = rng.randrange(1, 22)
        t = rng.randrange(2, 7)
        parts = []
        remaining = n
        while remaining:
            part = rng.randrange(1, remaining + 1)
            parts.append(part)
            remaining -= part
        p = Partition(tuple(sorted(parts, reverse=True)))
        want = t_core(p, t)
        x = set(first_column_hooks(p).elements)
        while True:
            moves = [h for h in x if h >= t and h - t not in x]
            if not moves:
                break
            h = rng.choice(moves)
            x.remove(h)
            x.add(h - t)
        assert to_partition(BetaSet(tuple(sorted(x, reverse=True)))) == want


def test_parity_gap_examples():
    assert parity_gap(BetaSet((13, 12, 8, 5, 3, 1, 0))) == -1
    assert parity_gap(BetaSet(())) == 0
    assert parity_gap(BetaSet((2, 0))) == 2


@given(st.lists(st.integers(min_value=0, max_value=40), max_size=8, unique=True))
def test_parity_gap_shift_rule(elements):
    x = BetaSet(tuple(elements))
    assert parity_gap(shift(x, 1)) == 1 - parity_gap(x)


def test_parity_gap_of_odd_partitions():
    # for odd-dimension partitions the gap of the hook set only depends
    # on the parity of n and of the set size
    for n in range(1, 19):
        for p in enumerate_partitions(n):
            if dim_mod4(p).v2 != 0:
                continue
            hooks = first_column_hooks(p)
            want = (1 - (-1) ** n) if len(hooks) % 2 == 0 else (-1) ** n
            assert parity_gap(hooks) == want, p
