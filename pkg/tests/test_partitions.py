from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from spinchars.partitions import (
    EMPTY_PVF,
    PVF,
    colorings,
    enumerate_partitions,
    enumerate_pvf,
    parity,
    strict_partitions_with_parity,
    z_order,
)


def test_enumeration_examples():
    assert enumerate_partitions(4, "strict") == ((4,), (3, 1))
    assert enumerate_partitions(4, "odd") == ((3, 1), (1, 1, 1, 1))
    assert enumerate_partitions(0, "all") == ((),)
    assert enumerate_partitions(4) == \
        ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    with pytest.raises(ValueError):
        enumerate_partitions(-1)
    with pytest.raises(ValueError):
        enumerate_partitions(3, "weird")


def test_strict_parity_filter():
    assert strict_partitions_with_parity(4, 1) == ((4,),)
    assert strict_partitions_with_parity(4, 0) == ((3, 1),)
    for n in range(9):
        both = strict_partitions_with_parity(n, 0) + \
            strict_partitions_with_parity(n, 1)
        assert sorted(both) == sorted(enumerate_partitions(n, "strict"))


def test_strict_odd_bijection_counts():
    for n in range(13):
        assert len(enumerate_partitions(n, "strict")) == \
            len(enumerate_partitions(n, "odd"))


def _brute_centralizer(parts):
    """Count permutations of S_n commuting with a fixed element of type parts."""
    n = sum(parts)
    perm = list(range(n))
    pos = 0
    for k in parts:
        for j in range(pos, pos + k - 1):
            perm[j] = j + 1
        perm[pos + k - 1] = pos
        pos += k
    count = 0
    for g in permutations(range(n)):
        if all(g[perm[i]] == perm[g[i]] for i in range(n)):
            count += 1
    return count


def test_z_order():
    assert z_order((1, 1, 1)) == 6
    assert z_order((2, 1)) == 2
    assert z_order((3,)) == 3
    for n in range(1, 6):
        for lam in enumerate_partitions(n):
            assert z_order(lam) == _brute_centralizer(lam)
    for n in range(1, 11):
        assert sum(Fraction(factorial(n), z_order(l))
                   for l in enumerate_partitions(n)) == factorial(n)


def test_parity():
    assert parity((2,)) == 1
    assert parity((3,)) == 0
    assert parity((3, 2)) == 1


def test_pvf_basics():
    rho = PVF({"c0": (3, 1), "c1": (2,)})
    assert rho.weight == 6 and rho.length == 3
    assert rho.underlying() == (3, 2, 1)
    assert rho.get("c1") == (2,)
    assert rho.get("missing") == ()
    assert EMPTY_PVF.underlying() == ()
    assert PVF({"a": (2,), "b": (2,)}).underlying() == (2, 2)
    with pytest.raises(ValueError):
        PVF({"a": (1, 2)})  # not sorted
    with pytest.raises(AttributeError):
        rho.items = ()


def test_pvf_enumeration():
    got = enumerate_pvf(2, ["c0", "c1"], "strict")
    assert [p.to_dict() for p in got] == \
        [{"c0": "2"}, {"c1": "2"}, {"c0": "1", "c1": "1"}]
    assert enumerate_pvf(0, ["c0"], "all") == [EMPTY_PVF]
    assert len(enumerate_pvf(1, ["c0", "c1"], "all")) == 2
    with pytest.raises(ValueError):
        enumerate_pvf(1, [], "all")


def test_colorings():
    assert len(colorings((2, 1), ["a", "b"])) == 4
    assert len(colorings((1, 1), ["a", "b"])) == 3
    assert colorings((3, 1), ["only"]) == [PVF({"only": (3, 1)})]
    # distinct parts: |colors|^l
    for lam in [(2, 1), (4, 3, 1)]:
        for k in (2, 3):
            cols = [f"c{i}" for i in range(k)]
            assert len(colorings(lam, cols)) == k ** len(lam)


def test_colorings_underlying_identity():
    for n in range(6):
        for lam in enumerate_partitions(n):
            for rho in colorings(lam, ["x", "y"]):
                assert rho.underlying() == lam


def test_single_color_bijection():
    for kind in ("all", "strict", "odd"):
        for n in range(8):
            lift = [p.underlying() for p in enumerate_pvf(n, ["c"], kind)]
            assert lift == list(enumerate_partitions(n, kind))


def test_pvf_union():
    a = PVF({"x": (3, 1)})
    b = PVF({"x": (2,), "y": (1,)})
    assert a.union(b) == PVF({"x": (3, 2, 1), "y": (1,)})
