"""Partitions and partition-valued functions.

Partitions are plain tuples of positive integers sorted non-increasingly.
A partition-valued function (PVF) assigns a nonempty partition to finitely
many colors drawn from a declared color set; colors are opaque strings.

All enumerations are deterministic: partitions come in reverse-lexicographic
order, partition-valued functions by underlying partition first and then by
the coloring of the parts.
"""

from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial

__all__ = [
    "enumerate_partitions",
    "strict_partitions_with_parity",
    "weight",
    "length",
    "z_order",
    "parity",
    "is_partition",
    "is_strict",
    "all_parts_odd",
    "PVF",
    "EMPTY_PVF",
    "enumerate_pvf",
    "colorings",
    "underlying",
]


def is_partition(parts):
    return all(isinstance(p, int) and p > 0 for p in parts) and \
        all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def is_strict(parts):
    return all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))


def all_parts_odd(parts):
    return all(p % 2 == 1 for p in parts)


def weight(parts):
    return sum(parts)


def length(parts):
    return len(parts)


def _gen_parts(n, maxpart, strict, odd):
    if n == 0:
        yield ()
        return
    first = min(n, maxpart)
    for p in range(first, 0, -1):
        if odd and p % 2 == 0:
            continue
        nxt = p - 1 if strict else p
        for rest in _gen_parts(n - p, nxt, strict, odd):
            yield (p,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n, kind="all"):
    """All partitions of n in reverse-lexicographic order.

    kind: "all", "strict" (distinct parts) or "odd" (odd parts only).
    """
    if n < 0:
        raise ValueError("weight must be non-negative")
    if kind not in ("all", "strict", "odd"):
        raise ValueError(f"unknown partition kind {kind!r}")
    return tuple(_gen_parts(n, n, kind == "strict", kind == "odd"))


def strict_partitions_with_parity(n, i):
    """Strict partitions nu of n with (n - l(nu)) = i (mod 2)."""
    if i not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    return tuple(nu for nu in enumerate_partitions(n, "strict")
                 if (n - len(nu)) % 2 == i)


def multiplicities(parts):
    out = {}
    for p in parts:
        out[p] = out.get(p, 0) + 1
    return out


def z_order(parts):
    """Centralizer order z_lambda = prod_i i^{m_i} m_i! in S_{|lambda|}."""
    z = 1
    for i, m in multiplicities(parts).items():
        z *= i ** m * factorial(m)
    return z


def parity(parts):
    """p(nu) = (|nu| - l(nu)) mod 2."""
    return (sum(parts) - len(parts)) % 2


def _color_key(color):
    return (len(color), color)


class PVF:
    """A partition-valued function on a finite color set.

    Stored canonically as a tuple of (color, parts) pairs with empty
    partitions omitted; immutable and hashable so it can index table rows
    and columns.
    """

    __slots__ = ("items",)

    def __init__(self, assignment=()):
        if isinstance(assignment, dict):
            assignment = assignment.items()
        items = []
        for color, parts in assignment:
            parts = tuple(parts)
            if not parts:
                continue
            if not is_partition(parts):
                raise ValueError(f"not a partition for color {color!r}: {parts}")
            items.append((str(color), parts))
        items.sort(key=lambda cp: _color_key(cp[0]))
        if len({c for c, _ in items}) != len(items):
            raise ValueError("repeated color in partition-valued function")
        object.__setattr__(self, "items", tuple(items))

    def __setattr__(self, name, value):
        raise AttributeError("PVF objects are immutable")

    @property
    def weight(self):
        return sum(sum(p) for _, p in self.items)

    @property
    def length(self):
        return sum(len(p) for _, p in self.items)

    @property
    def colors(self):
        return tuple(c for c, _ in self.items)

    def get(self, color):
        for c, p in self.items:
            if c == color:
                return p
        return ()

    def underlying(self):
        """Forget the colors: all parts, sorted non-increasingly."""
        parts = [p for _, ps in self.items for p in ps]
        parts.sort(reverse=True)
        return tuple(parts)

    def is_strict(self):
        return all(is_strict(p) for _, p in self.items)

    def all_parts_odd(self):
        return all(all_parts_odd(p) for _, p in self.items)

    def union(self, other):
        """Colorwise multiset union of parts."""
        merged = {c: list(p) for c, p in self.items}
        for c, p in other.items:
            merged.setdefault(c, []).extend(p)
        return PVF({c: tuple(sorted(p, reverse=True)) for c, p in merged.items()})

    def to_dict(self):
        return {c: ",".join(str(x) for x in p) for c, p in self.items}

    def __eq__(self, other):
        return isinstance(other, PVF) and self.items == other.items

    def __hash__(self):
        return hash(self.items)

    def __bool__(self):
        return bool(self.items)

    def __repr__(self):
        if not self.items:
            return "PVF{}"
        body = ", ".join(f"{c}:({','.join(str(x) for x in p)})"
                         for c, p in self.items)
        return "PVF{" + body + "}"


EMPTY_PVF = PVF()


def underlying(rho):
    return rho.underlying()


def colorings(parts, colors):
    """All PVFs whose underlying partition is `parts`, colors from `colors`.

    Equal parts get an unordered multiset of colors, so the count is
    |colors|^{l} exactly when all parts are distinct.
    """
    colors = list(colors)
    if not colors:
        raise ValueError("empty color set")
    groups = []
    for p in parts:
        if groups and groups[-1][0] == p:
            groups[-1][1] += 1
        else:
            groups.append([p, 1])

    out = [dict()]
    for value, mult in groups:
        nxt = []
        for chosen in combinations_with_replacement(range(len(colors)), mult):
            for partial in out:
                d = {c: list(p) for c, p in partial.items()}
                for ci in chosen:
                    d.setdefault(colors[ci], []).append(value)
                nxt.append(d)
        out = nxt
    return [PVF({c: tuple(sorted(p, reverse=True)) for c, p in d.items()})
            for d in out]


def enumerate_pvf(n, colors, kind="all"):
    """All PVFs of total weight n on `colors`, per-color partitions of `kind`.

    kind "strict" means strict per color (the underlying partition may have
    repeats across colors); "odd" means every part odd.
    """
    if n < 0:
        raise ValueError("weight must be non-negative")
    colors = list(colors)
    if not colors:
        raise ValueError("empty color set")
    base = "odd" if kind == "odd" else "all"
    out = []
    for lam in enumerate_partitions(n, base):
        for rho in colorings(lam, colors):
            if kind == "strict" and not rho.is_strict():
                continue
            out.append(rho)
    return out
