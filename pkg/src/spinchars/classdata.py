"""Finite group data and conjugacy classes of hyperoctahedral wreath products.

A GroupData carries the class/character data of a finite group Gamma: class
labels with sizes and inverse classes, and an exact character table whose
row and column orthogonality is verified on load.

Conjugacy classes of the wreath product H Gamma_n are labeled by pairs
(rho_plus, rho_minus) of partition-valued functions on the classes of Gamma
with total weight n.  A class is even or odd according to the parity of the
total number of negative cycles, i.e. l(rho_minus) mod 2.

Split classes of the double cover:

  * even family: rho_minus empty and every part of rho_plus odd;
  * odd family:  rho_plus empty, rho_minus strict per color, l(rho_minus) odd.

The odd-family predicate deliberately uses "l(rho) odd" rather than the
(n - l) parity filter: the two coincide for even n, and the explicit cover
(see the oracle module) shows that at n = 3 the label (2,1) fuses while (3)
splits, which only the l-odd form predicts.
"""

import json
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .exactnum import Cyclo, parse_cyclo, root_of_unity
from .partitions import PVF, enumerate_pvf, z_order

__all__ = [
    "GroupDataError",
    "GroupClass",
    "GroupData",
    "GroupModel",
    "builtin_group",
    "builtin_ids",
    "load_group",
    "group_from_spec",
    "ClassLabel",
    "SplitClass",
    "enumerate_classes",
    "is_split",
    "split_classes",
    "split_centralizer_order",
    "wreath_z",
    "inner_product",
    "count_spin_rows",
    "counting_identity_holds",
]


class GroupDataError(ValueError):
    """Raised when group data fails validation; names the failing relation."""


class GroupClass(NamedTuple):
    label: str
    size: int
    inverse: str


class GroupModel(NamedTuple):
    """Explicit multiplication model backing the brute-force oracle."""
    elements: tuple
    identity: object
    mult: object      # callable (a, b) -> element
    inverse: object   # callable a -> element
    class_of: object  # callable a -> class label


class GroupData:
    """Validated class and character data of a finite group."""

    def __init__(self, name, classes, characters, order, model=None):
        self.name = name
        self.classes = [GroupClass(*c) for c in classes]
        self.characters = list(characters)  # (label, [Cyclo values])
        self.order = order
        self.model = model
        self._char_index = {lab: i for i, (lab, _) in enumerate(self.characters)}
        self._class_index = {c.label: i for i, c in enumerate(self.classes)}
        self._validate()

    # -- accessors ---------------------------------------------------------

    @property
    def class_labels(self):
        return [c.label for c in self.classes]

    @property
    def char_labels(self):
        return [lab for lab, _ in self.characters]

    def class_size(self, label):
        return self.classes[self._class_index[label]].size

    def centralizer(self, label):
        return self.order // self.class_size(label)

    def char_value(self, char_label, class_label):
        row = self.characters[self._char_index[char_label]][1]
        return row[self._class_index[class_label]]

    @property
    def identity_class(self):
        return self.classes[0].label

    # -- validation ----------------------------------------------------------

    def _validate(self):
        if len(self.classes) != len(self.characters):
            raise GroupDataError(
                f"{self.name}: {len(self.classes)} classes vs "
                f"{len(self.characters)} characters")
        total = sum(c.size for c in self.classes)
        if total != self.order:
            raise GroupDataError(
                f"{self.name}: class sizes sum to {total}, order is {self.order}")
        labels = {c.label for c in self.classes}
        for c in self.classes:
            if c.inverse not in labels:
                raise GroupDataError(
                    f"{self.name}: inverse class {c.inverse!r} of {c.label!r} unknown")
            if self.order % c.size != 0:
                raise GroupDataError(
                    f"{self.name}: centralizer of {c.label!r} is not integral")
        first = self.classes[0]
        if first.size != 1 or first.inverse != first.label:
            raise GroupDataError(
                f"{self.name}: first class must be the identity class")
        for lab, values in self.characters:
            if len(values) != len(self.classes):
                raise GroupDataError(
                    f"{self.name}: character {lab!r} has wrong width")
        # row orthogonality: sum_c |c| chi_i(c) conj(chi_j(c)) = |G| delta_ij
        for i, (li, vi) in enumerate(self.characters):
            for j, (lj, vj) in enumerate(self.characters):
                total = Cyclo.zero()
                for k, c in enumerate(self.classes):
                    total = total + vi[k] * vj[k].conj() * c.size
                expect = self.order if i == j else 0
                if total != expect:
                    raise GroupDataError(
                        f"{self.name}: row orthogonality fails for "
                        f"({li!r}, {lj!r}): {total} != {expect}")
        # column orthogonality: sum_i chi_i(c) conj(chi_i(c')) = zeta_c delta
        for a, ca in enumerate(self.classes):
            for b, cb in enumerate(self.classes):
                total = Cyclo.zero()
                for _, values in self.characters:
                    total = total + values[a] * values[b].conj()
                expect = self.centralizer(ca.label) if a == b else 0
                if total != expect:
                    raise GroupDataError(
                        f"{self.name}: column orthogonality fails for "
                        f"({ca.label!r}, {cb.label!r}): {total} != {expect}")

    def __repr__(self):
        return f"GroupData({self.name!r}, order={self.order})"


# -- built-in groups ----------------------------------------------------------


def builtin_ids():
    return ["trivial"] + [f"cyclic{k}" for k in range(2, 13)] + ["sym3"]


@lru_cache(maxsize=None)
def builtin_group(ident):
    if ident == "trivial":
        model = GroupModel((0,), 0, lambda a, b: 0, lambda a: 0, lambda a: "e")
        return GroupData("trivial", [("e", 1, "e")],
                         [("x0", [Cyclo.one()])], 1, model=model)
    if ident.startswith("cyclic"):
        k = int(ident[len("cyclic"):])
        if not 1 <= k <= 12:
            raise GroupDataError(f"cyclic order out of range: {k}")
        classes = [(f"c{j}", 1, f"c{(k - j) % k}") for j in range(k)]
        chars = []
        for m in range(k):
            chars.append((f"x{m}",
                          [root_of_unity(k, m * j) for j in range(k)]))
        model = GroupModel(tuple(range(k)), 0,
                           lambda a, b, k=k: (a + b) % k,
                           lambda a, k=k: (-a) % k,
                           lambda a: f"c{a}")
        return GroupData(f"cyclic{k}", classes, chars, k, model=model)
    if ident == "sym3":
        perms = ((0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0),
                 (1, 2, 0), (2, 0, 1))

        def mult(a, b):
            return tuple(a[b[i]] for i in range(3))

        def inverse(a):
            out = [0, 0, 0]
            for i, ai in enumerate(a):
                out[ai] = i
            return tuple(out)

        def class_of(a):
            fixed = sum(1 for i in range(3) if a[i] == i)
            if fixed == 3:
                return "e"
            if fixed == 1:
                return "t"
            return "r"

        one = Cyclo.one()
        classes = [("e", 1, "e"), ("t", 3, "t"), ("r", 2, "r")]
        chars = [
            ("triv", [one, one, one]),
            ("sgn", [one, -one, one]),
            ("std", [one * 2, Cyclo.zero(), -one]),
        ]
        model = GroupModel(perms, (0, 1, 2), mult, inverse, class_of)
        return GroupData("sym3", classes, chars, 6, model=model)
    raise GroupDataError(f"unknown builtin group {ident!r}")


def load_group(source):
    """Load a group file: JSON with name/order/classes/characters fields.

    Character values use the exactnum text syntax.  The identity class must
    come first.  Orthogonality is checked exactly; failures name the
    violated relation.
    """
    if isinstance(source, dict):
        doc = source
    else:
        text = source
        if "\n" not in str(source) and not str(source).lstrip().startswith("{"):
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GroupDataError(f"group file does not parse: {exc}") from exc
    try:
        name = doc["name"]
        order = int(doc["order"])
        classes = [(c["label"], int(c["size"]), c["inverse"])
                   for c in doc["classes"]]
        characters = [(ch["label"], [parse_cyclo(v) for v in ch["values"]])
                      for ch in doc["characters"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GroupDataError(f"group file is missing fields: {exc}") from exc
    return GroupData(name, classes, characters, order)


def group_from_spec(spec):
    """Resolve "builtin:<id>" or a path to a group file."""
    if spec.startswith("builtin:"):
        return builtin_group(spec[len("builtin:"):])
    return load_group(spec)


# -- wreath product class combinatorics ----------------------------------------


class ClassLabel(NamedTuple):
    """Type (rho_plus, rho_minus) of an element of H Gamma_n."""
    positive: PVF
    negative: PVF

    @property
    def weight(self):
        return self.positive.weight + self.negative.weight

    def is_even(self):
        return self.negative.length % 2 == 0

    def __str__(self):
        return f"({self.positive!r}, {self.negative!r})"


class SplitClass(NamedTuple):
    """A split class, named by its single nonempty side; columns are D+."""
    pvf: PVF
    family: str  # "even" | "odd"

    def label(self):
        from .partitions import EMPTY_PVF
        if self.family == "even":
            return ClassLabel(self.pvf, EMPTY_PVF)
        return ClassLabel(EMPTY_PVF, self.pvf)

    def parity(self):
        return 0 if self.family == "even" else 1


def enumerate_classes(n, gamma):
    """All conjugacy class labels of H Gamma_n, deterministic order."""
    if n < 0:
        raise ValueError("rank must be non-negative")
    colors = gamma.class_labels
    out = []
    for a in range(n, -1, -1):
        pos = enumerate_pvf(a, colors, "all")
        neg = enumerate_pvf(n - a, colors, "all")
        for rp in pos:
            for rm in neg:
                out.append(ClassLabel(rp, rm))
    return out


def is_split(label, n=None):
    """Split family of a class label, or None if the class fuses."""
    rp, rm = label.positive, label.negative
    if n is not None and label.weight != n:
        raise ValueError(f"label weight {label.weight} != rank {n}")
    if not rm and rp.all_parts_odd():
        return "even"
    if not rp and rm.is_strict() and rm.length % 2 == 1:
        return "odd"
    return None


def split_classes(n, gamma):
    """Split classes of rank n: even family first, then odd, pvf order."""
    colors = gamma.class_labels
    even = [SplitClass(rho, "even") for rho in enumerate_pvf(n, colors, "odd")]
    odd = [SplitClass(rho, "odd")
           for rho in enumerate_pvf(n, colors, "strict")
           if rho.length % 2 == 1]
    return even + odd


def split_centralizer_order(rho, gamma):
    """Centralizer order 2^{1+l(rho)} Z_rho in the double cover."""
    if rho.weight == 0:
        raise ValueError("centralizer formula needs nonzero weight")
    return 2 ** (1 + rho.length) * wreath_z(rho, gamma)


def wreath_z(rho, gamma):
    """Z_rho = prod_c z_{rho(c)} zeta_c^{l(rho(c))}, the base centralizer factor."""
    z = 1
    for color, parts in rho.items:
        z *= z_order(parts) * gamma.centralizer(color) ** len(parts)
    return z


def inner_product(f, g, n, gamma):
    """Spin class function inner product over the split classes of rank n.

    f and g map SplitClass -> Cyclo on every split class; the form is
    sum_rho (2^{l(rho)} Z_rho)^{-1} f(D+) conj(g(D+)).
    """
    total = Cyclo.zero()
    for sc in split_classes(n, gamma):
        try:
            fv, gv = f[sc], g[sc]
        except KeyError as exc:
            raise ValueError(f"value undefined on split class {sc}") from exc
        if fv.is_zero() or gv.is_zero():
            continue
        measure = Fraction(1, 2 ** sc.pvf.length * wreath_z(sc.pvf, gamma))
        total = total + fv * gv.conj() * measure
    return total


def count_spin_rows(n, gamma):
    """Number of spin character rows, associate pairs counted twice."""
    strict = enumerate_pvf(n, gamma.char_labels, "strict")
    pairs = sum(1 for lam in strict if lam.length % 2 == 1)
    return len(strict) + pairs


def counting_identity_holds(n, gamma):
    """#split classes == #spin rows (pairs twice); the referee invariant."""
    return len(split_classes(n, gamma)) == count_spin_rows(n, gamma)
