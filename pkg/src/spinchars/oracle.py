"""Brute-force referee: explicit double covers of the wreath products.

Elements are stored in normal form (z-power, sorted a-word, color tuple,
permutation).  Multiplication evaluates the 2-cocycle by counting
inversions while sorting a-words:

    a_I a_J = z^{inv(I, J) + |I and J|} a_{I xor J}        (a_form, a_i^2 = z)
    a_I a_J = z^{inv(I, J)}             a_{I xor J}        (b_form, t_i^2 = 1)

with inv(I, J) the number of pairs (i, j) in I x J with i > j; permutations
act on a-indices and colors without sign.  Both presentations are kept
because the printed generator dictionary between them is inconsistent
(omega_0 squares to 1, a_1 squares to z); their class statistics are
compared empirically rather than assumed equal.

The oracle never produces character tables; it verifies them: class
membership, the spin condition chi(z x) = -chi(x), elementwise
orthogonality, split sets, and degrees.
"""

from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .exactnum import Cyclo
from .partitions import PVF
from .classdata import ClassLabel, enumerate_classes, is_split

__all__ = [
    "SIZE_CAP",
    "CoverElement",
    "Cover",
    "build_cover",
    "canonical_representative",
    "verify_table",
    "class_statistics",
]

SIZE_CAP = 20000


class CoverElement(NamedTuple):
    sign: int     # exponent of the central z, 0 or 1
    aword: tuple  # strictly increasing 0-based positions
    colors: tuple # indices into the Gamma element list
    perm: tuple   # 0-based permutation, perm[i] = sigma(i)


def _word_inversions(seq):
    count = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                count += 1
    return count


def _cross_inversions(left, right):
    return sum(1 for i in left for j in right if i > j)


class Cover:
    """The double cover of the wreath product at rank n over gamma."""

    def __init__(self, n, gamma, presentation="a_form"):
        if gamma.model is None:
            raise ValueError(
                f"group {gamma.name!r} has no element model; the oracle "
                "supports builtin groups only")
        if presentation not in ("a_form", "b_form"):
            raise ValueError(f"unknown presentation {presentation!r}")
        order = 2 * (2 * gamma.order) ** n * factorial(n)
        if order > SIZE_CAP:
            raise ValueError(
                f"cover order {order} exceeds the size cap {SIZE_CAP}")
        self.n = n
        self.gamma = gamma
        self.presentation = presentation
        self.expected_order = order
        model = gamma.model
        self._elems = model.elements
        self._index = {e: i for i, e in enumerate(model.elements)}
        self._mult = model.mult
        self._inv = model.inverse
        self._class_of = model.class_of
        self._eid = self._index[model.identity]
        self._elements = None
        self._classes = None

    # -- basic elements ------------------------------------------------------

    @property
    def identity(self):
        return CoverElement(0, (), (self._eid,) * self.n,
                            tuple(range(self.n)))

    @property
    def z(self):
        return self.identity._replace(sign=1)

    def generators(self):
        """z, a_1, the Coxeter transpositions, and Gamma at position 1."""
        out = [self.z, self.identity._replace(aword=(0,))]
        for i in range(self.n - 1):
            perm = list(range(self.n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            out.append(self.identity._replace(perm=tuple(perm)))
        for gi in range(len(self._elems)):
            if gi != self._eid:
                colors = [self._eid] * self.n
                colors[0] = gi
                out.append(self.identity._replace(colors=tuple(colors)))
        return out

    # -- group law ---------------------------------------------------------------

    def multiply(self, x, y):
        if len(x.perm) != self.n or len(y.perm) != self.n:
            raise ValueError("ambient rank mismatch")
        sigma = x.perm
        # sigma acts on the a-word of y, then the image is re-sorted
        moved = [sigma[i] for i in y.aword]
        sign = x.sign ^ y.sign ^ (_word_inversions(moved) & 1)
        moved_sorted = tuple(sorted(moved))
        # a_I * a_J with both words sorted
        sign ^= _cross_inversions(x.aword, moved_sorted) & 1
        inter = set(x.aword) & set(moved_sorted)
        if self.presentation == "a_form":
            sign ^= len(inter) & 1
        word = tuple(sorted((set(x.aword) | set(moved_sorted)) - inter))
        inv_sigma = [0] * self.n
        for i, v in enumerate(sigma):
            inv_sigma[v] = i
        colors = tuple(self._mult(x.colors[i], y.colors[inv_sigma[i]])
                       for i in range(self.n))
        perm = tuple(sigma[y.perm[i]] for i in range(self.n))
        return CoverElement(sign, word, colors, perm)

    def inverse(self, x):
        inv_sigma = [0] * self.n
        for i, v in enumerate(x.perm):
            inv_sigma[v] = i
        candidate = CoverElement(
            0,
            tuple(sorted(inv_sigma[i] for i in x.aword)),
            tuple(self._inv(x.colors[x.perm[i]]) for i in range(self.n)),
            tuple(inv_sigma))
        residue = self.multiply(x, candidate)
        return candidate._replace(sign=candidate.sign ^ residue.sign)

    # -- enumeration -----------------------------------------------------------

    def elements(self):
        """The full element list, by closure from the generators."""
        if self._elements is None:
            gens = self.generators()
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = self.multiply(x, g)
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
                frontier = nxt
            if len(seen) != self.expected_order:
                raise RuntimeError(
                    f"closure produced {len(seen)} elements, expected "
                    f"{self.expected_order}")
            self._elements = sorted(seen)
        return self._elements

    def type_of_element(self, x):
        """Class label (rho_plus, rho_minus) from signed cycle-products."""
        seen = [False] * self.n
        plus, minus = {}, {}
        aset = set(x.aword)
        for start in range(self.n):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = x.perm[start]
            while j != start:
                seen[j] = True
                cycle.append(j)
                j = x.perm[j]
            acc = self._eid
            for j in cycle:
                acc = self._mult(x.colors[j], acc)
            color = self._class_of(self._elems[acc])
            negative = len(aset & set(cycle)) % 2 == 1
            bucket = minus if negative else plus
            bucket.setdefault(color, []).append(len(cycle))
        mk = lambda d: PVF({c: tuple(sorted(p, reverse=True))
                            for c, p in d.items()})
        return ClassLabel(mk(plus), mk(minus))

    def conjugacy_classes(self):
        """Partition into classes with size, type, and split status."""
        if self._classes is not None:
            return self._classes
        elements = self.elements()
        gens = self.generators()
        gen_pairs = [(g, self.inverse(g)) for g in gens]
        assigned = {}
        classes = []
        for x in elements:
            if x in assigned:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                nxt = []
                for y in frontier:
                    for g, ginv in gen_pairs:
                        c = self.multiply(self.multiply(g, y), ginv)
                        if c not in orbit:
                            orbit.add(c)
                            nxt.append(c)
                frontier = nxt
            idx = len(classes)
            for y in orbit:
                assigned[y] = idx
            rep = min(orbit)
            ctype = self.type_of_element(rep)
            for y in orbit:
                if self.type_of_element(y) != ctype:
                    raise RuntimeError(
                        f"type is not constant on a class: {rep} vs {y}")
            zrep = self.multiply(self.z, rep)
            classes.append({
                "members": frozenset(orbit),
                "size": len(orbit),
                "type": ctype,
                "split": zrep not in orbit,
            })
        # D- = z D+ setwise for split classes
        for cls in classes:
            if cls["split"]:
                mirror = frozenset(self.multiply(self.z, y)
                                   for y in cls["members"])
                partner = classes[assigned[next(iter(mirror))]]
                if mirror != partner["members"]:
                    raise RuntimeError("z-translate of a split class is not "
                                       "a class")
        self._classes = classes
        self._assigned = assigned
        return classes

    def class_of(self, x):
        self.conjugacy_classes()
        return self._assigned[x]

    def empirical_split_types(self):
        return sorted(
            {cls["type"] for cls in self.conjugacy_classes() if cls["split"]},
            key=str)

    def predicted_split_types(self):
        out = []
        for label in enumerate_classes(self.n, self.gamma):
            if is_split(label) is not None:
                out.append(label)
        return sorted(out, key=str)


def build_cover(n, gamma, presentation="a_form"):
    """Build and fully enumerate the cover; checks the order formula."""
    cover = Cover(n, gamma, presentation)
    cover.elements()
    return cover


def class_statistics(cover):
    """Hashable class summary for comparing presentations."""
    stats = [(cls["size"], str(cls["type"]), cls["split"])
             for cls in cover.conjugacy_classes()]
    return tuple(sorted(stats))


def canonical_representative(cover, label):
    """The canonical element of a class: cycles in increasing-support order,
    a-generators at the minimal admissible index, no global sign."""
    cycles = []
    for color, parts in label.positive.items:
        for k in parts:
            cycles.append((color, k, 0))
    for color, parts in label.negative.items:
        for k in parts:
            cycles.append((color, k, 1))
    pos = 0
    aword = []
    colors = [cover._eid] * cover.n
    perm = list(range(cover.n))
    for color, k, negative in cycles:
        support = list(range(pos, pos + k))
        for j in support[:-1]:
            perm[j] = j + 1
        perm[support[-1]] = pos
        rep = next(e for e in cover._elems
                   if cover._class_of(e) == color)
        colors[pos] = cover._index[rep]
        if negative:
            aword.append(pos)
        pos += k
    if pos != cover.n:
        raise ValueError(f"label weight {pos} != rank {cover.n}")
    return CoverElement(0, tuple(aword), tuple(colors), tuple(perm))


def _table_column_label(table, col):
    """ClassLabel for a table column, lifting bare partitions to PVFs."""
    if isinstance(col.pvf, PVF):
        return col.label()
    pvf = PVF({table.group.identity_class if table.group else "e": col.pvf})
    from .partitions import EMPTY_PVF
    if col.family == "even":
        return ClassLabel(pvf, EMPTY_PVF)
    return ClassLabel(EMPTY_PVF, pvf)


def verify_table(table, cover):
    """Elementwise verification report: list of {check, passed, witness}."""
    if table.family == "spin_symmetric":
        raise ValueError("the oracle covers the hyperoctahedral families only")
    if table.family == "spin_wreath":
        if table.group.name != cover.gamma.name:
            raise ValueError("table and cover are over different groups")
    elif cover.gamma.name != "trivial":
        raise ValueError("hyperoctahedral tables verify against the trivial-"
                         "group cover")
    if table.n != cover.n:
        raise ValueError("table and cover have different ranks")

    report = []
    classes = cover.conjugacy_classes()
    by_type = {}
    for idx, cls in enumerate(classes):
        by_type.setdefault(cls["type"], []).append(idx)

    # (c) empirical split set vs table columns
    empirical = {str(t) for t in cover.empirical_split_types()}
    predicted = {str(_table_column_label(table, col)) for col in table.columns}
    report.append({
        "check": "split sets match",
        "passed": empirical == predicted,
        "witness": f"empirical {sorted(empirical)} vs columns "
                   f"{sorted(predicted)}" if empirical != predicted else "",
    })

    # locate D+ / D- for each column via the canonical representative
    plus_class = {}
    ok = True
    witness = ""
    for col in table.columns:
        label = _table_column_label(table, col)
        rep = canonical_representative(cover, label)
        idx = cover.class_of(rep)
        zidx = cover.class_of(cover.multiply(cover.z, rep))
        if idx == zidx:
            ok = False
            witness = f"column {label} is fused in the cover"
            break
        plus_class[col] = (idx, zidx)
    report.append({"check": "columns split with D- = z D+",
                   "passed": ok, "witness": witness})
    if not ok:
        return report

    # per-element value maps
    elements = cover.elements()
    maps = []
    for row in table.rows:
        values = {}
        for col in table.columns:
            v = row.values[col]
            pidx, midx = plus_class[col]
            values[pidx] = v
            values[midx] = -v
        vector = [values.get(cover.class_of(x), Cyclo.zero())
                  for x in elements]
        maps.append(vector)

    # (a) spin condition chi(z x) = -chi(x) on every element
    index_of = {x: i for i, x in enumerate(elements)}
    ok = True
    witness = ""
    for ri, row in enumerate(table.rows):
        vec = maps[ri]
        for i, x in enumerate(elements):
            zi = index_of[cover.multiply(cover.z, x)]
            if not vec[zi] == -vec[i]:
                ok = False
                witness = f"row {row.label()} at element {x}"
                break
        if not ok:
            break
    report.append({"check": "chi(z x) = -chi(x)", "passed": ok,
                   "witness": witness})

    # (b) elementwise orthogonality
    ok = True
    witness = ""
    order = cover.expected_order
    for ri in range(len(table.rows)):
        for rj in range(ri, len(table.rows)):
            total = Cyclo.zero()
            for i in range(len(elements)):
                vi, vj = maps[ri][i], maps[rj][i]
                if vi.is_zero() or vj.is_zero():
                    continue
                total = total + vi * vj.conj()
            expect = order if ri == rj else 0
            if total != expect:
                ok = False
                witness = (f"sum chi_{table.rows[ri].label()} conj "
                           f"chi_{table.rows[rj].label()} = {total}, "
                           f"expected {expect}")
                break
        if not ok:
            break
    report.append({"check": "elementwise orthogonality", "passed": ok,
                   "witness": witness})

    # (d) degree = value at the identity
    ok = True
    witness = ""
    for ri, row in enumerate(table.rows):
        v = maps[ri][index_of[cover.identity]]
        if v != row.degree:
            ok = False
            witness = f"row {row.label()} identity value {v} != {row.degree}"
            break
    report.append({"check": "degrees match the identity column",
                   "passed": ok, "witness": witness})
    return report
