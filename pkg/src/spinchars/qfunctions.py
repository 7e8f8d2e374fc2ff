"""Schur Q-functions in the odd power-sum basis.

Q-functions live in the subring of symmetric functions generated by the odd
power sums p_1, p_3, p_5, ...  A degree-n element is stored as a map from
odd-part partitions of n to rational coefficients.

Three routes to Q_nu are implemented and cross-checked by the tests:

  * one row:   Q_n = degree-n coefficient of exp(2 sum_{k odd} p_k t^k / k),
               computed by the derivative recurrence n Q_n = 2 sum p_k Q_{n-k};
  * two rows:  Q_(a,b) = Q_a Q_b + 2 sum_{i=1..b} (-1)^i Q_{a+i} Q_{b-i};
  * general:   Pfaffian of the matrix [Q_(nu_i, nu_j)] over the coefficient
               ring, with a zero part appended when l(nu) is odd.

Inverting the expansion of Q_nu over p_lambda yields the two families of
supercharacter values handled by char_value.
"""

from fractions import Fraction

from .partitions import (
    enumerate_partitions,
    parity,
    z_order,
)

__all__ = [
    "PowerSumVector",
    "q_one_row",
    "q_two_row",
    "q_general",
    "pfaffian",
    "char_value",
    "power_sum_inner",
]


class PowerSumVector:
    """A homogeneous rational combination of p_lambda, lambda with odd parts."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, dict):
            coeffs = coeffs.items()
        data = {}
        for parts, c in coeffs:
            c = Fraction(c)
            if not c:
                continue
            parts = tuple(parts)
            if any(p % 2 == 0 or p <= 0 for p in parts):
                raise ValueError(f"power-sum index must have odd parts: {parts}")
            data[parts] = data.get(parts, Fraction(0)) + c
        data = {k: v for k, v in data.items() if v}
        degrees = {sum(k) for k in data}
        if len(degrees) > 1:
            raise ValueError(f"mixed degrees in power-sum vector: {sorted(degrees)}")
        object.__setattr__(self, "coeffs", data)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSumVector is immutable")

    @property
    def degree(self):
        for k in self.coeffs:
            return sum(k)
        return None

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, parts):
        return self.coeffs.get(tuple(parts), Fraction(0))

    def __add__(self, other):
        if not isinstance(other, PowerSumVector):
            return NotImplemented
        if not self.is_zero() and not other.is_zero() \
                and self.degree != other.degree:
            raise ValueError("cannot add power-sum vectors of different degree")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return PowerSumVector(out)

    def __neg__(self):
        return PowerSumVector({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, PowerSumVector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return PowerSumVector({k: v * q for k, v in self.coeffs.items()})
        if not isinstance(other, PowerSumVector):
            return NotImplemented
        out = {}
        for ka, va in self.coeffs.items():
            for kb, vb in other.coeffs.items():
                k = tuple(sorted(ka + kb, reverse=True))
                out[k] = out.get(k, Fraction(0)) + va * vb
        return PowerSumVector(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PowerSumVector) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def terms(self):
        """(partition, coefficient) pairs, deterministic display order:
        many short parts first, so p[1,1,1] precedes p[3]."""
        return sorted(self.coeffs.items(), key=lambda kv: kv[0])

    def __str__(self):
        if self.is_zero():
            return "0"
        chunks = []
        for parts, c in self.terms():
            mono = "p[" + ",".join(str(x) for x in parts) + "]" if parts else "1"
            chunks.append(f"{c}*{mono}")
        out = chunks[0]
        for chunk in chunks[1:]:
            if chunk.startswith("-"):
                out += " - " + chunk[1:]
            else:
                out += " + " + chunk
        return out

    def __repr__(self):
        return f"PowerSumVector({self})"


_PSV_ZERO = PowerSumVector()
_PSV_ONE = PowerSumVector({(): Fraction(1)})

_one_row_cache = {}
_two_row_cache = {}


def q_one_row(n):
    """Q_n, the one-row Q-function; Q_0 = 1."""
    if n < 0:
        raise ValueError("row length must be non-negative")
    if n not in _one_row_cache:
        if n == 0:
            _one_row_cache[n] = _PSV_ONE
        else:
            total = _PSV_ZERO
            for k in range(1, n + 1, 2):
                pk = PowerSumVector({(k,): Fraction(1)})
                total = total + pk * q_one_row(n - k)
            _one_row_cache[n] = total * Fraction(2, n)
    return _one_row_cache[n]


def q_two_row(a, b):
    """Q_(a,b) for a > b >= 0 via the two-row recursion."""
    if not a > b >= 0:
        raise ValueError(f"two-row shape needs a > b >= 0, got ({a}, {b})")
    key = (a, b)
    if key not in _two_row_cache:
        total = q_one_row(a) * q_one_row(b)
        for i in range(1, b + 1):
            term = q_one_row(a + i) * q_one_row(b - i) * 2
            total = total + (term if i % 2 == 0 else -term)
        _two_row_cache[key] = total
    return _two_row_cache[key]


def pfaffian(matrix, zero=None):
    """Pfaffian of an even-dimensional antisymmetric matrix.

    Entries may live in any commutative ring with +, unary -, * and ==.
    """
    m = len(matrix)
    if m % 2 != 0:
        raise ValueError("pfaffian needs even dimension")
    if any(len(row) != m for row in matrix):
        raise ValueError("matrix must be square")
    if zero is None:
        zero = matrix[0][0] if m else 0
    for i in range(m):
        if not matrix[i][i] == zero:
            raise ValueError("matrix has a nonzero diagonal entry")
        for j in range(i + 1, m):
            if not matrix[i][j] == -matrix[j][i]:
                raise ValueError("matrix is not antisymmetric")
    return _pf(matrix, zero)


def _pf(matrix, zero):
    m = len(matrix)
    if m == 0:
        raise ValueError("pfaffian of the empty matrix is 1; not needed here")
    if m == 2:
        return matrix[0][1]
    total = None
    for j in range(1, m):
        entry = matrix[0][j]
        if entry == zero:
            continue
        keep = [r for r in range(1, m) if r != j]
        sub = [[matrix[r][c] for c in keep] for r in keep]
        term = entry * _pf(sub, zero)
        if j % 2 == 0:
            term = -term
        total = term if total is None else total + term
    return zero if total is None else total


def q_general(nu):
    """Q_nu for a strict partition nu, via the Pfaffian composition."""
    nu = tuple(nu)
    if any(nu[i] <= nu[i + 1] for i in range(len(nu) - 1)) or \
            any(p <= 0 for p in nu):
        raise ValueError(f"strict partition required, got {nu}")
    if len(nu) == 0:
        return _PSV_ONE
    if len(nu) == 1:
        return q_one_row(nu[0])
    if len(nu) == 2:
        return q_two_row(nu[0], nu[1])
    rows = list(nu)
    if len(rows) % 2 == 1:
        rows.append(0)
    m = len(rows)
    mat = [[_PSV_ZERO for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            entry = q_two_row(rows[i], rows[j]) if rows[i] > rows[j] \
                else q_one_row(rows[i])
            mat[i][j] = entry
            mat[j][i] = -entry
    return pfaffian(mat, zero=_PSV_ZERO)


def char_value(nu, lam, algebra):
    """Supercharacter value from the Q-expansion.

    algebra "A": invert Q_nu = sum 2^{(l(nu)+l(lam)+p(nu))/2} z^-1 zeta p_lam;
    algebra "B": invert Q_nu = sum 2^{[l(nu)/2]} z^-1 xi p_lam.
    Returns an exact integer (as a Fraction-checked int).
    """
    nu, lam = tuple(nu), tuple(lam)
    if sum(nu) != sum(lam):
        raise ValueError(f"weight mismatch: |{nu}| != |{lam}|")
    if any(p % 2 == 0 for p in lam):
        raise ValueError(f"class partition must have odd parts: {lam}")
    coeff = q_general(nu).coefficient(lam)
    if algebra == "A":
        exponent = (len(nu) + len(lam) + parity(nu)) // 2
        if (len(nu) + len(lam) + parity(nu)) % 2 != 0:
            raise ArithmeticError("non-integral 2-exponent in the A-expansion")
    elif algebra == "B":
        exponent = len(nu) // 2
    else:
        raise ValueError(f"algebra must be 'A' or 'B', got {algebra!r}")
    value = coeff * z_order(lam) / Fraction(2 ** exponent)
    if value.denominator != 1:
        raise ArithmeticError(
            f"non-integral character value for nu={nu}, lam={lam}: {value}")
    return int(value)


def power_sum_inner(u, v):
    """Bilinear form with <p_lam, p_mu> = delta * z_lam * 2^{-l(lam)}."""
    total = Fraction(0)
    for parts, c in u.coeffs.items():
        d = v.coeffs.get(parts)
        if d:
            total += c * d * z_order(parts) / Fraction(2 ** len(parts))
    return total
