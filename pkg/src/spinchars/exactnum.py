"""Exact arithmetic in cyclotomic fields.

Every character value produced by this package lives in some Q(zeta_N).  A
value is stored as a sparse map {exponent: Fraction} over a conductor N,
kept in canonical form: exponents reduced mod N, then the whole polynomial
reduced modulo the N-th cyclotomic polynomial, zero coefficients dropped.
Canonical forms make equality and zero tests cheap, which matters because
orthogonality checks compare thousands of sums against 0 and 1.

Rationals are plain fractions.Fraction; square roots of positive rationals
are built from quadratic Gauss sums so that everything stays inside a
cyclotomic field:

    sqrt(2) = zeta_8 + zeta_8^-1
    sqrt(p) = g_p               for an odd prime p = 1 (mod 4)
    sqrt(p) = -i * g_p          for an odd prime p = 3 (mod 4)

with g_p = sum_k legendre(k, p) zeta_p^k.  The positive real branch is
taken for every factor, so sqrt_rational is multiplicative and positive.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

__all__ = [
    "Cyclo",
    "cyclotomic_polynomial",
    "root_of_unity",
    "sqrt_rational",
    "parse_cyclo",
]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValueError("conductor must be >= 1")
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact integer division.
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _int_poly_div(num, den):
    """Exact division of integer polynomials (den monic), low degree first."""
    num = list(num)
    den = list(den)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        c = num[shift + len(den) - 1]
        out[shift] = c
        if c:
            for j, dj in enumerate(den):
                num[shift + j] -= c * dj
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def _crt_structure(n):
    """Prime-power CRT data for conductor n.

    Returns ((q, p, p^{a-1}, phi(q), M_q), ...) where q = p^a runs over the
    prime-power factors and M_q = (n/q) * ((n/q)^{-1} mod q), so that any
    exponent k reassembles as sum_q (k mod q) * M_q (mod n).
    """
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            q = 1
            while m % p == 0:
                m //= p
                q *= p
            out.append((q, p))
        p += 1
    if m > 1:
        out.append((m, m))
    data = []
    for q, p in out:
        cof = n // q
        data.append((q, p, q // p, q - q // p, cof * pow(cof, -1, q) % n))
    return tuple(data)


def _reduce_mod_cyclotomic(n, coeffs):
    """Canonical form: the tensor basis over the prime-power components.

    Each exponent splits by CRT into components modulo the prime powers
    q = p^a dividing n; components of size at least phi(q) are eliminated
    with the sparse relation zeta_q^e = -sum_j zeta_q^{e - j p^{a-1}}
    (j = 1..p-1), which lands inside the basis in one step.  The result is
    the unique representation on exponents whose components all lie below
    phi(q); this is reduction modulo the n-th cyclotomic polynomial written
    in the tensor monomial basis (so the conductor-6 form of zeta_6 is
    1 + zeta_6^4, i.e. 1 + zeta_3^2's conjugate pattern, not a bare power).
    """
    if n == 1:
        total = sum(coeffs.values(), Fraction(0))
        return {0: total} if total else {}
    structure = _crt_structure(n)
    work = {}
    for k, v in coeffs.items():
        if not v:
            continue
        key = tuple(k % q for q, _, _, _, _ in structure)
        work[key] = work.get(key, Fraction(0)) + v
    stack = [key for key in work
             if any(key[i] >= structure[i][3] for i in range(len(structure)))]
    while stack:
        key = stack.pop()
        coef = work.pop(key, None)
        if not coef:
            continue
        for i, (q, p, step, phi, _) in enumerate(structure):
            if key[i] >= phi:
                break
        for j in range(1, p):
            new = list(key)
            new[i] = key[i] - j * step
            new = tuple(new)
            prev = work.get(new, Fraction(0))
            work[new] = prev - coef
            if any(new[t] >= structure[t][3] for t in range(len(structure))):
                stack.append(new)
    out = {}
    for key, v in work.items():
        if not v:
            continue
        k = 0
        for comp, (_, _, _, _, m_q) in zip(key, structure):
            k = (k + comp * m_q) % n
        out[k] = v
    return out


class Cyclo:
    """An element of the cyclotomic field Q(zeta_N), in canonical form.

    Immutable.  Arithmetic between values of different conductors embeds
    both into the least common conductor first, so equality is
    conductor-independent.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor, coeffs, _canonical=False):
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        if not _canonical:
            coeffs = _reduce_mod_cyclotomic(conductor, coeffs)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclo values are immutable")

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_rational(q):
        q = Fraction(q)
        return Cyclo(1, {0: q} if q else {}, _canonical=True)

    @staticmethod
    def zero():
        return Cyclo(1, {}, _canonical=True)

    @staticmethod
    def one():
        return Cyclo.from_rational(1)

    # -- conductor handling ------------------------------------------------

    def _embed_coeffs(self, m):
        """Coefficient map of self viewed at conductor m (conductor | m)."""
        step = m // self.conductor
        return {k * step: v for k, v in self.coeffs.items()}

    @staticmethod
    def _common(a, b):
        if not isinstance(b, Cyclo):
            b = Cyclo.from_rational(b)
        m = lcm(a.conductor, b.conductor)
        return m, a._embed_coeffs(m), b._embed_coeffs(m)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def is_rational(self):
        return all(k == 0 for k in self.coeffs)

    def as_rational(self):
        if not self.is_rational():
            raise ValueError(f"not a rational value: {self}")
        return self.coeffs.get(0, Fraction(0))

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_rational(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        m, ca, cb = Cyclo._common(self, other)
        out = dict(ca)
        for k, v in cb.items():
            out[k] = out.get(k, Fraction(0)) + v
        return Cyclo(m, out)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.conductor, {k: -v for k, v in self.coeffs.items()},
                     _canonical=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_rational(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return Cyclo.zero()
            return Cyclo(self.conductor,
                         {k: v * q for k, v in self.coeffs.items()},
                         _canonical=True)
        if not isinstance(other, Cyclo):
            return NotImplemented
        m, ca, cb = Cyclo._common(self, other)
        # integer-normalized convolution: pull denominators out once
        da = 1
        for v in ca.values():
            da = da * v.denominator // gcd(da, v.denominator)
        db = 1
        for v in cb.values():
            db = db * v.denominator // gcd(db, v.denominator)
        ia = {k: int(v * da) for k, v in ca.items()}
        out = {}
        if other is self:
            items = list(ia.items())
            for x in range(len(items)):
                ka, va = items[x]
                k = ka + ka
                if k >= m:
                    k -= m
                out[k] = out.get(k, 0) + va * va
                for y in range(x + 1, len(items)):
                    kb, vb = items[y]
                    k = ka + kb
                    if k >= m:
                        k -= m
                    out[k] = out.get(k, 0) + 2 * va * vb
            db = da
        else:
            ib = {k: int(v * db) for k, v in cb.items()}
            for ka, va in ia.items():
                for kb, vb in ib.items():
                    k = ka + kb
                    if k >= m:
                        k -= m
                    out[k] = out.get(k, 0) + va * vb
        scale = Fraction(1, da * db)
        return Cyclo(m, {k: v * scale for k, v in out.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Cyclo):
            return self * other.inv()
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers")
        out = Cyclo.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self):
        """Complex conjugation zeta -> zeta^-1."""
        n = self.conductor
        return Cyclo(n, {(n - k) % n: v for k, v in self.coeffs.items()})

    def inv(self):
        """Multiplicative inverse of a nonzero value."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero cyclotomic value")
        if self.is_rational():
            return Cyclo.from_rational(1 / self.as_rational())
        n = self.conductor
        phi = [Fraction(c) for c in cyclotomic_polynomial(n)]
        deg = len(phi) - 1
        # tensor-basis exponents can exceed deg; fold into the power basis
        dense = [Fraction(0)] * n
        for k, v in self.coeffs.items():
            dense[k % n] += v
        for i in range(n - 1, deg - 1, -1):
            c = dense[i]
            if c:
                dense[i] = Fraction(0)
                for j in range(deg):
                    dense[i - deg + j] -= c * phi[j]
        u, g = _poly_xgcd_mod(dense[:deg], phi)
        # u * self = g (a nonzero rational) modulo Phi_n
        return Cyclo(n, {k: v / g for k, v in enumerate(u) if v})

    def norm_squared(self):
        """value * conj(value); a non-negative rational for our values."""
        return self * self.conj()

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_rational(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        _, ca, cb = Cyclo._common(self, other)
        n = lcm(self.conductor, other.conductor)
        return (_reduce_mod_cyclotomic(n, ca) == _reduce_mod_cyclotomic(n, cb))

    def __repr__(self):
        return f"Cyclo({self})"

    # -- text form -------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            q = self.coeffs[k]
            if k == 0:
                term = str(q)
            else:
                term = f"{q}*z({self.conductor})^{k}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out


def _poly_xgcd_mod(a, modulus):
    """Return (u, g) with u*a = g (mod modulus), g a nonzero Fraction.

    a and modulus are Fraction coefficient lists, gcd(a, modulus) must be a
    unit, which holds whenever a is a nonzero element of the field.
    """
    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    def poly_divmod(p, q):
        p = list(p)
        out = [Fraction(0)] * max(1, len(p) - len(q) + 1)
        while len(p) >= len(q) and any(p):
            if not p[-1]:
                p.pop()
                continue
            shift = len(p) - len(q)
            c = p[-1] / q[-1]
            out[shift] = c
            for j, qj in enumerate(q):
                p[shift + j] -= c * qj
            trim(p)
        return out, p

    r0, r1 = [Fraction(c) for c in modulus], trim([Fraction(c) for c in a])
    u0, u1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, r = poly_divmod(r0, r1)
        new_u = list(u0) + [Fraction(0)] * max(0, len(q) + len(u1) - 1 - len(u0))
        for i, qi in enumerate(q):
            if qi:
                for j, uj in enumerate(u1):
                    new_u[i + j] -= qi * uj
        r0, r1 = r1, trim(r)
        u0, u1 = u1, trim(new_u) or [Fraction(0)]
        if not r1:
            raise ZeroDivisionError("value is zero modulo the cyclotomic polynomial")
    return u1, r1[0]


def root_of_unity(n, k=1):
    """The canonical primitive root power zeta_n^k."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return Cyclo(n, {k % n: Fraction(1)})


def _squarefree_split(m):
    """m = s^2 * f with f squarefree; returns (s, f)."""
    s, f = 1, 1
    d = 2
    while d * d <= m:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        s *= d ** (e // 2)
        if e % 2:
            f *= d
        d += 1
    return s, f * m


@lru_cache(maxsize=None)
def _sqrt_prime(p):
    """sqrt(p) for p prime, as a Cyclo, positive real branch."""
    if p == 2:
        z8 = root_of_unity(8)
        return z8 + z8.conj()
    gauss = Cyclo(p, {k: Fraction(pow(k, (p - 1) // 2, p) == 1 and 1 or -1)
                      for k in range(1, p)})
    if p % 4 == 1:
        return gauss
    # Gauss sum equals i*sqrt(p) here; divide out i.
    return gauss * root_of_unity(4, 3)


@lru_cache(maxsize=None)
def _sqrt_squarefree(f):
    """sqrt(f) for squarefree positive f, positive real branch."""
    out = Cyclo.one()
    rest = f
    d = 2
    while rest > 1:
        if rest % d == 0:
            out = out * _sqrt_prime(d)
            rest //= d
        d += 1
    return out


def sqrt_rational(q):
    """Positive square root of a positive rational, as a cyclotomic value."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("sqrt_rational requires a positive rational")
    m = q.numerator * q.denominator
    s, f = _squarefree_split(m)
    return _sqrt_squarefree(f) * Fraction(s, q.denominator)


def _imag_unit_power(e):
    """(sqrt(-1))^e as a Cyclo."""
    return root_of_unity(4, e % 4)


def parse_cyclo(text):
    """Parse the value syntax: sum of terms `q*z(N)^k` with rational q.

    Accepts e.g. "1/2*z(3)^1 - 1/2*z(3)^2", "-2", "z(4)^1", "1*z(8)^1+1*z(8)^3".
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty cyclotomic literal")
    if s == "0":
        return Cyclo.zero()
    # split into signed terms
    terms = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-*^(/":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    total = Cyclo.zero()
    for term in terms:
        total = total + _parse_term(term)
    return total


def _parse_term(term):
    sign = 1
    while term and term[0] in "+-":
        if term[0] == "-":
            sign = -sign
        term = term[1:]
    if not term:
        raise ValueError("dangling sign in cyclotomic literal")
    if "*" in term:
        coef_text, root_text = term.split("*", 1)
    elif term.startswith("z("):
        coef_text, root_text = "1", term
    else:
        coef_text, root_text = term, ""
    coef = Fraction(coef_text)
    if not root_text:
        return Cyclo.from_rational(sign * coef)
    if not root_text.startswith("z(") or ")" not in root_text:
        raise ValueError(f"bad cyclotomic term: {term!r}")
    inside, _, tail = root_text[2:].partition(")")
    n = int(inside)
    if tail.startswith("^"):
        k = int(tail[1:])
    elif tail == "":
        k = 1
    else:
        raise ValueError(f"bad cyclotomic term: {term!r}")
    return root_of_unity(n, k) * (sign * coef)
