"""Exact rational and cyclotomic arithmetic.

Rationals are :class:`fractions.Fraction`.  A :class:`Cyclotomic` is an element
of some cyclotomic field Q(zeta_N), stored in the power basis
1, z, ..., z^(phi(N)-1) of the smallest such field that contains it, with the
coefficients kept as integer numerators over one positive common denominator.
Because both the field and the basis are canonical, equality is a comparison of
tuples.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Union

Rational = Fraction
Number = Union[int, Fraction, "Cyclotomic"]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def normal_conductor(n: int) -> int:
    """Q(zeta_2m) equals Q(zeta_m) for odd m; map such n to m."""
    if n % 4 == 2:
        return n // 2
    return n


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d:
            continue
        phi_d = cyclotomic_polynomial(d)
        deg = len(phi_d) - 1
        quot = [0] * (len(num) - deg)
        for i in range(len(num) - 1, deg - 1, -1):
            c = num[i]
            if c:
                quot[i - deg] = c
                for j, pj in enumerate(phi_d):
                    num[i - deg + j] -= c * pj
        assert not any(num[:deg]), "inexact cyclotomic division"
        num = quot
    return tuple(num)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(dense: list[int], n: int) -> list[int]:
    """Reduce an integer coefficient vector in powers of zeta_n modulo Phi_n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    v = list(dense)
    for i in range(len(v) - 1, deg - 1, -1):
        c = v[i]
        if c:
            base = i - deg
            for j in range(deg):
                pj = phi[j]
                if pj:
                    v[base + j] -= c * pj
            v[i] = 0
    v = v[:deg]
    if len(v) < deg:
        v.extend([0] * (deg - len(v)))
    return v


class Cyclotomic:
    """An exact element of the universal cyclotomic field."""

    __slots__ = ("conductor", "_num", "_den", "_hash")

    def __init__(self, value: Union[int, Fraction] = 0):
        value = Fraction(value)
        self.conductor = 1
        self._num = (value.numerator,)
        self._den = value.denominator
        self._hash = None

    # construction -----------------------------------------------------------

    @classmethod
    def _raw(cls, n: int, num: Iterable[int], den: int) -> "Cyclotomic":
        obj = cls.__new__(cls)
        num = tuple(num)
        g = den
        for c in num:
            if g == 1:
                break
            g = gcd(g, c)
        if g != 1:
            num = tuple(c // g for c in num)
            den //= g
        obj.conductor = n
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def from_exponents(
        cls, n: int, coeffs: Mapping[int, Union[int, Fraction]] | Iterable[Union[int, Fraction]]
    ) -> "Cyclotomic":
        """The number sum(c_k * zeta_n^k), given as a mapping k -> c_k or a dense sequence."""
        if not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        den = 1
        for c in coeffs.values():
            if isinstance(c, Fraction):
                den = _lcm(den, c.denominator)
        m = normal_conductor(n)
        dense = [0] * m
        for k, c in coeffs.items():
            if not c:
                continue
            c = int(Fraction(c) * den)
            k %= n
            if m != n:
                # zeta_n = -zeta_m^((m+1)/2)
                if k % 2:
                    c = -c
                k = (k * (m + 1) // 2) % m
            dense[k] += c
        return cls._make(m, _reduce(dense, m), den)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        return cls.from_exponents(n, {k % n: 1})

    @classmethod
    def _make(cls, n: int, num: list[int], den: int) -> "Cyclotomic":
        """Build from a reduced vector, then descend to the minimal conductor."""
        if not any(num):
            return cls._raw(1, (0,), 1)
        while n > 1:
            for p in _prime_factors(n):
                sub = _descend(n, num, p)
                if sub is not None:
                    n, num = sub
                    break
            else:
                break
        return cls._raw(n, num, den)

    # structure --------------------------------------------------------------

    def coefficients(self) -> dict[int, Fraction]:
        """Nonzero power-basis coefficients k -> c_k of zeta_conductor^k."""
        return {k: Fraction(c, self._den) for k, c in enumerate(self._num) if c}

    def _dense_in(self, m: int) -> list[int]:
        """Numerators in the power basis of Q(zeta_m); m must be a multiple of the conductor."""
        n = self.conductor
        if n == m:
            return list(self._num)
        step = m // n
        dense = [0] * m
        for k, c in enumerate(self._num):
            if c:
                dense[(k * step) % m] += c
        return _reduce(dense, m)

    def is_rational(self) -> bool:
        return self.conductor == 1

    def is_zero(self) -> bool:
        return self.conductor == 1 and self._num[0] == 0

    def to_rational(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def conjugate(self) -> "Cyclotomic":
        n = self.conductor
        if n == 1:
            return self
        dense = [0] * n
        for k, c in enumerate(self._num):
            if c:
                dense[(-k) % n] += c
        return Cyclotomic._make(n, _reduce(dense, n), self._den)

    def galois(self, a: int) -> "Cyclotomic":
        """Apply zeta -> zeta^a; a must be coprime to the conductor."""
        n = self.conductor
        if gcd(a, n) != 1:
            raise ValueError("Galois exponent must be a unit")
        dense = [0] * n
        for k, c in enumerate(self._num):
            if c:
                dense[(a * k) % n] += c
        return Cyclotomic._make(n, _reduce(dense, n), self._den)

    def __complex__(self) -> complex:
        import cmath

        n = self.conductor
        return sum(c * cmath.exp(2j * cmath.pi * k / n) for k, c in enumerate(self._num)) / self._den

    # arithmetic -------------------------------------------------------------

    def __add__(self, other: Number) -> "Cyclotomic":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m = _lcm(self.conductor, other.conductor)
        den = _lcm(self._den, other._den)
        a = self._dense_in(m)
        b = other._dense_in(m)
        fa, fb = den // self._den, den // other._den
        return Cyclotomic._make(m, [x * fa + y * fb for x, y in zip(a, b)], den)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic._raw(self.conductor, [-c for c in self._num], self._den)

    def __sub__(self, other: Number) -> "Cyclotomic":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other: Number) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Cyclotomic._raw(
                self.conductor, [c * other.numerator for c in self._num], self._den * other.denominator
            ) if other else Cyclotomic(0)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.conductor == 1:
            return self * Fraction(other._num[0], other._den)
        if self.conductor == 1:
            return other * Fraction(self._num[0], self._den)
        m = _lcm(self.conductor, other.conductor)
        a = self._dense_in(m)
        b = other._dense_in(m)
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic._make(m, _reduce(prod, m), self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Solve self * x = 1 in the power basis of the conductor field."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.conductor
        if n == 1:
            return Cyclotomic(1 / self.to_rational())
        deg = len(self._num)
        # column j holds self * zeta^j
        cols = []
        for j in range(deg):
            dense = [0] * (deg + j)
            for k, c in enumerate(self._num):
                dense[k + j] += c
            cols.append(_reduce(dense, n))
        rows = [[Fraction(cols[j][i]) for j in range(deg)] + [Fraction(1 if i == 0 else 0)]
                for i in range(deg)]
        sol = solve_square(rows)
        den = 1
        for x in sol:
            den = _lcm(den, x.denominator)
        # the matrix carries self's numerators, so rescale by the common denominator
        return Cyclotomic._make(n, [int(x * den) * self._den for x in sol], den)

    def __truediv__(self, other: Number) -> "Cyclotomic":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> "Cyclotomic":
        return _coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "Cyclotomic":
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # comparison -------------------------------------------------------------

    def _key(self) -> tuple:
        return (self.conductor, self._num, self._den)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.conductor == 1 and Fraction(self._num[0], self._den) == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            if self.conductor == 1:
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash(self._key())
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.conductor == 1:
            return f"Cyclotomic({Fraction(self._num[0], self._den)})"
        terms = []
        for k, c in self.coefficients().items():
            terms.append(f"{c}*E({self.conductor})^{k}" if k else f"{c}")
        return "Cyclotomic(" + " + ".join(terms) + ")"


def _coerce(x: Number) -> "Cyclotomic":
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic(x)
    return NotImplemented


def _to_normal(d: int, dense: list[int]) -> tuple[int, list[int]]:
    """Re-express a dense vector in powers of zeta_d over the normal conductor, reduced."""
    m = normal_conductor(d)
    if m != d:
        # zeta_d = -zeta_m^((m+1)/2)
        conv = [0] * m
        for k, c in enumerate(dense):
            if c:
                conv[(k * (m + 1) // 2) % m] += -c if k % 2 else c
        dense = conv
    return m, _reduce(dense, m)


def _descend(n: int, num: list[int], p: int) -> tuple[int, list[int]] | None:
    """Rewrite an element of Q(zeta_n) over Q(zeta_{n/p}) if it lies there."""
    d = n // p
    if d % p == 0:
        # basis of Q(zeta_n) over Q(zeta_d) is 1, z, ..., z^(p-1) with z^p = zeta_d
        if any(c for k, c in enumerate(num) if k % p):
            return None
        sub = [c for k, c in enumerate(num) if k % p == 0]
        if normal_conductor(d) != d:
            return _to_normal(d, sub)
        return d, sub
    # p divides n exactly once: project with the relative trace, then verify
    s = pow(p, -1, d) if d > 1 else 0
    dense = [0] * d
    for k, c in enumerate(num):
        if c:
            dense[(k * s) % d] += c * (p - 1 if k % p == 0 else -1)
    m, cand = _to_normal(d, dense)
    if any(x % (p - 1) for x in cand):
        return None
    cand = [x // (p - 1) for x in cand]
    step = n // m
    back = [0] * n
    for k, c in enumerate(cand):
        if c:
            back[(k * step) % n] += c
    if _reduce(back, n) != list(num):
        return None
    return m, cand


def solve_square(rows: list[list[Fraction]]) -> list[Fraction]:
    """Gauss-Jordan elimination on an augmented n x (n+1) system with a unique solution."""
    n = len(rows)
    a = [list(r) for r in rows]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


# named constants used by the group tables

def sqrt2() -> Cyclotomic:
    z = Cyclotomic.zeta(8)
    return z + z.conjugate()


def imag_unit() -> Cyclotomic:
    return Cyclotomic.zeta(4)


def sqrt_minus7() -> Cyclotomic:
    """The Gauss sum sum(chi(k) zeta_7^k) over k = 1..6; its imaginary part is positive."""
    squares = {pow(k, 2, 7) for k in range(1, 7)}
    return Cyclotomic.from_exponents(7, {k: 1 if k in squares else -1 for k in range(1, 7)})
