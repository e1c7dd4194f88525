"""Characters of the symplectic groups Sp(2), Sp(4) and Sp(6).

The character of the irreducible representation with highest weight lambda is
evaluated as a determinant of complete homogeneous symmetric functions J_d of
the 2g-element alphabet {x_1^(+-1), ..., x_g^(+-1)}: row i of the g x g matrix
is

    (J_{l_i + 1}, J_{l_i + 2} + J_{l_i}, J_{l_i + 3} + J_{l_i - 1}, ...),  l_i = lambda_i - i,

i.e. column j >= 2 holds J_{l_i + j} + J_{l_i - j + 2}.  J_d is produced by
Newton's recursion from power sums.

At group elements the alphabet is a multiset of roots of unity of some common
order n, and all arithmetic happens in the group ring Z[x]/(x^n - 1) before
the result is mapped to a cyclotomic number.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Callable, Sequence

import numpy as np

from .exactnum import Cyclotomic
from .laurent import LaurentPoly
from .matgroup import EigenvalueSystem, FiniteGroup, eigenvalues_h1


class PartitionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing nonnegative parts; 1, 2 or 3 of them (genus 1, 2, 3)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not 1 <= len(parts) <= 3:
            raise PartitionError(f"need 1 to 3 parts, got {len(parts)}")
        if any(p < 0 for p in parts):
            raise PartitionError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str, length: int = 3) -> "Partition":
        """Parse 'a,b,c' (missing trailing parts are zero)."""
        fields = [f for f in re.split(r"[,\s]+", text.strip().strip("()")) if f]
        if not fields or len(fields) > length:
            raise PartitionError(f"cannot parse {text!r} as a partition with {length} parts")
        try:
            parts = [int(f) for f in fields]
        except ValueError as exc:
            raise PartitionError(f"cannot parse {text!r}") from exc
        return cls(tuple(parts + [0] * (length - len(parts))))

    @property
    def genus(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def as_partition(lam, length: int = 3) -> Partition:
    if isinstance(lam, Partition):
        return lam
    if isinstance(lam, str):
        return Partition.parse(lam, length)
    if isinstance(lam, int):
        return Partition((lam,))
    return Partition(tuple(lam))


def partitions_of(weight: int, length: int = 3) -> list[Partition]:
    """Partitions of the given weight with at most `length` parts, reverse-lexicographic."""
    out = []

    def rec(remaining: int, cap: int, prefix: list[int]):
        if len(prefix) == length:
            if remaining == 0:
                out.append(Partition(tuple(prefix)))
            return
        for p in range(min(remaining, cap), -1, -1):
            rec(remaining - p, p, prefix + [p])

    rec(weight, weight, [])
    return out


def partitions_up_to(max_weight: int, length: int = 3) -> list[Partition]:
    return [p for w in range(max_weight + 1) for p in partitions_of(w, length)]


def weyl_dimension(lam) -> int:
    """Dimension of V_lambda for Sp(2g): product over positive roots of type C_g."""
    lam = as_partition(lam, 3) if not isinstance(lam, Partition) else lam
    g = lam.genus
    v = [lam[i] + g - i for i in range(g)]
    rho = [g - i for i in range(g)]
    num = den = 1
    for i in range(g):
        num *= 2 * v[i]
        den *= 2 * rho[i]
        for j in range(i + 1, g):
            num *= (v[i] - v[j]) * (v[i] + v[j])
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
    q, r = divmod(num, den)
    assert r == 0
    return q


# -- generic alphabets ------------------------------------------------------


def complete_homogeneous(d: int, alphabet: Sequence, one=1):
    """h_d of the alphabet by Newton's recursion h_d = (1/d) sum_k p_k h_{d-k}."""
    return complete_homogeneous_list(d, alphabet, one)[d] if d >= 0 else one * 0


def complete_homogeneous_list(dmax: int, alphabet: Sequence, one=1) -> list:
    """[h_0, ..., h_dmax] of the alphabet, by Newton's recursion."""
    h = [one]
    powers = [one for _ in alphabet]
    psums = [None]
    for d in range(1, dmax + 1):
        powers = [p * a for p, a in zip(powers, alphabet)]
        s = powers[0]
        for p in powers[1:]:
            s = s + p
        psums.append(s)
        acc = psums[1] * h[d - 1]
        for k in range(2, d + 1):
            acc = acc + psums[k] * h[d - k]
        h.append(_divide(acc, d))
    return h


def _divide(x, d: int):
    if isinstance(x, LaurentPoly):
        return x.exact_div(d)
    if isinstance(x, int):
        q, r = divmod(x, d)
        return q if r == 0 else Fraction(x, d)
    return x * Fraction(1, d)


def determinant_entries(parts: Sequence[int]) -> list[list[tuple[int, ...]]]:
    """Indices d of the J_d summed in each entry of the character determinant."""
    g = len(parts)
    rows = []
    for i in range(1, g + 1):
        l = parts[i - 1] - i
        row = [(l + 1,)]
        for j in range(2, g + 1):
            row.append((l + j, l - j + 2))
        rows.append(row)
    return rows


def _det(m: list[list]):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def character_from_j(parts: Sequence[int], j: Callable[[int], object], zero) -> object:
    """Assemble the determinant given a function d -> J_d (J_d = 0 for d < 0)."""

    def jj(d: int):
        return j(d) if d >= 0 else zero

    rows = []
    for row in determinant_entries(parts):
        entries = []
        for idx in row:
            s = jj(idx[0])
            for k in idx[1:]:
                s = s + jj(k)
            entries.append(s)
        rows.append(entries)
    return _det(rows)


def formal_alphabet(g: int) -> list[LaurentPoly]:
    xs = [LaurentPoly.variable(g, i) for i in range(g)]
    return xs + [LaurentPoly.variable(g, i, -1) for i in range(g)]


@lru_cache(maxsize=None)
def formal_character(lam) -> LaurentPoly:
    """The character of V_lambda as a Laurent polynomial in x_1..x_g."""
    lam = as_partition(lam)
    g = lam.genus
    top = lam[0] + g + 1
    alphabet = formal_alphabet(g)
    one = LaurentPoly.constant(g, 1)
    h = complete_homogeneous_list(top, alphabet, one)
    return character_from_j(lam.parts, lambda d: h[d], LaurentPoly(g))


# -- group-ring evaluation at roots of unity --------------------------------


class _HCache:
    """h_d of an alphabet of n-th roots of unity, as vectors in Z[x]/(x^n - 1)."""

    def __init__(self, exponents: tuple[int, ...], n: int):
        self.n = n
        self.exps = exponents
        self.h = [np.eye(1, n, 0, dtype=np.int64)[0]]
        self.p = [None]

    def _power_sum(self, k: int) -> np.ndarray:
        v = np.zeros(self.n, dtype=np.int64)
        for e in self.exps:
            v[(k * e) % self.n] += 1
        return v

    def get(self, d: int) -> np.ndarray:
        while len(self.h) <= d:
            m = len(self.h)
            self.p.append(self._power_sum(m))
            acc = np.zeros(self.n, dtype=np.int64)
            for k in range(1, m + 1):
                pk = self.p[k]
                hk = self.h[m - k]
                for e in np.nonzero(pk)[0]:
                    acc += pk[e] * np.roll(hk, e)
            if np.any(acc % m):
                raise ArithmeticError("Newton recursion produced a non-integral h_d")
            self.h.append(acc // m)
        return self.h[d]


class _RingElt:
    """Element of Z[x]/(x^n - 1) with Python-int coefficients."""

    __slots__ = ("c",)

    def __init__(self, c: list[int]):
        self.c = c

    def __add__(self, o: "_RingElt") -> "_RingElt":
        return _RingElt([a + b for a, b in zip(self.c, o.c)])

    def __sub__(self, o: "_RingElt") -> "_RingElt":
        return _RingElt([a - b for a, b in zip(self.c, o.c)])

    def __mul__(self, o: "_RingElt") -> "_RingElt":
        n = len(self.c)
        out = [0] * n
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        out[(i + j) % n] += a * b
        return _RingElt(out)


_H_CACHES: dict[EigenvalueSystem, _HCache] = {}


def _hcache(E: EigenvalueSystem) -> _HCache:
    cache = _H_CACHES.get(E)
    if cache is None:
        cache = _HCache(E.exponents(), E.modulus)
        _H_CACHES[E] = cache
    return cache


@lru_cache(maxsize=None)
def _character_at(parts: tuple[int, ...], E: EigenvalueSystem) -> Cyclotomic:
    cache = _hcache(E)
    n = cache.n
    zero = _RingElt([0] * n)
    value = character_from_j(parts, lambda d: _RingElt([int(x) for x in cache.get(d)]), zero)
    return Cyclotomic.from_exponents(n, dict(enumerate(value.c)))


def symplectic_character(lam, E):
    """chi_lambda at a spectrum.

    E may be an EigenvalueSystem (result: Cyclotomic), the string "formal"
    (result: LaurentPoly), or any explicit alphabet of 2g ring elements closed
    under inversion (result in that ring).
    """
    lam = as_partition(lam)
    if isinstance(E, EigenvalueSystem):
        if lam.genus != 3:
            raise ValueError("eigenvalue systems carry six entries; use a 3-part partition")
        return _character_at(lam.parts, E)
    if isinstance(E, str) and E == "formal":
        return formal_character(lam)
    alphabet = list(E)
    if len(alphabet) != 2 * lam.genus:
        raise ValueError(f"alphabet of size {len(alphabet)} does not match genus {lam.genus}")
    one = alphabet[0] ** 0 if not isinstance(alphabet[0], int) else 1
    h = complete_homogeneous_list(lam[0] + lam.genus + 1, alphabet, one)
    return character_from_j(lam.parts, lambda d: h[d], one * 0)


@lru_cache(maxsize=None)
def group_spectra(group: FiniteGroup) -> tuple[tuple[EigenvalueSystem, int], ...]:
    """Distinct spectra on H^1 of the group's elements, with their counts."""
    counts: dict[EigenvalueSystem, int] = {}
    for m in group:
        E = eigenvalues_h1(m)
        counts[E] = counts.get(E, 0) + 1
    return tuple(sorted(counts.items(), key=lambda kv: kv[0].entries))


def invariant_average(lam, group: FiniteGroup) -> Cyclotomic:
    """(1/#G) sum_g chi_lambda(g), unchecked."""
    lam = as_partition(lam)
    total = Cyclotomic(0)
    for E, count in group_spectra(group):
        total = total + symplectic_character(lam, E) * count
    return total / group.order


def invariant_dimension(lam, group: FiniteGroup) -> int:
    """dim V_lambda^G as the average of chi_lambda over the group."""
    lam = as_partition(lam)
    total = invariant_average(lam, group)
    if not total.is_rational():
        raise ArithmeticError(f"character sum over group {group.label} is not rational")
    value = total.to_rational()
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"dim V_{lam}^G{group.label} = {value} is not a nonnegative integer")
    return int(value)


def dimension(lam) -> int:
    """dim V_lambda from the determinant at the identity (all eigenvalues 1)."""
    lam = as_partition(lam)
    ones = [1] * (2 * lam.genus)
    value = symplectic_character(lam, ones)
    return int(value)
