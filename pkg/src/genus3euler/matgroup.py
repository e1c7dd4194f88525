"""Finite groups of 3x3 matrices over cyclotomic numbers."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .exactnum import Cyclotomic


class GroupOrderError(RuntimeError):
    """Closure or element order exceeded the allowed cap."""


@dataclass(frozen=True)
class CycMatrix:
    """A 3x3 matrix with cyclotomic entries, stored row-major."""

    entries: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.entries) != 9:
            raise ValueError("CycMatrix needs nine entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "CycMatrix":
        flat = []
        for row in rows:
            for x in row:
                flat.append(x if isinstance(x, Cyclotomic) else Cyclotomic(x))
        return cls(tuple(flat))

    @classmethod
    def diag(cls, a, b, c) -> "CycMatrix":
        return cls.from_rows([[a, 0, 0], [0, b, 0], [0, 0, c]])

    @classmethod
    def identity(cls) -> "CycMatrix":
        return cls.diag(1, 1, 1)

    def __getitem__(self, ij: tuple[int, int]) -> Cyclotomic:
        i, j = ij
        return self.entries[3 * i + j]

    def __mul__(self, other: "CycMatrix") -> "CycMatrix":
        a, b = self.entries, other.entries
        out = []
        for i in range(3):
            for j in range(3):
                s = Cyclotomic(0)
                for k in range(3):
                    x, y = a[3 * i + k], b[3 * k + j]
                    if x and y:
                        s = s + x * y
                out.append(s)
        return CycMatrix(tuple(out))

    def scale(self, c) -> "CycMatrix":
        return CycMatrix(tuple(c * x for x in self.entries))

    def trace(self) -> Cyclotomic:
        e = self.entries
        return e[0] + e[4] + e[8]

    def det(self) -> Cyclotomic:
        a, b, c, d, e, f, g, h, i = self.entries
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def is_identity(self) -> bool:
        return self == IDENTITY

    def __pow__(self, n: int) -> "CycMatrix":
        result, base = IDENTITY, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        rows = [", ".join(repr(self[i, j]) for j in range(3)) for i in range(3)]
        return "CycMatrix([" + "; ".join(rows) + "])"


IDENTITY = CycMatrix.diag(1, 1, 1)


@dataclass(frozen=True)
class FiniteGroup:
    elements: tuple[CycMatrix, ...]
    generators: tuple[CycMatrix, ...] = ()
    label: int | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def generate_group(
    generators: Iterable[CycMatrix], order_cap: int = 200, label: int | None = None
) -> FiniteGroup:
    """Breadth-first closure of the generators under right multiplication."""
    gens = tuple(generators)
    seen = {IDENTITY}
    order = [IDENTITY]
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
                    if len(order) > order_cap:
                        raise GroupOrderError(
                            f"closure exceeds {order_cap} elements (group {label})"
                        )
        frontier = nxt
    return FiniteGroup(tuple(order), gens, label)


def element_order(m: CycMatrix, cap: int = 200) -> int:
    x = m
    for n in range(1, cap + 1):
        if x.is_identity():
            return n
        x = x * m
    raise GroupOrderError(f"element order exceeds {cap}")


@dataclass(frozen=True)
class EigenvalueSystem:
    """Six roots of unity closed under inversion; each entry (m, j) means zeta_m^j.

    Entries are normalized so that m is the exact order of the root and
    0 <= j < m, and kept sorted.
    """

    entries: tuple[tuple[int, int], ...] = field(default=((1, 0),) * 6)

    def __post_init__(self):
        norm = tuple(sorted(_normalize_root(m, j) for m, j in self.entries))
        if len(norm) != 6:
            raise ValueError("an eigenvalue system has exactly six entries")
        inv = tuple(sorted(_normalize_root(m, -j) for m, j in norm))
        if inv != norm:
            raise ValueError("eigenvalue system is not closed under inversion")
        object.__setattr__(self, "entries", norm)

    @classmethod
    def from_half(cls, roots: Iterable[tuple[int, int]]) -> "EigenvalueSystem":
        """Build {a, b, c, 1/a, 1/b, 1/c} from the three roots (a, b, c)."""
        roots = list(roots)
        return cls(tuple(roots) + tuple((m, -j) for m, j in roots))

    @property
    def modulus(self) -> int:
        """Least common order n, so every entry is a power of zeta_n."""
        n = 1
        for m, _ in self.entries:
            n = n * m // gcd(n, m)
        return n

    def exponents(self, n: int | None = None) -> tuple[int, ...]:
        """Entries as exponents of zeta_n (n defaults to the modulus)."""
        n = n or self.modulus
        return tuple(j * (n // m) for m, j in self.entries)

    def values(self) -> list[Cyclotomic]:
        return [Cyclotomic.zeta(m, j) for m, j in self.entries]

    def inverted(self) -> "EigenvalueSystem":
        return EigenvalueSystem(tuple((m, -j) for m, j in self.entries))


def _normalize_root(m: int, j: int) -> tuple[int, int]:
    j %= m
    g = gcd(j, m)
    return (m // g, j // g)


def eigenvalues_h1(m: CycMatrix, cap: int = 200) -> EigenvalueSystem:
    """Spectrum on H^1: the eigenvalues of m together with their inverses.

    The multiplicity of zeta_n^j in m (n the order of m) is the discrete
    Fourier coefficient (1/n) * sum_k tr(m^k) zeta_n^(-jk).
    """
    n = element_order(m, cap)
    traces = []
    x = IDENTITY
    for _ in range(n):
        traces.append(x.trace())
        x = x * m
    lcm = n
    for t in traces:
        lcm = lcm * t.conductor // gcd(lcm, t.conductor)
    # each trace as exponents of zeta_lcm
    expanded = []
    for t in traces:
        step = lcm // t.conductor
        expanded.append({k * step: c for k, c in t.coefficients().items()})
    mult = Counter()
    total = 0
    for j in range(n):
        acc: dict[int, Fraction] = {}
        for k, terms in enumerate(expanded):
            shift = (-j * k * (lcm // n)) % lcm
            for e, c in terms.items():
                key = (e + shift) % lcm
                acc[key] = acc.get(key, 0) + c
        value = Cyclotomic.from_exponents(lcm, acc) * Fraction(1, n)
        if not value.is_rational():
            raise ArithmeticError(f"non-rational eigenvalue multiplicity {value!r}")
        q = value.to_rational()
        if q.denominator != 1 or q < 0:
            raise ArithmeticError(f"bad eigenvalue multiplicity {q}")
        if q:
            mult[j] = int(q)
            total += int(q)
    if total != 3:
        raise ArithmeticError(f"eigenvalue multiplicities sum to {total}, not 3")
    half = [(n, j) for j, c in sorted(mult.items()) for _ in range(c)]
    return EigenvalueSystem.from_half(half)
