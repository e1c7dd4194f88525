"""Sparse Laurent polynomials with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """A Laurent polynomial in a fixed number of variables.

    Terms are stored as a dict from exponent tuples to nonzero ints.  Instances
    are treated as immutable once built.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Iterable[int], c: int = 1) -> "LaurentPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): 1})

    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.nvars, {k: v * other for k, v in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def exact_div(self, n: int) -> "LaurentPoly":
        out = {}
        for k, v in self.terms.items():
            q, r = divmod(v, n)
            if r:
                raise ArithmeticError(f"coefficient {v} not divisible by {n}")
            out[k] = q
        return LaurentPoly(self.nvars, out)

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (k, v), = self.terms.items()
            if v not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly(self.nvars, {tuple(-a for a in k): v}) ** (-e)
        result = LaurentPoly.constant(self.nvars, 1)
        for _ in range(e):
            result = result * self
        return result

    def coefficient(self, exps: Iterable[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def total(self) -> int:
        """Sum of coefficients, i.e. the value at all variables equal to 1."""
        return sum(self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i + 1}^{e}" for i, e in enumerate(k) if e) or "1"
            parts.append(f"{self.terms[k]}*{mono}")
        return " + ".join(parts)
