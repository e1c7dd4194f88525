"""Restriction of Sp(6) representations to Sp(4) x Sp(2) and to Sp(2)^3 x| S3.

Everything is computed from the Sp(2)^3 multiplicities n[a, b, c] of V_lambda,
which come from the Weyl character formula written in the basis of products
chi_a(x1) chi_b(x2) chi_c(x3) of Sp(2) characters:

    chi_lambda * (X1 - X2)(X1 - X3)(X2 - X3) = sum_w sgn(w) chi_{m_w(1)} chi_{m_w(2)} chi_{m_w(3)}

with X_i = x_i + 1/x_i and m = (lambda_1 + 2, lambda_2 + 1, lambda_3).
Multiplying by X_i acts on the basis by chi_a -> chi_{a-1} + chi_{a+1}, so the
three divisions are triangular recursions on integer arrays.

The wreath-product decomposition reads three sectors of the character:
the identity (n itself), a transposition of two Sp(2) factors, and a 3-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

import numpy as np

from .exactnum import Cyclotomic
from .laurent import LaurentPoly
from .symplectic import (
    Partition,
    as_partition,
    character_from_j,
    formal_character,
    weyl_dimension,
)


class BranchingError(ArithmeticError):
    """Negative multiplicity or inconsistent character sectors."""


def _sign(perm: tuple[int, ...]) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def _divide_by_difference(h: np.ndarray, i: int, j: int) -> np.ndarray:
    """Solve (X_i - X_j) f = h for f in the Sp(2)-character basis."""
    # put axis i first and axis j second
    order = [i, j] + [k for k in range(h.ndim) if k not in (i, j)]
    hh = np.transpose(h, order)
    size = hh.shape[0]
    f = np.zeros_like(hh)
    zero = np.zeros_like(hh[0])

    def shift_sum(level: np.ndarray) -> np.ndarray:
        out = np.zeros_like(level)
        out[1:] += level[:-1]
        out[:-1] += level[1:]
        if np.any(level[-1]):
            raise BranchingError("quotient support exceeds the working array")
        return out

    for a in range(size - 1, 0, -1):
        above = f[a + 1] if a + 1 < size else zero
        f[a - 1] = hh[a] - above + shift_sum(f[a])
    if np.any(hh[0] - f[1] + shift_sum(f[0])):
        raise BranchingError("division by X_i - X_j was not exact")
    inverse = np.argsort(order)
    return np.transpose(f, inverse).copy()


@lru_cache(maxsize=None)
def _sp2_cube_array(parts: tuple[int, int, int]) -> np.ndarray:
    m = (parts[0] + 2, parts[1] + 1, parts[2])
    size = parts[0] + 4
    g = np.zeros((size, size, size), dtype=object)
    g[...] = 0
    for perm in permutations(range(3)):
        g[m[perm[0]], m[perm[1]], m[perm[2]]] += _sign(perm)
    f = _divide_by_difference(g, 0, 1)
    f = _divide_by_difference(f, 0, 2)
    f = _divide_by_difference(f, 1, 2)
    if np.any(f < 0):
        raise BranchingError(f"negative Sp(2)^3 multiplicity for {parts}")
    n = f.astype(np.int64)
    n.setflags(write=False)
    return n


def sp2_cube_multiplicities(lam) -> np.ndarray:
    """Array n with n[a, b, c] the multiplicity of V_a x V_b x V_c in V_lambda."""
    return _sp2_cube_array(as_partition(lam).parts)


def _spread(n: np.ndarray, axis: int) -> np.ndarray:
    """Convert Sp(2)-character coefficients along an axis to monomial coefficients."""
    n = np.moveaxis(n, axis, 0)
    size = n.shape[0]
    c = n.copy()
    for a in range(size - 3, -1, -1):
        c[a] += c[a + 2]
    out = np.concatenate([c[:0:-1], c], axis=0)
    return np.moveaxis(out, 0, axis)


@lru_cache(maxsize=None)
def _weights_array(parts: tuple[int, int, int]) -> np.ndarray:
    k = _sp2_cube_array(parts)
    for axis in range(3):
        k = _spread(k, axis)
    k.setflags(write=False)
    return k


def weight_multiplicities(lam) -> tuple[np.ndarray, int]:
    """(K, offset): K[e1+offset, e2+offset, e3+offset] is the multiplicity of weight e."""
    parts = as_partition(lam).parts
    k = _weights_array(parts)
    return k, (k.shape[0] - 1) // 2


def character_from_weights(lam) -> LaurentPoly:
    """The formal character rebuilt from the weight array (fast route)."""
    k, off = weight_multiplicities(lam)
    idx = np.argwhere(k)
    return LaurentPoly(3, {tuple(int(x) - off for x in e): int(k[tuple(e)]) for e in idx})


# -- Sp(4) x Sp(2) ----------------------------------------------------------


@dataclass(frozen=True)
class Sp4Sp2Decomposition:
    """Multiplicities m[(mu, nu)] of V_mu x V_nu, mu a 2-part and nu a 1-part partition."""

    multiplicities: dict[tuple[tuple[int, int], int], int]

    def dimension(self) -> int:
        return sum(
            m * weyl_dimension(Partition(mu)) * (nu + 1)
            for (mu, nu), m in self.multiplicities.items()
        )

    def items(self):
        return self.multiplicities.items()


@lru_cache(maxsize=None)
def _restrict_sp4_sp2(parts: tuple[int, int, int]) -> Sp4Sp2Decomposition:
    n = _sp2_cube_array(parts)
    size = n.shape[0] + 1
    f = np.zeros((size, size, size), dtype=np.int64)
    f[:-1, :-1, :-1] = n
    # (X1 - X2) applied to the (x1, x2) part
    h = np.zeros_like(f)
    h[1:] += f[:-1]
    h[:-1] += f[1:]
    h[:, 1:] -= f[:, :-1]
    h[:, :-1] -= f[:, 1:]
    out = {}
    for a, b, c in np.argwhere(h):
        a, b, c = int(a), int(b), int(c)
        v = int(h[a, b, c])
        if a > b:
            if v < 0:
                raise BranchingError(f"negative Sp(4) x Sp(2) multiplicity for {parts}")
            out[((a - 1, b), c)] = v
        elif a < b:
            if h[b, a, c] != -v:
                raise BranchingError("Sp(4) numerator is not alternating")
        else:
            raise BranchingError("Sp(4) numerator is not alternating")
    return Sp4Sp2Decomposition(dict(sorted(out.items())))


def restrict_sp4_sp2(lam) -> Sp4Sp2Decomposition:
    return _restrict_sp4_sp2(as_partition(lam).parts)


def _sp2_character(k: int, nvars: int, var: int) -> LaurentPoly:
    e = [0] * nvars
    terms = {}
    for j in range(k + 1):
        e[var] = k - 2 * j
        terms[tuple(e)] = 1
    return LaurentPoly(nvars, terms)


def peel_sp4_sp2(character: LaurentPoly) -> Sp4Sp2Decomposition:
    """Decompose a 3-variable character by repeatedly removing the leading constituent.

    The leading term is the highest x3-degree and, within it, the
    lexicographically largest (x1, x2) exponent.
    """
    rest = LaurentPoly(3, character.terms)
    out: dict[tuple[tuple[int, int], int], int] = {}
    while not rest.is_zero():
        lead = max(rest.terms, key=lambda e: (e[2], e[0], e[1]))
        c = rest.terms[lead]
        mu, nu = (lead[0], lead[1]), lead[2]
        if c < 0 or not (mu[0] >= mu[1] >= 0 and nu >= 0):
            raise BranchingError(f"peeling hit coefficient {c} at {lead}")
        out[(mu, nu)] = out.get((mu, nu), 0) + c
        sp4 = formal_character(Partition(mu))
        lifted = LaurentPoly(3, {(k[0], k[1], 0): v for k, v in sp4.terms.items()})
        rest = rest - lifted * _sp2_character(nu, 3, 2) * c
    return Sp4Sp2Decomposition(dict(sorted(out.items())))


def peel_sp2_cube(character: LaurentPoly) -> dict[tuple[int, int, int], int]:
    """Sp(2)^3 multiplicities of a 3-variable character by peeling (slow oracle)."""
    rest = LaurentPoly(3, character.terms)
    out: dict[tuple[int, int, int], int] = {}
    while not rest.is_zero():
        lead = max(rest.terms)
        c = rest.terms[lead]
        if c < 0 or min(lead) < 0:
            raise BranchingError(f"peeling hit coefficient {c} at {lead}")
        out[lead] = c
        term = _sp2_character(lead[0], 3, 0) * _sp2_character(lead[1], 3, 1)
        term = term * _sp2_character(lead[2], 3, 2)
        rest = rest - term * c
    return out


# -- Sp(2)^3 x| S3 ----------------------------------------------------------


def _sp2_dim(n: int) -> int:
    return n + 1


@dataclass(frozen=True)
class GDecomposition:
    """Multiplicities over the irreducible representations of Sp(2)^3 x| S3.

    triples[(a, b, c)], a > b > c: induced from V_a x V_b x V_c.
    plus[(a, b)], minus[(a, b)], a != b: V_a x V_b x V_b with the transposition
    acting by +swap or -swap.
    plus_diag[a], minus_diag[a]: V_a^{x3} with S3 acting by permutation, or by
    permutation times sign.  tprime[a]: V_a^{x3} tensored with the 2-dimensional
    irreducible representation of S3.
    """

    triples: dict[tuple[int, int, int], int] = field(default_factory=dict)
    plus: dict[tuple[int, int], int] = field(default_factory=dict)
    minus: dict[tuple[int, int], int] = field(default_factory=dict)
    plus_diag: dict[int, int] = field(default_factory=dict)
    minus_diag: dict[int, int] = field(default_factory=dict)
    tprime: dict[int, int] = field(default_factory=dict)

    def dimension(self) -> int:
        d = _sp2_dim
        total = sum(m * 6 * d(a) * d(b) * d(c) for (a, b, c), m in self.triples.items())
        total += sum(m * 3 * d(a) * d(b) ** 2 for (a, b), m in self.plus.items())
        total += sum(m * 3 * d(a) * d(b) ** 2 for (a, b), m in self.minus.items())
        total += sum(m * d(a) ** 3 for a, m in self.plus_diag.items())
        total += sum(m * d(a) ** 3 for a, m in self.minus_diag.items())
        total += sum(m * 2 * d(a) ** 3 for a, m in self.tprime.items())
        return total

    def nonzero(self) -> dict[str, dict]:
        return {
            name: dict(getattr(self, name))
            for name in ("triples", "plus", "minus", "plus_diag", "minus_diag", "tprime")
            if getattr(self, name)
        }


def _transposition_sector(k: np.ndarray, off: int) -> dict[tuple[int, int], int]:
    """Coefficients of chi_a(y) chi_b(z) in chi_lambda at spectrum (y, w, -w), z = w^2."""
    size = k.shape[0]
    signs = np.array([(-1) ** ((e - off) % 2) for e in range(size)], dtype=np.int64)
    # F[e1, s] with s = e2 + e3 shifted by 2 * off
    f = np.zeros((size, 2 * size - 1), dtype=np.int64)
    for e3 in range(size):
        f[:, e3:e3 + size] += k[:, :, e3] * signs[e3]
    s_off = 2 * off
    if np.any(f[:, (s_off + 1) % 2::2]):
        raise BranchingError("odd powers of w in the transposition sector")

    def coef(e1: int, s: int) -> int:
        i, j = e1 + off, s + s_off
        if 0 <= i < size and 0 <= j < f.shape[1]:
            return int(f[i, j])
        return 0

    out = {}
    for a in range(off + 1):
        for b in range(off + 1):
            v = coef(a, 2 * b) - coef(a + 2, 2 * b) - coef(a, 2 * b + 4) + coef(a + 2, 2 * b + 4)
            if v:
                out[(a, b)] = v
    return out


def _three_cycle_sector(k: np.ndarray, off: int) -> dict[int, int]:
    """Coefficients of chi_a(v) in chi_lambda at spectrum (u, rho u, rho^2 u), v = u^3."""
    size = k.shape[0]
    e = np.arange(size) - off
    e1, e2, e3 = np.meshgrid(e, e, e, indexing="ij")
    total = (e1 + e2 + e3).ravel()
    phase = ((e2 + 2 * e3) % 3).ravel()
    flat = k.ravel()
    mask = flat != 0
    total, phase, flat = total[mask], phase[mask], flat[mask]
    values: dict[int, int] = {}
    buckets: dict[int, list[int]] = {}
    for s, r, c in zip(total.tolist(), phase.tolist(), flat.tolist()):
        buckets.setdefault(s, [0, 0, 0])[r] += c
    rho = Cyclotomic.zeta(3)
    for s, (c0, c1, c2) in buckets.items():
        value = Cyclotomic(c0) + rho * c1 + rho * rho * c2
        if not value.is_rational():
            raise BranchingError("three-cycle sector is not rational")
        q = value.to_rational()
        if q:
            if s % 3:
                raise BranchingError("three-cycle sector has exponent not divisible by 3")
            values[s // 3] = int(q)
    out = {}
    for t in values:
        if t >= 0:
            v = values.get(t, 0) - values.get(t + 2, 0)
            if v:
                out[t] = v
    return out


@lru_cache(maxsize=None)
def _restrict_wreath(parts: tuple[int, int, int]) -> GDecomposition:
    n = _sp2_cube_array(parts)
    k, off = weight_multiplicities(Partition(parts))
    sector_b = _transposition_sector(k, off)
    sector_c = _three_cycle_sector(k, off)
    dec = GDecomposition()
    used_b = set()
    for a, b, c in np.argwhere(n):
        a, b, c = int(a), int(b), int(c)
        if not a >= b >= c:
            continue
        count = int(n[a, b, c])
        if a > b > c:
            dec.triples[(a, b, c)] = count
        elif a == b == c:
            diff = sector_b.get((a, a), 0)
            used_b.add((a, a))
            cyc = sector_c.get(a, 0)
            # count = p + m + 2t, diff = p - m, cyc = p + m - t
            t3 = count - cyc
            if t3 % 3:
                raise BranchingError(f"non-integral T' multiplicity at {a}")
            t = t3 // 3
            s = cyc + t
            if (s + diff) % 2:
                raise BranchingError(f"non-integral sign multiplicity at {a}")
            p, m = (s + diff) // 2, (s - diff) // 2
            if min(p, m, t) < 0:
                raise BranchingError(f"negative multiplicity in orbit {(a, a, a)}")
            for store, v in ((dec.plus_diag, p), (dec.minus_diag, m), (dec.tprime, t)):
                if v:
                    store[a] = v
        else:
            single, double = (c, a) if a == b else (a, c)
            diff = sector_b.get((single, double), 0)
            used_b.add((single, double))
            if (count + diff) % 2 or abs(diff) > count:
                raise BranchingError(f"sector mismatch in orbit {(a, b, c)}")
            p, m = (count + diff) // 2, (count - diff) // 2
            if p:
                dec.plus[(single, double)] = p
            if m:
                dec.minus[(single, double)] = m
    leftover = {key: v for key, v in sector_b.items() if key not in used_b}
    if leftover:
        raise BranchingError(f"transposition sector has unmatched terms {leftover}")
    stray = {a for a in sector_c if a not in dec.plus_diag and a not in dec.minus_diag
             and a not in dec.tprime}
    if stray:
        raise BranchingError(f"three-cycle sector has unmatched terms {sorted(stray)}")
    return dec


def restrict_wreath(lam) -> GDecomposition:
    """Decomposition of V_lambda restricted to Sp(2)^3 x| S3."""
    return _restrict_wreath(as_partition(lam).parts)


# -- elementary symmetric functions -----------------------------------------


def _h_in_elementary(dmax: int) -> list[LaurentPoly]:
    """h_d of the six-letter alphabet as polynomials in w_k = e_k, k = 1, 2, 3."""
    w = [LaurentPoly.constant(3, 1)] + [LaurentPoly.variable(3, i) for i in range(3)]
    # the alphabet is closed under inversion with product 1, so e_4 = e_2, e_5 = e_1, e_6 = 1
    e = [w[0], w[1], w[2], w[3], w[2], w[1], w[0]]
    h = [LaurentPoly.constant(3, 1)]
    for d in range(1, dmax + 1):
        acc = LaurentPoly(3)
        for k in range(1, min(d, 6) + 1):
            term = e[k] * h[d - k]
            acc = acc + (term if k % 2 else -term)
        h.append(acc)
    return h


@lru_cache(maxsize=None)
def exterior_polynomial(lam) -> LaurentPoly:
    """chi_lambda as a polynomial in w1, w2, w3 standing for e_1, e_2, e_3 (i.e. wedge^k V)."""
    lam = as_partition(lam)
    h = _h_in_elementary(lam[0] + 4)
    return character_from_j(lam.parts, lambda d: h[d], LaurentPoly(3))


def substitute_exterior(poly: LaurentPoly) -> LaurentPoly:
    """Evaluate a polynomial in w1, w2, w3 at the formal characters of wedge^1, wedge^2, wedge^3."""
    x = [LaurentPoly.variable(3, i) for i in range(3)]
    alphabet = x + [LaurentPoly.variable(3, i, -1) for i in range(3)]
    e = [LaurentPoly.constant(3, 1)] + [LaurentPoly(3)] * 6
    for a in alphabet:
        e = [e[0]] + [e[k] + e[k - 1] * a for k in range(1, 7)]
    out = LaurentPoly(3)
    cache: dict[tuple[int, int, int], LaurentPoly] = {}
    for exps, c in poly.terms.items():
        if exps not in cache:
            term = LaurentPoly.constant(3, 1)
            for k, p in enumerate(exps):
                for _ in range(p):
                    term = term * e[k + 1]
            cache[exps] = term
        out = out + cache[exps] * c
    return out
