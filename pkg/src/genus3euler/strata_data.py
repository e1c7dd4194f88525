"""Automorphism groups of smooth plane quartics, as matrices on H^0(C, Omega^1).

One entry per stratum of the non-hyperelliptic locus, indexed 0..12, with the
group name, its order, the dimension of the stratum, and generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactnum import Cyclotomic, imag_unit, sqrt2, sqrt_minus7
from .matgroup import CycMatrix, FiniteGroup, generate_group


@dataclass(frozen=True)
class StratumSpec:
    index: int
    group_name: str
    expected_order: int
    generators: tuple[CycMatrix, ...]
    expected_dim: int


def _z(n: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic.zeta(n, k)


def _klein_generator() -> CycMatrix:
    # (i, j) entry (zeta_7^(2ij) - zeta_7^(-2ij)) / (-sqrt(-7)), i, j = 1..3
    scale = (-sqrt_minus7()).inverse()
    rows = [[(_z(7, 2 * i * j) - _z(7, -2 * i * j)) * scale for j in (1, 2, 3)] for i in (1, 2, 3)]
    return CycMatrix.from_rows(rows)


def _build() -> tuple[StratumSpec, ...]:
    i = imag_unit()
    z3, z8 = _z(3), _z(8)
    r2 = sqrt2()
    inv_r2 = r2.inverse()
    swap_neg = CycMatrix.from_rows([[-1, 0, 0], [0, 0, -1], [0, -1, 0]])
    rot = CycMatrix.from_rows([[1, 0, 0], [0, 0, -1], [0, 1, 0]])
    cyc = CycMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    g10a = CycMatrix.from_rows([[r2 * z3, 0, 0], [0, z8, z8 ** 3], [0, z8, z8 ** 7]]).scale(inv_r2)
    g10b = CycMatrix.from_rows(
        [[-r2 * z3 ** 2, 0, 0], [0, z8 ** 5, z8], [0, z8 ** 7, z8 ** 7]]
    ).scale(inv_r2)
    data = [
        (0, "1", 1, (), 6),
        (1, "Z/2", 2, (CycMatrix.diag(-1, 1, -1),), 4),
        (2, "V4", 4, (CycMatrix.diag(-1, 1, -1), CycMatrix.diag(-1, -1, 1)), 3),
        (3, "Z/3", 3, (CycMatrix.diag(z3 ** 2, z3, z3),), 2),
        (4, "S3", 6, (swap_neg, CycMatrix.diag(1, z3, z3 ** 2)), 2),
        (5, "D4", 8, (swap_neg, CycMatrix.diag(1, i, -i)), 2),
        (6, "Z/6", 6, (CycMatrix.diag(-(z3 ** 2), z3, -z3),), 1),
        (7, "Gamma16", 16, (CycMatrix.diag(-1, 1, -1), CycMatrix.diag(1, i, -i), rot), 1),
        (8, "S4", 24, (cyc, rot), 1),
        (9, "Z/9", 9, (CycMatrix.diag(_z(9, 2), _z(9, 4), _z(9, 1)),), 0),
        (10, "Gamma48", 48, (g10a, g10b), 0),
        (11, "Gamma96", 96, (cyc, CycMatrix.from_rows([[0, 0, -i], [0, i, 0], [-1, 0, 0]])), 0),
        (12, "Gamma168", 168, (CycMatrix.diag(_z(7), _z(7, 4), _z(7, 2)), _klein_generator()), 0),
    ]
    return tuple(StratumSpec(*row) for row in data)


STRATA: tuple[StratumSpec, ...] = _build()


@lru_cache(maxsize=None)
def stratum_group(index: int) -> FiniteGroup:
    """The generated group of a stratum; fails loudly if its order is off."""
    spec = STRATA[index]
    group = generate_group(spec.generators, order_cap=200, label=index)
    if group.order != spec.expected_order:
        raise RuntimeError(
            f"stratum {index} ({spec.group_name}): generated order {group.order}, "
            f"expected {spec.expected_order}"
        )
    return group
