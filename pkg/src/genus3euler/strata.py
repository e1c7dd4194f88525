"""Euler characteristics of V'_lambda on the non-hyperelliptic locus M3^0 and on M3.

The locus is stratified by automorphism group; the Euler characteristic is
sum_i e_i * k_i(lambda), with e_i the Euler number of stratum i and
k_i = dim V_lambda^{G_i}.  Only e_0 and e_8 are left undetermined by the
relations below, and the total does not depend on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .strata_data import STRATA, stratum_group
from .symplectic import as_partition, invariant_dimension


@dataclass(frozen=True)
class StrataEulerNumbers:
    e0: int = 0
    e8: int = 0

    def values(self) -> tuple[int, ...]:
        e0, e8 = self.e0, self.e8
        return (
            e0,
            -3 * e0,
            2 * e0 + e8 + 1,
            0,
            -e8 - 1,
            -e8,
            -1,
            -1,
            e8,
            1,
            1,
            1,
            1,
        )


def validate_strata() -> None:
    """Generate every stratum group; raises if any order differs from its table value."""
    for spec in STRATA:
        stratum_group(spec.index)


@lru_cache(maxsize=None)
def _invariant_vector(parts: tuple[int, int, int]) -> tuple[int, ...]:
    return tuple(invariant_dimension(parts, stratum_group(i)) for i in range(len(STRATA)))


def invariant_vector(lam) -> tuple[int, ...]:
    """(k_0, ..., k_12) with k_i = dim V_lambda^{G_i}."""
    return _invariant_vector(as_partition(lam).parts)


def euler_m3_nonhyp(lam) -> int:
    k = invariant_vector(lam)
    return k[2] - k[4] - k[6] - k[7] + k[9] + k[10] + k[11] + k[12]


def euler_m3_nonhyp_general(lam, e0: int = 0, e8: int = 0) -> int:
    """sum_i e_i k_i with the stratum Euler numbers parameterized by (e0, e8)."""
    k = invariant_vector(lam)
    e = StrataEulerNumbers(e0, e8).values()
    return sum(a * b for a, b in zip(e, k))


def euler_m3(lam, h3: Callable[[object], int]) -> int:
    """M3 = M3^0 plus the hyperelliptic locus; h3 gives the latter (e.g. H3Provider.lookup)."""
    return euler_m3_nonhyp(lam) + h3(as_partition(lam))
