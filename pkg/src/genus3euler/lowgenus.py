"""Euler characteristics on the lower strata of A3: A1, M2 and the hyperelliptic locus H3."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .exactnum import solve_square
from .fixtures import TABLE4, TABLE6, TABLE7
from .symplectic import Partition, as_partition, partitions_up_to

log = logging.getLogger(__name__)


class CoverageError(LookupError):
    """A provider has no data for the requested partition."""


def euler_a1(k: int) -> int:
    """e_c(A1, V_k).

    Generic stratum (Euler number -1, automorphisms +-1) plus the two points
    with automorphism groups of orders 4 and 6; the invariants of a generator
    zeta on V_k are the weights k - 2j with zeta^(k-2j) = 1.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k % 2:
        return 0
    if k == 0:
        return 1
    fixed4 = sum(1 for j in range(k + 1) if (k - 2 * j) % 4 == 0)
    fixed6 = sum(1 for j in range(k + 1) if (k - 2 * j) % 6 == 0)
    return -(k + 1) + fixed4 + fixed6


def read_table(path: str | Path, nparts: int) -> dict[tuple[int, ...], int]:
    """Read 'p1,...,p_n,value' records; '#' starts a comment."""
    table: dict[tuple[int, ...], int] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != nparts + 1:
            raise ValueError(f"{path}:{lineno}: expected {nparts + 1} fields, got {len(fields)}")
        try:
            nums = [int(f) for f in fields]
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: non-integer field") from exc
        lam = Partition(tuple(nums[:nparts]))
        table[lam.parts] = nums[-1]
    return table


def write_table(path: str | Path, table: dict[tuple[int, ...], int], header: str = "") -> None:
    lines = [f"# {header}"] if header else []
    lines += [",".join(map(str, k)) + f",{v}" for k, v in sorted(table.items(), key=_table_order)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _table_order(item):
    key = item[0]
    return (sum(key), tuple(-x for x in key))


def _builtin_h3() -> dict[tuple[int, int, int], int]:
    table = {lam: row[0] for lam, row in TABLE4.items()}
    table.update({lam: row[0] for lam, row in TABLE6.items()})
    return table


@dataclass(frozen=True)
class H3Provider:
    """e_c(H3, V'_lambda): zero in odd weight, otherwise table lookup."""

    table: dict[tuple[int, int, int], int] = field(default_factory=_builtin_h3)
    extension: dict[tuple[int, int, int], int] = field(default_factory=dict)

    @classmethod
    def with_file(cls, path: str | Path | None) -> "H3Provider":
        return cls(extension=read_table(path, 3) if path else {})

    def covers(self, lam) -> bool:
        lam = as_partition(lam)
        return lam.weight % 2 == 1 or lam.parts in self.extension or lam.parts in self.table

    def lookup(self, lam) -> int:
        lam = as_partition(lam)
        if lam.weight % 2:
            return 0
        if lam.parts in self.extension:
            return self.extension[lam.parts]
        if lam.parts in self.table:
            return self.table[lam.parts]
        raise CoverageError(
            f"hyperelliptic data unavailable for lambda=({lam}); supply extension file "
            "(--h3-table; built-in data covers even weight <= 10 and five weight-40 rows)"
        )

    __call__ = lookup


def h3_lookup(lam, provider: H3Provider | None = None) -> int:
    return (provider or H3Provider()).lookup(lam)


@dataclass(frozen=True)
class M2Provider:
    """e_c(M2, V_mu) for 2-part mu: zero in odd weight, otherwise table lookup."""

    table: dict[tuple[int, int], int]
    provenance: str = "bootstrap"

    def with_file(self, path: str | Path | None) -> "M2Provider":
        if not path:
            return self
        merged = dict(self.table)
        merged.update(read_table(path, 2))
        return M2Provider(merged, f"{self.provenance}+file")

    def covers(self, mu) -> bool:
        mu = as_partition(mu, 2)
        return mu.weight % 2 == 1 or mu.parts in self.table

    def lookup(self, mu) -> int:
        mu = as_partition(mu, 2)
        if mu.weight % 2:
            return 0
        try:
            return self.table[mu.parts]
        except KeyError:
            top = max((sum(k) for k in self.table), default=-1)
            raise CoverageError(
                f"genus-2 data unavailable for mu=({mu}); the table covers even weight "
                f"<= {top}; supply extension file (--m2-table)"
            ) from None

    __call__ = lookup


# -- bootstrap ---------------------------------------------------------------


def m2_unknowns(max_weight: int = 10) -> list[Partition]:
    return [mu for mu in partitions_up_to(max_weight, 2) if mu.weight % 2 == 0]


def independent_rows(rows: Sequence[Sequence[Fraction]], order: Iterable[int]) -> list[int]:
    """Greedily pick rows, in the given order, that raise the rank."""
    basis: list[tuple[int, list[Fraction]]] = []  # (pivot column, reduced row)
    chosen = []
    width = len(rows[0])
    for r in order:
        v = [Fraction(x) for x in rows[r]]
        for piv, b in basis:
            if v[piv]:
                f = v[piv] / b[piv]
                v = [x - f * y for x, y in zip(v, b)]
        piv = next((i for i in range(width) if v[i]), None)
        if piv is None:
            continue
        basis.append((piv, v))
        chosen.append(r)
        if len(chosen) == width:
            break
    return chosen


@dataclass(frozen=True)
class BootstrapResult:
    provider: M2Provider
    unknowns: tuple[Partition, ...]
    rows: tuple[Partition, ...]
    used: tuple[Partition, ...]
    held_out: tuple[Partition, ...]
    # equations that are the sole constraint on some unknown; their anchor
    # values enter the solution but no other equation can contradict them
    critical: tuple[Partition, ...] = ()


class BootstrapError(ArithmeticError):
    pass


def bootstrap_system(
    anchors: dict[tuple[int, int, int], int] | None = None,
    h3: H3Provider | None = None,
    max_weight: int = 10,
):
    """The linear system for e_c(M2, V_mu) read off from known A3 values.

    Returns (rows, unknowns, matrix, rhs) with one equation per anchor:
    A3 - M3^0 - H3 - A111 = sum_{mu, nu} m_{mu, nu} x_mu e_c(A1, V_nu).
    """
    from .a3 import euler_a111
    from .branching import restrict_sp4_sp2
    from .strata import euler_m3_nonhyp

    h3 = h3 or H3Provider()
    if anchors is None:
        anchors = {k: v for k, v in TABLE7.items() if sum(k) <= max_weight}
    unknowns = m2_unknowns(max_weight)
    index = {mu.parts: i for i, mu in enumerate(unknowns)}
    rows, matrix, rhs = [], [], []
    for parts in sorted(anchors, key=lambda p: (sum(p), tuple(-x for x in p))):
        lam = Partition(parts)
        if lam.weight % 2:
            continue
        coeffs = [0] * len(unknowns)
        for (mu, nu), m in restrict_sp4_sp2(lam).items():
            e = euler_a1(nu)
            if e and sum(mu) % 2 == 0:
                if mu not in index:
                    raise BootstrapError(f"anchor {lam} needs mu={mu} beyond the unknowns")
                coeffs[index[mu]] += m * e
        target = anchors[parts] - euler_m3_nonhyp(lam) - h3.lookup(lam) - euler_a111(lam)
        rows.append(lam)
        matrix.append(coeffs)
        rhs.append(target)
    return rows, unknowns, matrix, rhs


def rank_critical_rows(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Rows whose removal lowers the rank of the system."""
    full = len(independent_rows(matrix, range(len(matrix))))
    return [
        r for r in range(len(matrix))
        if len(independent_rows(matrix, [i for i in range(len(matrix)) if i != r])) < full
    ]


def bootstrap_m2(
    anchors: dict[tuple[int, int, int], int] | None = None,
    h3: H3Provider | None = None,
    max_weight: int = 10,
    reverse: bool = False,
) -> BootstrapResult:
    """Solve for e_c(M2, V_mu), even |mu| <= max_weight, from A3 anchor values.

    An independent square subset of the equations is solved exactly; every
    remaining equation must then hold (they are held-out checks).
    """
    rows, unknowns, matrix, rhs = bootstrap_system(anchors, h3, max_weight)
    order = range(len(rows) - 1, -1, -1) if reverse else range(len(rows))
    chosen = independent_rows(matrix, order)
    if len(chosen) < len(unknowns):
        raise BootstrapError(f"rank {len(chosen)} < {len(unknowns)} unknowns")
    square = [[Fraction(x) for x in matrix[r]] + [Fraction(rhs[r])] for r in chosen]
    solution = solve_square(square)
    for mu, x in zip(unknowns, solution):
        if x.denominator != 1:
            raise BootstrapError(f"non-integral e_c(M2, V_{mu}) = {x}")
    values = [int(x) for x in solution]
    for r, (coeffs, b) in enumerate(zip(matrix, rhs)):
        if sum(c * x for c, x in zip(coeffs, values)) != b:
            raise BootstrapError(f"inconsistent equation for lambda = {rows[r]}")
    table = {mu.parts: v for mu, v in zip(unknowns, values)}
    used = tuple(rows[r] for r in sorted(chosen))
    held = tuple(rows[r] for r in range(len(rows)) if r not in set(chosen))
    log.info("bootstrapped %d genus-2 values from %d equations", len(table), len(rows))
    critical = tuple(rows[r] for r in rank_critical_rows(matrix))
    return BootstrapResult(M2Provider(table), tuple(unknowns), tuple(rows), used, held, critical)
