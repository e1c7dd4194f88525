"""Euler characteristics of V_lambda on A3.

A3 is the disjoint union of the Jacobians of non-hyperelliptic curves, of
hyperelliptic curves, of products (genus-2 Jacobian) x (elliptic curve), and
of products of three elliptic curves.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache

from .branching import restrict_sp4_sp2, restrict_wreath
from .lowgenus import CoverageError, H3Provider, M2Provider, bootstrap_m2, euler_a1
from .strata import euler_m3_nonhyp
from .symplectic import as_partition


def binom2(n: int) -> int:
    """n choose 2 as a polynomial in n."""
    return n * (n - 1) // 2


def binom3(n: int) -> int:
    """n choose 3 as a polynomial in n."""
    return n * (n - 1) * (n - 2) // 6


def euler_a111(lam) -> int:
    """e_c(A_{1,1,1}, V_lambda) from the Sp(2)^3 x| S3 decomposition."""
    dec = restrict_wreath(lam)
    e = euler_a1
    total = 0
    for (a, b, c), m in dec.triples.items():
        total += m * e(a) * e(b) * e(c)
    for (a, b), m in dec.plus.items():
        total += m * e(a) * binom2(e(b) + 1)
    for (a, b), m in dec.minus.items():
        total += m * e(a) * binom2(e(b))
    for a, m in dec.plus_diag.items():
        total += m * binom3(e(a) + 2)
    for a, m in dec.minus_diag.items():
        total += m * binom3(e(a))
    for a, m in dec.tprime.items():
        # T'_a = R+_{a,a} - R+_a
        total += m * (e(a) * binom2(e(a) + 1) - binom3(e(a) + 2))
    return total


def euler_kunneth(lam, m2: M2Provider) -> int:
    """e_c(M2 x A1, V_lambda) = sum m_{mu,nu} e_c(M2, V_mu) e_c(A1, V_nu)."""
    total = 0
    for (mu, nu), m in restrict_sp4_sp2(lam).items():
        e = euler_a1(nu)
        if e == 0 or sum(mu) % 2:
            continue
        total += m * m2.lookup(mu) * e
    return total


@dataclass(frozen=True)
class A3Breakdown:
    m30_term: int
    h3_term: int
    kunneth_term: int
    a111_term: int

    @property
    def total(self) -> int:
        return self.m30_term + self.h3_term + self.kunneth_term + self.a111_term

    def as_dict(self) -> dict[str, int]:
        d = asdict(self)
        d["total"] = self.total
        return d


@dataclass(frozen=True)
class Providers:
    h3: H3Provider
    m2: M2Provider | None


@lru_cache(maxsize=1)
def _bootstrapped_m2() -> M2Provider:
    return bootstrap_m2().provider


def default_providers(h3_file=None, m2_file=None, bootstrap: bool = True) -> Providers:
    h3 = H3Provider.with_file(h3_file)
    if bootstrap:
        m2 = _bootstrapped_m2().with_file(m2_file)
    elif m2_file:
        m2 = M2Provider({}, "file").with_file(m2_file)
    else:
        m2 = None
    return Providers(h3, m2)


def euler_a3(lam, providers: Providers | None = None) -> A3Breakdown:
    """Per-stratum breakdown of e_c(A3, V_lambda).

    In odd weight the M3^0 term is zero by definition (the -1 automorphism
    kills V_lambda on the Jacobian locus); the other terms are still computed
    and vanish by parity.
    """
    lam = as_partition(lam)
    providers = providers or default_providers()
    errors = []
    terms = {}
    terms["m30_term"] = euler_m3_nonhyp(lam) if lam.weight % 2 == 0 else 0
    try:
        terms["h3_term"] = providers.h3.lookup(lam)
    except CoverageError as exc:
        errors.append(f"H3 term: {exc}")
    if providers.m2 is None:
        errors.append("M2 x A1 term: no genus-2 table loaded")
    else:
        try:
            terms["kunneth_term"] = euler_kunneth(lam, providers.m2)
        except CoverageError as exc:
            errors.append(f"M2 x A1 term: {exc}")
    terms["a111_term"] = euler_a111(lam)
    if errors:
        raise CoverageError("; ".join(errors))
    return A3Breakdown(**terms)
