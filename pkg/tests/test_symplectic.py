import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genus3euler.laurent import LaurentPoly
from genus3euler.strata_data import STRATA, stratum_group
from genus3euler.symplectic import (
    Partition,
    PartitionError,
    _det,
    complete_homogeneous_list,
    dimension,
    formal_alphabet,
    formal_character,
    group_spectra,
    invariant_dimension,
    partitions_of,
    partitions_up_to,
    symplectic_character,
    weyl_dimension,
)


def test_parse():
    assert Partition.parse("8,2,0") == Partition((8, 2, 0))
    assert Partition.parse("3") == Partition((3, 0, 0))
    assert Partition.parse("2,1", 2) == Partition((2, 1))
    assert str(Partition((4, 1, 1))) == "4,1,1"
    for bad in ("1,2,0", "a,b", "1,1,1,1", "", "-1,0,0"):
        with pytest.raises(PartitionError):
            Partition.parse(bad)


def test_partition_counts_and_order():
    assert len(partitions_up_to(10)) == 67
    assert [str(p) for p in partitions_of(4)] == ["4,0,0", "3,1,0", "2,2,0", "2,1,1"]


@pytest.mark.parametrize("lam", partitions_up_to(8), ids=str)
def test_weyl_oracle(lam):
    assert dimension(lam) == weyl_dimension(lam)


def test_small_genus_dimensions():
    assert dimension(Partition((1, 0))) == 4
    assert dimension(Partition((1, 1))) == 5
    assert dimension(Partition((2, 0))) == 10
    for k in range(8):
        assert dimension(Partition((k,))) == k + 1


def _printed_form(parts, h):
    # rows (J_{l+2}, J_{l+2} + J_l, J_{l-1}) with l = lambda_i - i, as typeset
    def j(d):
        return h[d] if 0 <= d < len(h) else 0

    rows = []
    for i, p in enumerate(parts, 1):
        l = p - i
        rows.append([j(l + 2), j(l + 2) + j(l), j(l - 1)])
    return _det(rows)


def test_printed_row_form_fails_oracle():
    """The determinant rows as typeset do not give the dimension; the corrected rows do."""
    h = complete_homogeneous_list(12, [1] * 6)
    failures = [lam for lam in partitions_up_to(8) if _printed_form(lam.parts, h) != weyl_dimension(lam)]
    assert len(failures) > len(partitions_up_to(8)) // 2
    assert _printed_form((0, 0, 0), h) != 1


def test_formal_wedge2():
    chi = formal_character((1, 1, 0))
    assert len(chi) == 13
    assert chi.coefficient((1, 1, 0)) == 1
    assert chi.coefficient((0, 0, 0)) == 2
    assert chi.total() == 14


def test_formal_wedge2_brute_force():
    xs = formal_alphabet(3)
    e2 = sum((a * b for a, b in itertools.combinations(xs, 2)), LaurentPoly(3))
    assert formal_character((1, 1, 0)) == e2 - 1


@pytest.mark.parametrize("d", range(6))
def test_newton_matches_monomial_expansion(d):
    xs = formal_alphabet(3)
    h = complete_homogeneous_list(d, xs, LaurentPoly.constant(3, 1))
    brute = LaurentPoly(3)
    for combo in itertools.combinations_with_replacement(range(6), d):
        term = LaurentPoly.constant(3, 1)
        for k in combo:
            term = term * xs[k]
        brute = brute + term
    assert h[d] == brute


def _random_spectra(count=50, seed=7):
    rng = random.Random(seed)
    pool = [E for spec in STRATA for E, _ in group_spectra(stratum_group(spec.index))]
    return [rng.choice(pool) for _ in range(count)]


def test_character_reality():
    spectra = _random_spectra()
    for lam in partitions_up_to(8):
        for E in spectra[:10]:
            chi = symplectic_character(lam, E)
            assert chi == symplectic_character(lam, E.inverted())
            assert chi == chi.conjugate()


def test_formal_character_matches_specialization():
    spectra = _random_spectra(5, seed=3)
    for lam in partitions_up_to(5):
        chi = formal_character(lam)
        for E in spectra:
            vals = E.values()
            # alphabet order is x1, x1^-1, x2, ...; any pairing of inverse pairs works
            a, b, c = _half(vals)
            total = 0
            for exps, coeff in chi.terms.items():
                total = total + coeff * (a ** exps[0]) * (b ** exps[1]) * (c ** exps[2])
            assert total == symplectic_character(lam, E)


def _half(vals):
    rest = list(vals)
    half = []
    while rest:
        v = rest.pop(0)
        rest.remove(v.inverse())
        half.append(v)
    return half


@given(st.sampled_from(partitions_up_to(12)), st.sampled_from(range(len(STRATA))))
def test_invariants_bounded_by_dimension(lam, i):
    k = invariant_dimension(lam, stratum_group(i))
    assert 0 <= k <= dimension(lam)
    if i == 0:
        assert k == dimension(lam)


def test_character_parity():
    """Every monomial of chi_lambda has total degree congruent to |lambda| mod 2."""
    for lam in partitions_up_to(9):
        assert all(sum(e) % 2 == lam.weight % 2 for e in formal_character(lam).terms)
