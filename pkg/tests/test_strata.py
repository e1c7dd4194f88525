import pytest

from genus3euler.fixtures import TABLE4, TABLE5, TABLE6
from genus3euler.lowgenus import H3Provider
from genus3euler.strata import (
    StrataEulerNumbers,
    euler_m3,
    euler_m3_nonhyp,
    euler_m3_nonhyp_general,
    invariant_vector,
)
from genus3euler.symplectic import partitions_up_to


def test_trivial_invariants():
    assert invariant_vector((0, 0, 0)) == (1,) * 13


def test_examples():
    assert euler_m3_nonhyp((0, 0, 0)) == 2
    assert euler_m3_nonhyp((8, 2, 0)) == 37


def test_euler_numbers_sum():
    # the combination with e0 = e8 = 0 reproduces the closed form
    assert StrataEulerNumbers().values() == (0, 0, 1, 0, -1, 0, -1, -1, 0, 1, 1, 1, 1)


@pytest.mark.parametrize("lam", list(TABLE4), ids=lambda t: ",".join(map(str, t)))
def test_table4(lam):
    h3, m30, m3 = TABLE4[lam]
    assert euler_m3_nonhyp(lam) == m30
    assert euler_m3(lam, H3Provider().lookup) == m3


@pytest.mark.parametrize("lam", list(TABLE5), ids=lambda t: ",".join(map(str, t)))
def test_table5(lam):
    assert euler_m3(lam, H3Provider().lookup) == TABLE5[lam]


@pytest.mark.parametrize("lam", list(TABLE6), ids=lambda t: ",".join(map(str, t)))
def test_table6_nonhyperelliptic(lam):
    assert euler_m3_nonhyp(lam) == TABLE6[lam][1]


def test_relations_between_invariants():
    for lam in partitions_up_to(20):
        k = invariant_vector(lam)
        assert k[0] - 3 * k[1] + 2 * k[2] == 0
        assert -k[0] + 3 * k[1] - 2 * k[4] - 2 * k[5] + 2 * k[8] == 0


@pytest.mark.parametrize("e0,e8", [(1, 0), (0, 1), (-3, 7), (5, -2)])
def test_free_parameters_drop_out(e0, e8):
    for lam in partitions_up_to(16):
        assert euler_m3_nonhyp_general(lam, e0, e8) == euler_m3_nonhyp(lam)


def test_invariants_monotone_in_subgroups():
    """If G_i is contained in G_j (as matrix groups) then k_i >= k_j."""
    from genus3euler.strata_data import STRATA, stratum_group

    sets = [set(stratum_group(s.index).elements) for s in STRATA]
    pairs = [(i, j) for i in range(13) for j in range(13) if i != j and sets[i] <= sets[j]]
    assert (1, 2) in pairs and (2, 7) in pairs
    for lam in partitions_up_to(10):
        k = invariant_vector(lam)
        assert all(k[i] >= k[j] for i, j in pairs)
