import pytest

from genus3euler.a3 import (
    A3Breakdown,
    Providers,
    binom2,
    binom3,
    default_providers,
    euler_a111,
    euler_a3,
    euler_kunneth,
)
from genus3euler.fixtures import TABLE6, TABLE7
from genus3euler.lowgenus import CoverageError, H3Provider, M2Provider
from genus3euler.symplectic import partitions_up_to


def test_polynomial_binomials():
    assert binom2(0) == 0 and binom2(-1) == 1
    assert binom3(-1) == -1 and binom3(3) == 1 and binom3(2) == 0


def test_a111_examples():
    assert euler_a111((0, 0, 0)) == 1
    for lam, row in TABLE6.items():
        assert euler_a111(lam) == row[3]


def test_kunneth_trivial():
    assert euler_kunneth((0, 0, 0), M2Provider({(0, 0): 1})) == 1


def test_trivial_local_system():
    b = euler_a3((0, 0, 0))
    assert (b.m30_term, b.h3_term, b.kunneth_term, b.a111_term) == (2, 1, 1, 1)
    assert b.total == 5


@pytest.mark.parametrize("lam", [k for k in TABLE7 if sum(k) <= 10], ids=lambda t: ",".join(map(str, t)))
def test_table7(lam):
    assert euler_a3(lam).total == TABLE7[lam]


def test_table7_spot_checks():
    assert euler_a3((2, 1, 1)).total == 1
    assert euler_a3((9, 1, 0)).total == 0


def test_odd_weight_vanishing():
    providers = Providers(H3Provider(), M2Provider({}))
    for lam in partitions_up_to(19):
        if lam.weight % 2:
            assert euler_a3(lam, providers) == A3Breakdown(0, 0, 0, 0)


def test_breakdown_dict():
    d = euler_a3((0, 0, 0)).as_dict()
    assert d == {"m30_term": 2, "h3_term": 1, "kunneth_term": 1, "a111_term": 1, "total": 5}


def test_weight40_needs_extension(tmp_path):
    with pytest.raises(CoverageError, match="M2 x A1"):
        euler_a3((40, 0, 0))
    # an extension table is accepted; with the true genus-2 values the M2 x A1
    # column would be reproduced, which the bundled data cannot provide
    f = tmp_path / "m2.csv"
    extra = [(a, b) for a in range(41) for b in range(a + 1) if (a + b) % 2 == 0 and 10 < a + b <= 40]
    f.write_text("".join(f"{a},{b},0\n" for a, b in extra), encoding="utf-8")
    b = euler_a3((40, 0, 0), default_providers(m2_file=f))
    assert b.m30_term == TABLE6[(40, 0, 0)][1]
    assert b.h3_term == TABLE6[(40, 0, 0)][0]
    assert b.a111_term == TABLE6[(40, 0, 0)][3]


def test_h3_coverage_reported_per_term():
    with pytest.raises(CoverageError, match="H3 term"):
        euler_a3((12, 0, 0), Providers(H3Provider(), M2Provider({})))
