import pytest

from genus3euler.exactnum import Cyclotomic, imag_unit, sqrt_minus7
from genus3euler.matgroup import (
    CycMatrix,
    EigenvalueSystem,
    eigenvalues_h1,
    element_order,
    generate_group,
)
from genus3euler.strata_data import STRATA, stratum_group

TABLE1_ORDERS = (1, 2, 4, 3, 6, 8, 6, 16, 24, 9, 48, 96, 168)


def test_cyclic_group():
    z = Cyclotomic.zeta(9)
    g = generate_group([CycMatrix.diag(z ** 2, z ** 4, z)])
    assert g.order == 9


def test_gamma16_order():
    i = imag_unit()
    gens = [
        CycMatrix.diag(-1, 1, -1),
        CycMatrix.diag(1, i, -i),
        CycMatrix.from_rows([[1, 0, 0], [0, 0, -1], [0, 1, 0]]),
    ]
    assert generate_group(gens).order == 16


@pytest.mark.parametrize("spec", STRATA, ids=lambda s: f"G{s.index}")
def test_stratum_orders(spec):
    assert stratum_group(spec.index).order == TABLE1_ORDERS[spec.index] == spec.expected_order


def test_klein_group_sign():
    """With the opposite sign of sqrt(-7) the generators no longer close on 168 elements."""
    z = Cyclotomic.zeta
    scale = sqrt_minus7().inverse()  # sign flipped
    rows = [[(z(7, 2 * i * j) - z(7, -2 * i * j)) * scale for j in (1, 2, 3)] for i in (1, 2, 3)]
    bad = CycMatrix.from_rows(rows)
    g = generate_group([CycMatrix.diag(z(7), z(7, 4), z(7, 2)), bad], order_cap=400)
    assert g.order == 336


def test_cap_exceeded():
    z = Cyclotomic.zeta(7)
    with pytest.raises(Exception):
        generate_group([CycMatrix.diag(z, 1, 1)], order_cap=5)


def test_element_orders():
    i = imag_unit()
    assert element_order(CycMatrix.identity()) == 1
    assert element_order(CycMatrix.diag(1, i, -i)) == 4
    assert element_order(CycMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])) == 3


def test_eigenvalues_examples():
    i = imag_unit()
    E = eigenvalues_h1(CycMatrix.diag(1, i, -i))
    assert E == EigenvalueSystem.from_half([(1, 0), (4, 1), (4, 3)])
    E = eigenvalues_h1(CycMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]]))
    assert E == EigenvalueSystem.from_half([(1, 0), (3, 1), (3, 2)])


def test_eigenvalue_system_validation():
    with pytest.raises(ValueError):
        EigenvalueSystem(((4, 1),) * 6)
    with pytest.raises(ValueError):
        EigenvalueSystem(((1, 0),) * 4)


@pytest.mark.parametrize("index", [3, 7, 8, 10, 12])
def test_spectra_consistent_with_traces(index):
    """Eigenvalues (on H^1, i.e. the matrix and its conjugate) reproduce traces and orders."""
    for m in stratum_group(index):
        E = eigenvalues_h1(m)
        vals = E.values()
        total = sum(vals, Cyclotomic(0))
        assert total == m.trace() + m.trace().conjugate()
        assert E.modulus == element_order(m)
        assert E.inverted() == E
