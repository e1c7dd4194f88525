from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genus3euler.exactnum import (
    Cyclotomic,
    cyclotomic_polynomial,
    euler_phi,
    imag_unit,
    normal_conductor,
    solve_square,
    sqrt2,
    sqrt_minus7,
)

CONDUCTORS = (1, 3, 4, 7, 8, 9, 12, 24, 56)


@st.composite
def cyclotomics(draw, n=None):
    n = n or draw(st.sampled_from(CONDUCTORS))
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    den = draw(st.integers(1, 3))
    return Cyclotomic.from_exponents(n, coeffs) / den


def test_zeta3_relation():
    z = Cyclotomic.zeta(3)
    assert z + z ** 2 == -1
    assert (z + z ** 2).is_rational()


def test_quadratic_constants():
    assert sqrt2() ** 2 == 2
    assert imag_unit() ** 2 == -1
    assert sqrt_minus7() ** 2 == -7
    assert sqrt2() * sqrt2().inverse() == 1


def test_sqrt_minus7_is_gauss_sum():
    # sum over quadratic residues minus non-residues mod 7
    g = sum((Cyclotomic.zeta(7, k) for k in (1, 2, 4)), Cyclotomic(0))
    g = g - sum((Cyclotomic.zeta(7, k) for k in (3, 5, 6)), Cyclotomic(0))
    assert g == sqrt_minus7()
    assert abs(complex(g) - 7 ** 0.5 * 1j) < 1e-12


def test_zeta8_inverse():
    assert Cyclotomic.zeta(8).inverse() == -Cyclotomic.zeta(8, 3)


def test_minimal_conductor():
    assert Cyclotomic.zeta(6).conductor == 3
    assert (Cyclotomic.zeta(12, 4)).conductor == 3
    assert Cyclotomic(Fraction(2, 3)).conductor == 1
    assert (sqrt2() * sqrt2()).conductor == 1
    assert normal_conductor(14) == 7 and normal_conductor(12) == 12


def test_cyclotomic_polynomial_degree():
    for n in range(1, 40):
        assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


def test_non_rational_raises():
    with pytest.raises(ValueError):
        Cyclotomic.zeta(4).to_rational()


def test_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic(0).inverse()


def test_equality_across_embeddings():
    # zeta_4 written in Q(zeta_8) and Q(zeta_12)
    assert Cyclotomic.zeta(8, 2) == Cyclotomic.zeta(12, 3) == imag_unit()
    assert hash(Cyclotomic(3)) == hash(Fraction(3))


@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(cyclotomics())
def test_inverse(a):
    if a.is_zero():
        return
    assert a * a.inverse() == 1


@given(cyclotomics())
def test_conjugation(a):
    assert a.conjugate().conjugate() == a
    assert abs(complex(a.conjugate()) - complex(a).conjugate()) < 1e-9
    assert (a * a.conjugate()).galois(-1) == a * a.conjugate()


@given(cyclotomics(), cyclotomics())
def test_complex_embedding_is_homomorphism(a, b):
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-8
    assert abs(complex(a + b) - complex(a) - complex(b)) < 1e-9


def test_solve_square():
    rows = [[Fraction(2), Fraction(1), Fraction(3)], [Fraction(1), Fraction(-1), Fraction(0)]]
    assert solve_square(rows) == [1, 1]
