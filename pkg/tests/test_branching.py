from collections import Counter

import pytest

from genus3euler.branching import (
    GDecomposition,
    character_from_weights,
    exterior_polynomial,
    peel_sp2_cube,
    peel_sp4_sp2,
    restrict_sp4_sp2,
    restrict_wreath,
    sp2_cube_multiplicities,
    substitute_exterior,
)
from genus3euler.laurent import LaurentPoly
from genus3euler.symplectic import formal_character, partitions_up_to, weyl_dimension


def _add(*decs: GDecomposition) -> dict:
    out = {}
    for d in decs:
        for name, part in d.nonzero().items():
            acc = Counter(out.get(name, {}))
            acc.update(part)
            out[name] = dict(acc)
    return out


def test_small_wreath_examples():
    assert restrict_wreath((0, 0, 0)).nonzero() == {"plus_diag": {0: 1}}
    assert restrict_wreath((1, 0, 0)).nonzero() == {"plus": {(1, 0): 1}}
    assert restrict_wreath((1, 1, 0)).nonzero() == {"minus": {(0, 1): 1}, "tprime": {0: 1}}
    assert restrict_wreath((1, 1, 1)).nonzero() == {"minus": {(1, 0): 1}, "minus_diag": {1: 1}}
    assert restrict_wreath((2, 0, 0)).nonzero() == {"plus": {(0, 1): 1, (2, 0): 1}}


def test_exterior_powers():
    """wedge^k of W1 + W2 + W3 (each Wi the standard Sp(2) module), worked out by hand.

    wedge^1 = V_1 x V_0 x V_0 induced with trivial swap.
    wedge^2 = three wedge^2 Wi (permutation module: trivial + 2-dim) plus the Wi x Wj
              with the swap acting by -1.
    wedge^3 = W1 x W2 x W3 with S3 acting by sign, plus wedge^2 Wi x Wj (i != j),
              which is V_1 x V_0 x V_0 with both swap signs.
    """
    w1 = {"plus": {(1, 0): 1}}
    w2 = {"plus_diag": {0: 1}, "tprime": {0: 1}, "minus": {(0, 1): 1}}
    w3 = {"minus_diag": {1: 1}, "plus": {(1, 0): 1}, "minus": {(1, 0): 1}}
    assert restrict_wreath((1, 0, 0)).nonzero() == w1
    # wedge^2 V = V_{1,1} + 1, wedge^3 V = V_{1,1,1} + V_{1}
    assert _add(restrict_wreath((1, 1, 0)), restrict_wreath((0, 0, 0))) == w2
    assert _add(restrict_wreath((1, 1, 1)), restrict_wreath((1, 0, 0))) == w3
    # the dimension bookkeeping of these identities: 6, 15, 20
    assert sum(weyl_dimension(l) for l in [(1, 1, 0), (0, 0, 0)]) == 15
    assert sum(weyl_dimension(l) for l in [(1, 1, 1), (1, 0, 0)]) == 20


def test_sp4_sp2_example():
    dec = restrict_sp4_sp2((1, 1, 0))
    assert dict(dec.items()) == {((0, 0), 0): 1, ((1, 0), 1): 1, ((1, 1), 0): 1}


@pytest.mark.parametrize("lam", partitions_up_to(12), ids=str)
def test_dimension_bookkeeping(lam):
    d = weyl_dimension(lam)
    assert restrict_sp4_sp2(lam).dimension() == d
    assert restrict_wreath(lam).dimension() == d
    n = sp2_cube_multiplicities(lam)
    total = sum(int(n[a, b, c]) * (a + 1) * (b + 1) * (c + 1) for a, b, c in zip(*n.nonzero()))
    assert total == d


@pytest.mark.parametrize("lam", partitions_up_to(6), ids=str)
def test_fast_route_matches_peeling(lam):
    chi = formal_character(lam)
    assert character_from_weights(lam) == chi
    assert dict(peel_sp4_sp2(chi).items()) == dict(restrict_sp4_sp2(lam).items())
    n = sp2_cube_multiplicities(lam)
    fast = {(int(a), int(b), int(c)): int(n[a, b, c]) for a, b, c in zip(*n.nonzero())}
    assert peel_sp2_cube(chi) == fast


def test_wreath_consistent_with_sp2_cube():
    """Forgetting S3, each wreath class contributes a known set of Sp(2)^3 components."""
    for lam in partitions_up_to(8):
        dec = restrict_wreath(lam)
        count = Counter()
        for (a, b, c), m in dec.triples.items():
            for t in {(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)}:
                count[t] += m
        for key in ("plus", "minus"):
            for (a, b), m in getattr(dec, key).items():
                for t in ((a, b, b), (b, a, b), (b, b, a)):
                    count[t] += m
        for key, mult in (("plus_diag", 1), ("minus_diag", 1), ("tprime", 2)):
            for a, m in getattr(dec, key).items():
                count[(a, a, a)] += mult * m
        n = sp2_cube_multiplicities(lam)
        fast = {(int(a), int(b), int(c)): int(n[a, b, c]) for a, b, c in zip(*n.nonzero())}
        assert dict(+count) == fast


def test_exterior_polynomial_small():
    w = [LaurentPoly.variable(3, i) for i in range(3)]
    one = LaurentPoly.constant(3, 1)
    assert exterior_polynomial((1, 0, 0)) == w[0]
    assert exterior_polynomial((1, 1, 0)) == w[1] - one
    assert exterior_polynomial((1, 1, 1)) == w[2] - w[0]
    assert exterior_polynomial((2, 0, 0)) == w[0] * w[0] - w[1]


@pytest.mark.parametrize("lam", partitions_up_to(8), ids=str)
def test_exterior_round_trip(lam):
    assert substitute_exterior(exterior_polynomial(lam)) == formal_character(lam)
