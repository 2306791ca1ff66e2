import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimdatum.irreps import (
    casimir_value,
    character_value,
    enumerate_irreps,
    freudenthal_multiplicities,
    tensor_weights,
    weight_exponent_counts,
    weyl_dimension,
)
from dimdatum.cyclotomic import CyclotomicNumber
from dimdatum.lie_core import TorusElement, build_root_datum, weyl_group

from oracles import weyl_character_numeric


def test_enumerate_a1(A1):
    # oracle: labels m with m(m+2) <= 8
    expected = [(m,) for m in range(10) if m * (m + 2) <= 8]
    assert enumerate_irreps(A1, 8) == expected == [(0,), (1,), (2,)]
    assert enumerate_irreps(A1, 0) == [(0,)]


def test_enumerate_a2(A2):
    # fundamentals sit at 2 * 8/3 = 16/3 under the fixed metric constant
    assert enumerate_irreps(A2, 3) == [(0, 0)]
    assert enumerate_irreps(A2, 6) == [(0, 0), (0, 1), (1, 0)]
    # brute-force grid oracle for the full order
    grid = [(a, b) for a in range(8) for b in range(8)]
    expected = sorted((l for l in grid if casimir_value(A2, l) <= 30),
                      key=lambda l: (casimir_value(A2, l), l))
    assert enumerate_irreps(A2, 30) == expected


def test_enumerate_with_torus_factor():
    d = build_root_datum([("A", 1), ("torus", 1)])
    ws = enumerate_irreps(d, 8)
    # torus weight k costs 2k^2
    expected = [(m, k) for m in range(3) for k in range(-2, 3) if m * (m + 2) + 2 * k * k <= 8]
    assert sorted(ws) == sorted(expected)
    assert ws[:3] == [(0, 0), (0, -1), (0, 1)]


@pytest.mark.parametrize("spec", [[("A", 1)], [("A", 2)], [("B", 2)], [("A", 1), ("torus", 1)]], ids=str)
def test_prefix_stability(spec):
    d = build_root_datum(spec)
    lists = [enumerate_irreps(d, n) for n in (0, 3, 8, 15, 24, 40)]
    for small, big in zip(lists, lists[1:]):
        assert big[:len(small)] == small
    keys = [(casimir_value(d, l), l) for l in lists[-1]]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_casimir_values(A1, A2):
    assert [casimir_value(A1, (m,)) for m in range(5)] == [0, 3, 8, 15, 24]
    assert casimir_value(A2, (1, 0)) == Fraction(16, 3)
    assert casimir_value(A2, (1, 1)) == 12


def test_weyl_dimension(A1, A2, B2):
    assert [weyl_dimension(A1, (m,)) for m in range(6)] == [1, 2, 3, 4, 5, 6]
    assert weyl_dimension(A2, (1, 1)) == 8
    assert weyl_dimension(A2, (2, 0)) == 6
    assert weyl_dimension(B2, (0, 0)) == 1
    # B2 = Sp(4)/Spin(5): spin rep 4, vector rep 5, adjoint 10
    assert sorted(weyl_dimension(B2, l) for l in [(0, 1), (1, 0), (0, 2)]) == [4, 5, 10]
    assert weyl_dimension(build_root_datum([("D", 4)]), (0, 1, 0, 0)) == 28


def test_freudenthal_examples(A1, A2):
    assert freudenthal_multiplicities(A1, (2,)) == {(-2,): 1, (0,): 1, (2,): 1}
    m = freudenthal_multiplicities(A2, (1, 1))
    assert m[(0, 0)] == 2
    assert sorted(k for k, v in m.items() if v == 1) == sorted(
        [(1, 1), (-1, -1), (2, -1), (-2, 1), (-1, 2), (1, -2)])
    assert sum(m.values()) == 8
    assert freudenthal_multiplicities(A2, (0, 0)) == {(0, 0): 1}


def test_freudenthal_rejects_non_dominant(A2):
    with pytest.raises(ValueError):
        freudenthal_multiplicities(A2, (-1, 2))


@pytest.mark.parametrize("spec", [[("A", 1)], [("A", 2)], [("B", 2)], [("A", 3)]], ids=str)
def test_total_multiplicity_is_weyl_dimension(spec):
    d = build_root_datum(spec)
    for lam in enumerate_irreps(d, 20):
        assert sum(freudenthal_multiplicities(d, lam).values()) == weyl_dimension(d, lam)


@pytest.mark.parametrize("spec", [[("A", 2)], [("B", 2)], [("C", 3)], [("D", 4)], [("A", 1), ("torus", 1)]], ids=str)
def test_weight_multiset_is_weyl_invariant(spec):
    d = build_root_datum(spec)
    for lam in enumerate_irreps(d, 24)[:6]:
        m = freudenthal_multiplicities(d, lam)
        for mu, k in m.items():
            for i in range(len(d.simple_roots)):
                assert m[d.reflect(mu, i)] == k


@pytest.mark.parametrize("spec", [[("A", 2)], [("B", 2)], [("C", 3)], [("A", 3)]], ids=str)
def test_against_weyl_character_formula(spec):
    # numeric Weyl character formula at generic points vs the Freudenthal multiset
    import cmath, math
    d = build_root_datum(spec)
    W = weyl_group(d)
    rng = random.Random(7)
    for lam in enumerate_irreps(d, 30):
        x = [rng.random() for _ in range(d.rank)]
        expected = weyl_character_numeric(d, W, lam, x)
        got = sum(k * cmath.exp(2j * math.pi * sum(a * b for a, b in zip(mu, x)))
                  for mu, k in freudenthal_multiplicities(d, lam).items())
        assert abs(got - expected) < 1e-6 * max(1, abs(expected))


def test_character_examples(A1, A2):
    assert character_value(A1, (2,), TorusElement([Fraction(1, 4)])) == -1
    assert character_value(A1, (1,), TorusElement([Fraction(1, 2)])) == -2
    for lam in enumerate_irreps(A2, 20):
        assert character_value(A2, lam, TorusElement([0, 0])) == weyl_dimension(A2, lam)


@pytest.mark.parametrize("spec", [[("A", 2)], [("B", 2)]], ids=str)
def test_class_function(spec):
    d = build_root_datum(spec)
    rng = random.Random(3)
    W = weyl_group(d)
    for lam in enumerate_irreps(d, 20):
        t = TorusElement([Fraction(rng.randrange(12), 12) for _ in range(d.rank)])
        base = character_value(d, lam, t)
        for w in W.elements:
            assert character_value(d, lam, t.act(w)) == base


small_a2 = st.sampled_from([(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)])


@settings(max_examples=25, deadline=None)
@given(small_a2, small_a2, st.lists(st.fractions(min_value=0, max_value=1, max_denominator=8),
                                    min_size=2, max_size=2))
def test_tensor_product_characters(lam, mu, angles):
    d = build_root_datum([("A", 2)])
    t = TorusElement(angles)
    prod = tensor_weights(freudenthal_multiplicities(d, lam), freudenthal_multiplicities(d, mu))
    n = t.order
    tensor_char = CyclotomicNumber.from_group_ring(n, weight_exponent_counts(prod, t, n))
    assert character_value(d, lam, t) * character_value(d, mu, t) == tensor_char
