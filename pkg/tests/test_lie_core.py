import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimdatum.lie_core import (
    RootDatumError,
    TorusElement,
    apply,
    build_root_datum,
    cyclotomic_eval,
    weyl_group,
    weyl_group_order,
)
from dimdatum.linalg import determinant, integer_kernel, leading_minors

from oracles import permutation_sign, signed_permutations

ALL_SPECS = [[(t, r)] for t in "ABCD" for r in range(1, 5) if (t, r) != ("D", 1)]
ALL_SPECS += [[("A", 1), ("torus", 1)], [("A", 1), ("A", 2)], [("torus", 2)], [("B", 2), ("torus", 1)]]


def test_a1():
    d = build_root_datum([("A", 1)])
    assert d.rank == 1
    (alpha,) = d.simple_roots
    assert d.ip(alpha, alpha) == 2
    assert d.rho == (1,)


def test_a2_cartan():
    d = build_root_datum([("A", 2)])
    assert d.cartan_matrix() == [[2, -1], [-1, 2]]


def test_a1_times_torus():
    d = build_root_datum([("A", 1), ("torus", 1)])
    assert d.rank == 2
    assert len(d.simple_roots) == 1
    assert d.rho == (1, 0)
    assert d.inner_product[1][1] == 1


def test_json_form():
    d = build_root_datum({"factors": [{"type": "A", "rank": 1}, {"type": "torus", "rank": 1}]})
    assert d == build_root_datum([("A", 1), ("torus", 1)])
    assert build_root_datum(d.to_spec()) == d


@pytest.mark.parametrize("bad,needle", [
    ([("E", 6)], "E"), ([("A", 5)], "A"), ([("B", 0)], "B"), ([("D", 1)], "D1"),
    ([], "at least one"), ([("torus", 0)], "torus"),
])
def test_rejections_name_the_factor(bad, needle):
    with pytest.raises(RootDatumError, match=needle):
        build_root_datum(bad)


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_datum_invariants(spec):
    d = build_root_datum(spec)
    g = d.inner_product
    assert all(g[i][j] == g[j][i] for i in range(d.rank) for j in range(d.rank))
    assert all(m > 0 for m in leading_minors(g))
    # short roots squared length 2, long ones 4
    lengths = {d.ip(a, a) for a in d.simple_roots}
    assert lengths <= {2, 4} and (not lengths or min(lengths) == 2)
    # Weyl vector: half the sum of positive roots equals the sum of fundamental weights
    twice = [sum(a[i] for a in d.positive_roots) for i in range(d.rank)]
    assert tuple(x // 2 for x in twice) == d.rho and all(x % 2 == 0 for x in twice)


@pytest.mark.parametrize("spec,expected", [
    ([("B", 3)], [[2, -1, 0], [-1, 2, -2], [0, -1, 2]]),
    ([("C", 3)], [[2, -1, 0], [-1, 2, -1], [0, -2, 2]]),
    ([("D", 4)], [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]),
])
def test_cartan_matrices(spec, expected):
    # convention: A[i][j] = <alpha_i, alpha_j^vee>
    assert build_root_datum(spec).cartan_matrix() == expected


@pytest.mark.parametrize("spec,count", [
    ([("A", 1)], 1), ([("A", 3)], 6), ([("B", 3)], 9), ([("C", 4)], 16), ([("D", 4)], 12),
])
def test_positive_root_counts(spec, count):
    assert len(build_root_datum(spec).positive_roots) == count


def test_weyl_a1():
    W = weyl_group(build_root_datum([("A", 1)]))
    assert sorted(zip(W.elements, W.signs)) == [(((-1,),), -1), (((1,),), 1)]


def test_weyl_a2_is_s3():
    d = build_root_datum([("A", 2)])
    W = weyl_group(d)
    perms = list(itertools.permutations(range(3)))
    assert len(W) == len(perms) == 6
    assert sorted(W.signs) == sorted(permutation_sign(p) for p in perms)


def test_weyl_b2_is_signed_permutations():
    W = weyl_group(build_root_datum([("B", 2)]))
    assert len(W) == len(signed_permutations(2)) == 8


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_weyl_group_structure(spec):
    d = build_root_datum(spec)
    W = weyl_group(d)
    assert len(W) == weyl_group_order(d)
    n = d.rank
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    elems = set(W.elements)
    assert ident in elems
    for w, s in W.items():
        assert determinant(w) == s
    if len(W) <= 48:
        def mul(a, b):
            return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                         for i in range(n))
        for a in W.elements:
            for b in W.elements:
                assert mul(a, b) in elems


@pytest.mark.parametrize("spec", [[("A", 2)], [("B", 2)], [("C", 3)], [("D", 4)], [("A", 1), ("torus", 1)]], ids=str)
def test_weyl_action_is_orthogonal(spec):
    d = build_root_datum(spec)
    basis = [tuple(int(i == j) for j in range(d.rank)) for i in range(d.rank)]
    for w in weyl_group(d).elements:
        for mu in basis:
            for nu in basis:
                assert d.ip(apply(w, mu), apply(w, nu)) == d.ip(mu, nu)


def test_cyclotomic_eval_examples():
    assert cyclotomic_eval((0,), TorusElement([Fraction(3, 7)])) == 1
    assert cyclotomic_eval((2,), TorusElement([Fraction(1, 4)])) == -1
    assert cyclotomic_eval((1,), TorusElement([Fraction(1, 2)])) == -1


def test_torus_element_reduces_mod_one():
    assert TorusElement([Fraction(5, 4), Fraction(-1, 3)]).angles == (Fraction(1, 4), Fraction(2, 3))
    assert TorusElement([Fraction(1, 4), Fraction(1, 6)]).order == 12


angles = st.fractions(min_value=0, max_value=1, max_denominator=12)
ints = st.integers(min_value=-6, max_value=6)


@settings(max_examples=100, deadline=None)
@given(st.lists(ints, min_size=2, max_size=2), st.lists(ints, min_size=2, max_size=2),
       st.lists(angles, min_size=2, max_size=2))
def test_eval_is_a_character(mu, nu, a):
    t = TorusElement(a)
    s = [x + y for x, y in zip(mu, nu)]
    assert cyclotomic_eval(s, t) == cyclotomic_eval(mu, t) * cyclotomic_eval(nu, t)


@pytest.mark.parametrize("mat,ncols,expected_rank", [
    ([[1, 1]], 2, 1), ([[1]], 1, 0), ([], 1, 1), ([[2, 4, 6]], 3, 2), ([[1, 2, 3], [4, 5, 6]], 3, 1),
])
def test_integer_kernel(mat, ncols, expected_rank):
    basis = integer_kernel(mat, ncols)
    assert len(basis) == expected_rank
    for v in basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in mat)


def test_integer_kernel_is_saturated():
    # (1, -2, 1) spans the kernel of [[1,2,3],[4,5,6]] over Z, not 2*(1,-2,1)
    (v,) = integer_kernel([[1, 2, 3], [4, 5, 6]], 3)
    assert v in [(1, -2, 1), (-1, 2, -1)]
