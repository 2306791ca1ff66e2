"""Irreducible representations: enumeration, dimensions, weights, characters."""
from __future__ import annotations

import itertools
import threading
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Sequence

from .cyclotomic import CyclotomicNumber, lcm_all
from .lie_core import RootDatum, TorusElement, Weight, pairing_exponent

# Laplacian eigenvalue scale: casimir = METRIC_CONSTANT * <lam, lam + 2 rho>.
# With short roots of squared length 2 this gives m(m+2) on SU(2).
METRIC_CONSTANT = Fraction(2)

WeightMultiset = dict  # Weight -> positive int


def casimir_value(datum: RootDatum, lam: Sequence[int]) -> Fraction:
    two_rho = tuple(2 * r for r in datum.rho)
    return METRIC_CONSTANT * datum.ip(lam, tuple(a + b for a, b in zip(lam, two_rho)))


def _spiral(bound: int):
    yield 0
    for k in range(1, bound + 1):
        yield k
        yield -k


def _factor_candidates(datum: RootDatum, lo: int, hi: int, is_torus: bool, truncation):
    """Coordinate blocks of one factor with Casimir contribution <= truncation."""
    if is_torus:
        # contribution METRIC_CONSTANT * |k|^2
        kmax = isqrt(int(truncation / METRIC_CONSTANT)) + 1
        out = []
        for combo in itertools.product(list(_spiral(kmax)), repeat=hi - lo):
            if METRIC_CONSTANT * sum(k * k for k in combo) <= truncation:
                out.append(combo)
        return out
    rank = datum.rank
    out = []

    def pad(block):
        v = [0] * rank
        v[lo:hi] = block
        return tuple(v)

    # casimir grows in every coordinate on the dominant chamber, so a BFS
    # over increasing coordinates finds every block under the bound
    seen = {tuple([0] * (hi - lo))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for block in frontier:
            if casimir_value(datum, pad(block)) > truncation:
                continue
            out.append(block)
            for i in range(hi - lo):
                b = list(block)
                b[i] += 1
                b = tuple(b)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return out


def enumerate_irreps(datum: RootDatum, truncation) -> list[Weight]:
    """Dominant weights with Casimir value <= truncation, in canonical order.

    The order is (casimir_value, coordinates), so the list for a smaller
    truncation is always a prefix of the list for a larger one.
    """
    truncation = Fraction(truncation)
    if truncation < 0:
        raise ValueError(f"truncation must be nonnegative, got {truncation}")
    per_factor = [
        _factor_candidates(datum, lo, hi, f.is_torus, truncation)
        for f, (lo, hi) in zip(datum.factors, datum.blocks)
    ]
    weights = []
    for combo in itertools.product(*per_factor):
        lam = tuple(itertools.chain.from_iterable(combo))
        if casimir_value(datum, lam) <= truncation:
            weights.append(lam)
    weights.sort(key=lambda lam: (casimir_value(datum, lam), lam))
    return weights


def weyl_dimension(datum: RootDatum, lam: Sequence[int]) -> int:
    lam_rho = tuple(a + b for a, b in zip(lam, datum.rho))
    num = Fraction(1)
    for alpha in datum.positive_roots:
        num *= datum.ip(lam_rho, alpha) / datum.ip(datum.rho, alpha)
    if num.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {num} for {tuple(lam)}")
    return int(num)


def _check_dominant(datum: RootDatum, lam: Sequence[int]) -> Weight:
    lam = tuple(int(x) for x in lam)
    if len(lam) != datum.rank:
        raise ValueError(f"weight {lam} has length {len(lam)}, expected rank {datum.rank}")
    if not datum.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    return lam


def _dominant_weights_below(datum: RootDatum, lam: Weight) -> list[Weight]:
    # dominant weights of V_lam, linked from lam by subtracting positive roots
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha in datum.positive_roots:
                nu = tuple(a - b for a, b in zip(mu, alpha))
                if nu not in seen and datum.is_dominant(nu):
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return list(seen)


def _orbit(datum: RootDatum, mu: Weight) -> set[Weight]:
    orbit = {mu}
    frontier = [mu]
    while frontier:
        nxt = []
        for nu in frontier:
            for i in range(len(datum.simple_roots)):
                r = datum.reflect(nu, i)
                if r not in orbit:
                    orbit.add(r)
                    nxt.append(r)
        frontier = nxt
    return orbit


_cache_lock = threading.Lock()


@lru_cache(maxsize=4096)
def _freudenthal(datum: RootDatum, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    rho = datum.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = datum.ip(lr, lr)
    dominant = _dominant_weights_below(datum, lam)

    def depth(mu):
        c = datum.root_coordinates(tuple(a - b for a, b in zip(lam, mu)))
        return sum(c)

    dominant.sort(key=depth)
    mult: dict[Weight, int] = {lam: 1}
    pos = datum.positive_roots
    for mu in dominant[1:]:
        mr = tuple(a + b for a, b in zip(mu, rho))
        denom = top - datum.ip(mr, mr)
        total = Fraction(0)
        for alpha in pos:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                m = mult.get(datum.dominant_representative(nu), 0)
                if m == 0 and not _is_weight(datum, lam, nu):
                    break
                total += m * datum.ip(nu, alpha)
                k += 1
        value = 2 * total / denom
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"Freudenthal produced {value} at {mu} for {lam}")
        mult[mu] = int(value)
    full: dict[Weight, int] = {}
    for mu, m in mult.items():
        if m:
            for nu in _orbit(datum, mu):
                full[nu] = m
    return tuple(sorted(full.items()))


def _is_weight(datum: RootDatum, lam: Weight, nu: Weight) -> bool:
    dom = datum.dominant_representative(nu)
    return datum.in_positive_root_cone(tuple(a - b for a, b in zip(lam, dom)))


def freudenthal_multiplicities(datum: RootDatum, lam: Sequence[int]) -> WeightMultiset:
    """Weight multiplicities of the irreducible representation with highest weight lam."""
    lam = _check_dominant(datum, lam)
    with _cache_lock:
        table = _freudenthal(datum, lam)
    return dict(table)


def weight_exponent_counts(multiset, t: TorusElement, order: int) -> list[int]:
    """counts[k] = total multiplicity of weights evaluating to zeta_order^k at t."""
    counts = [0] * order
    for mu, m in multiset.items():
        counts[pairing_exponent(mu, t, order)] += m
    return counts


def character_value(datum: RootDatum, lam: Sequence[int], t: TorusElement) -> CyclotomicNumber:
    """Exact trace of t on V_lam."""
    mults = freudenthal_multiplicities(datum, lam)
    n = t.order
    return CyclotomicNumber.from_group_ring(n, weight_exponent_counts(mults, t, n))


def tensor_weights(a: WeightMultiset, b: WeightMultiset) -> WeightMultiset:
    """Weight multiset of a tensor product (convolution)."""
    out: dict[Weight, int] = {}
    for mu, m in a.items():
        for nu, n in b.items():
            key = tuple(x + y for x, y in zip(mu, nu))
            out[key] = out.get(key, 0) + m * n
    return out
