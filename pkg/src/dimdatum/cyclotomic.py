"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as rational coordinate vectors in the power basis
1, x, ..., x^(phi(N)-1) of Q[x]/(Phi_N(x)), so equality and rationality are
plain coordinate checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence


def _poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, lowest degree first; den must be monic
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    if len(num) - 1 < dn:
        return [0], num
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    rem = num[:dn] or [0]
    return quot, rem


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n as integer coefficients, lowest degree first.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
        if any(rem):
            raise ArithmeticError(f"Phi_{d} does not divide x^{n}-1")
    return tuple(poly)


def totient(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    # row k holds the reduction of x^k mod Phi_n, for k in 0..n-1
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg > 0 else []
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x and reduce
        shifted = [0] + cur
        top = shifted[deg]
        shifted = shifted[:deg]
        if top:
            for j in range(deg):
                shifted[j] -= top * phi[j]
        cur = shifted
    return tuple(rows)


def reduce_group_ring(order: int, coeffs: Sequence) -> tuple[Fraction, ...]:
    """Map sum_k coeffs[k] * zeta^k (k mod order) to canonical coordinates."""
    table = _power_table(order)
    deg = totient(order)
    out = [Fraction(0)] * deg
    for k, c in enumerate(coeffs):
        if c:
            row = table[k % order]
            for j in range(deg):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


def lcm_all(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


@dataclass(frozen=True)
class CyclotomicNumber:
    order: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != totient(self.order):
            raise ValueError(
                f"expected {totient(self.order)} coordinates for order {self.order}, "
                f"got {len(self.coords)}")

    @classmethod
    def from_rational(cls, value, order: int = 1) -> "CyclotomicNumber":
        coords = [Fraction(0)] * totient(order)
        coords[0] = Fraction(value)
        return cls(order, tuple(coords))

    @classmethod
    def root_of_unity(cls, order: int, k: int) -> "CyclotomicNumber":
        """zeta_order ** k."""
        return cls(order, reduce_group_ring(order, _unit(order, k)))

    @classmethod
    def from_group_ring(cls, order: int, coeffs: Sequence) -> "CyclotomicNumber":
        return cls(order, reduce_group_ring(order, coeffs))

    def embed(self, order: int) -> "CyclotomicNumber":
        """Image under Q(zeta_self.order) -> Q(zeta_order), x -> x^(order/self.order)."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed order {self.order} into order {order}")
        step = order // self.order
        coeffs = [Fraction(0)] * order
        for j, c in enumerate(self.coords):
            coeffs[j * step] += c
        return CyclotomicNumber.from_group_ring(order, coeffs)

    def _common(self, other) -> tuple["CyclotomicNumber", "CyclotomicNumber"]:
        if not isinstance(other, CyclotomicNumber):
            other = CyclotomicNumber.from_rational(other)
        n = lcm_all([self.order, other.order])
        return self.embed(n), other.embed(n)

    def __add__(self, other):
        a, b = self._common(other)
        return CyclotomicNumber(a.order, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-x for x in self.coords))

    def __sub__(self, other):
        return self + (-other if isinstance(other, CyclotomicNumber) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CyclotomicNumber):
            c = Fraction(other)
            return CyclotomicNumber(self.order, tuple(x * c for x in self.coords))
        a, b = self._common(other)
        n = a.order
        coeffs = [Fraction(0)] * n
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    if y:
                        coeffs[(i + j) % n] += x * y
        return CyclotomicNumber.from_group_ring(n, coeffs)

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicNumber":
        n = self.order
        coeffs = [Fraction(0)] * n
        for j, c in enumerate(self.coords):
            coeffs[(-j) % n] += c
        return CyclotomicNumber.from_group_ring(n, coeffs)

    def __eq__(self, other):
        if not isinstance(other, CyclotomicNumber):
            try:
                other = CyclotomicNumber.from_rational(other)
            except (TypeError, ValueError):
                return NotImplemented
        a, b = self._common(other)
        return a.coords == b.coords

    def __hash__(self):
        # equal numbers may live at different orders; only rationals get a precise hash
        return hash(self.coords[0]) if self.is_rational() else hash("cyclotomic")

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def to_complex(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z ** j for j, c in enumerate(self.coords))

    def __repr__(self):
        terms = [f"{c}*z{self.order}^{j}" if j else f"{c}"
                 for j, c in enumerate(self.coords) if c]
        return "CyclotomicNumber(" + (" + ".join(terms) or "0") + ")"


def _unit(order: int, k: int) -> list[int]:
    coeffs = [0] * order
    coeffs[k % order] = 1
    return coeffs
