"""Root data, Weyl groups and torus elements for products of classical factors.

Weights are integer vectors: fundamental-weight coordinates on each simple
factor, standard coordinates on each torus factor.  The inner product is the
basic one (short roots have squared length 2); torus directions get the
identity form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .cyclotomic import CyclotomicNumber, lcm_all
from .linalg import inverse_rational, leading_minors

Weight = tuple[int, ...]

SIMPLE_TYPES = ("A", "B", "C", "D")
MAX_RANK = 4


class RootDatumError(ValueError):
    pass


@dataclass(frozen=True)
class Factor:
    type: str
    rank: int

    @property
    def is_torus(self) -> bool:
        return self.type == "torus"

    def label(self) -> str:
        return f"T{self.rank}" if self.is_torus else f"{self.type}{self.rank}"


def _root_lengths_and_edges(ftype: str, rank: int):
    """Half squared lengths d_i of the simple roots and Dynkin edges."""
    chain = [(i, i + 1) for i in range(rank - 1)]
    if ftype == "A":
        return [1] * rank, chain
    if ftype == "B":
        if rank == 1:
            return [1], []
        return [2] * (rank - 1) + [1], chain
    if ftype == "C":
        if rank == 1:
            return [1], []
        return [1] * (rank - 1) + [2], chain
    if ftype == "D":
        if rank == 2:
            return [1, 1], []
        edges = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
        return [1] * rank, edges
    raise RootDatumError(f"unknown factor type {ftype!r}")


def factor_cartan(ftype: str, rank: int) -> tuple[list[list[int]], list[int]]:
    """Cartan matrix A[i][j] = <alpha_i, alpha_j^vee> and half squared root lengths."""
    d, edges = _root_lengths_and_edges(ftype, rank)
    gram = [[2 * d[i] if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        gram[i][j] = gram[j][i] = -max(d[i], d[j])
    cartan = [[2 * gram[i][j] // gram[j][j] for j in range(rank)] for i in range(rank)]
    return cartan, d


@dataclass(frozen=True)
class RootDatum:
    """Compact connected group: simply connected classical factors times a torus."""
    factors: tuple[Factor, ...]
    rank: int
    simple_roots: tuple[Weight, ...]
    inner_product: tuple[tuple[Fraction, ...], ...]
    # column block of each factor in the weight coordinates
    blocks: tuple[tuple[int, int], ...] = field(repr=False)
    simple_coords: tuple[int, ...] = field(repr=False)

    @property
    def fundamental_weights(self) -> tuple[str, ...]:
        labels = []
        for f, (lo, hi) in zip(self.factors, self.blocks):
            for i in range(hi - lo):
                labels.append(f"e{i + 1}[{f.label()}]" if f.is_torus else f"w{i + 1}[{f.label()}]")
        return tuple(labels)

    @cached_property
    def rho(self) -> Weight:
        simple = set(self.simple_coords)
        return tuple(1 if i in simple else 0 for i in range(self.rank))

    def ip(self, a: Sequence, b: Sequence) -> Fraction:
        g = self.inner_product
        total = Fraction(0)
        for i, x in enumerate(a):
            if x:
                row = g[i]
                for j, y in enumerate(b):
                    if y and row[j]:
                        total += x * y * row[j]
        return total

    def cartan_matrix(self) -> list[list[Fraction]]:
        r = self.simple_roots
        return [[2 * self.ip(a, b) / self.ip(b, b) for b in r] for a in r]

    @cached_property
    def coroot_scale(self) -> tuple[Fraction, ...]:
        # 2 / <alpha, alpha> per simple root
        return tuple(Fraction(2) / self.ip(a, a) for a in self.simple_roots)

    @cached_property
    def _root_coords_inverse(self):
        # weight coords -> simple-root coords on the semisimple part
        if not self.simple_roots:
            return None
        sub = [[a[c] for c in self.simple_coords] for a in self.simple_roots]
        return inverse_rational(sub)

    def root_coordinates(self, mu: Sequence[int]) -> list[Fraction] | None:
        """Coefficients c with sum c_i alpha_i == mu, or None if mu leaves the root span."""
        if any(mu[i] for i in range(self.rank) if i not in set(self.simple_coords)):
            return None
        if not self.simple_roots:
            return []
        inv = self._root_coords_inverse
        v = [mu[c] for c in self.simple_coords]
        n = len(v)
        return [sum(v[k] * inv[k][i] for k in range(n)) for i in range(n)]

    def in_positive_root_cone(self, mu: Sequence[int]) -> bool:
        """mu is a nonnegative integer combination of simple roots."""
        c = self.root_coordinates(mu)
        return c is not None and all(x >= 0 and x.denominator == 1 for x in c)

    def is_dominant(self, mu: Sequence[int]) -> bool:
        return all(mu[i] >= 0 for i in self.simple_coords)

    def reflect(self, mu: Sequence[int], i: int) -> Weight:
        """Simple reflection s_i; the coroot pairing is the fundamental coordinate."""
        c = mu[self.simple_coords[i]]
        a = self.simple_roots[i]
        return tuple(x - c * y for x, y in zip(mu, a))

    def dominant_representative(self, mu: Sequence[int]) -> Weight:
        mu = tuple(mu)
        while True:
            for i, c in enumerate(self.simple_coords):
                if mu[c] < 0:
                    mu = self.reflect(mu, i)
                    break
            else:
                return mu

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        roots = set()
        frontier = list(self.simple_roots)
        roots.update(frontier)
        while frontier:
            nxt = []
            for b in frontier:
                for i in range(len(self.simple_roots)):
                    r = self.reflect(b, i)
                    if r not in roots:
                        roots.add(r)
                        nxt.append(r)
            frontier = nxt
        pos = [r for r in roots if self.in_positive_root_cone(r)]
        return tuple(sorted(pos))

    def to_spec(self) -> dict:
        return {"factors": [{"type": f.type, "rank": f.rank} for f in self.factors]}

    def __str__(self):
        return " x ".join(f.label() for f in self.factors)


def _parse_factor(desc) -> Factor:
    if isinstance(desc, Factor):
        return desc
    if isinstance(desc, dict):
        ftype, rank = desc.get("type"), desc.get("rank")
    else:
        ftype, rank = desc
    if ftype in ("torus", "T"):
        if not isinstance(rank, int) or rank < 1:
            raise RootDatumError(f"torus factor needs rank >= 1, got {desc!r}")
        return Factor("torus", rank)
    if ftype not in SIMPLE_TYPES:
        raise RootDatumError(f"unsupported factor type in {desc!r}; expected one of "
                             f"{', '.join(SIMPLE_TYPES)} or 'torus'")
    if not isinstance(rank, int) or not 1 <= rank <= MAX_RANK:
        raise RootDatumError(f"unsupported rank in factor {desc!r}; simple factors need rank 1..{MAX_RANK}")
    if ftype == "D" and rank == 1:
        raise RootDatumError(f"factor {desc!r}: D1 is a torus, not a simple factor")
    return Factor(ftype, rank)


@lru_cache(maxsize=None)
def _build(factors: tuple[Factor, ...]) -> RootDatum:
    rank = sum(f.rank for f in factors)
    gram = [[Fraction(0)] * rank for _ in range(rank)]
    simple_roots = []
    simple_coords = []
    blocks = []
    off = 0
    for f in factors:
        blocks.append((off, off + f.rank))
        if f.is_torus:
            for i in range(f.rank):
                gram[off + i][off + i] = Fraction(1)
        else:
            cartan, d = factor_cartan(f.type, f.rank)
            inv = inverse_rational(cartan)
            for i in range(f.rank):
                for j in range(f.rank):
                    gram[off + i][off + j] = inv[j][i] * d[i]
            for i in range(f.rank):
                root = [0] * rank
                root[off:off + f.rank] = cartan[i]
                simple_roots.append(tuple(root))
                simple_coords.append(off + i)
        off += f.rank
    datum = RootDatum(
        factors=factors,
        rank=rank,
        simple_roots=tuple(simple_roots),
        inner_product=tuple(tuple(r) for r in gram),
        blocks=tuple(blocks),
        simple_coords=tuple(simple_coords),
    )
    _validate(datum)
    return datum


def _validate(datum: RootDatum) -> None:
    g = datum.inner_product
    n = datum.rank
    if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
        raise RootDatumError("inner product is not symmetric")
    if any(m <= 0 for m in leading_minors(g)):
        raise RootDatumError("inner product is not positive definite")
    off = 0
    k = 0
    cartan = datum.cartan_matrix()
    for f in datum.factors:
        if not f.is_torus:
            expected, _ = factor_cartan(f.type, f.rank)
            got = [row[k:k + f.rank] for row in cartan[k:k + f.rank]]
            if got != expected:
                raise RootDatumError(f"Cartan matrix mismatch for factor {f.label()}")
            for a in datum.simple_roots[k:k + f.rank]:
                if datum.ip(a, a) < 2:
                    raise RootDatumError(f"root shorter than normalization in {f.label()}")
            k += f.rank
        off += f.rank


def build_root_datum(spec: Iterable) -> RootDatum:
    """Build a validated root datum from factor descriptors.

    Accepts ``[("A", 1), ("torus", 1)]``, a list of ``{"type", "rank"}``
    dicts, or the JSON form ``{"factors": [...]}``.
    """
    if isinstance(spec, dict):
        spec = spec.get("factors")
        if spec is None:
            raise RootDatumError("group specification needs a 'factors' list")
    factors = tuple(_parse_factor(d) for d in spec)
    if not factors:
        raise RootDatumError("at least one factor is required")
    return _build(factors)


@dataclass(frozen=True)
class WeylGroup:
    elements: tuple[tuple[tuple[int, ...], ...], ...]
    signs: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def items(self):
        return zip(self.elements, self.signs)


def apply(mat, mu: Sequence[int]) -> Weight:
    return tuple(sum(a * b for a, b in zip(row, mu)) for row in mat)


def _reflection_matrix(datum: RootDatum, i: int):
    n = datum.rank
    cols = [datum.reflect(tuple(int(r == c) for r in range(n)), i) for c in range(n)]
    return tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def weyl_group(datum: RootDatum) -> WeylGroup:
    """All Weyl group elements (as integer matrices on weights) with their signs."""
    n = datum.rank
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    gens = [_reflection_matrix(datum, i) for i in range(len(datum.simple_roots))]
    seen = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                ws = _matmul(w, s)
                if ws not in seen:
                    seen[ws] = -seen[w]
                    nxt.append(ws)
        frontier = nxt
    elements = sorted(seen)
    return WeylGroup(tuple(elements), tuple(seen[w] for w in elements))


def weyl_group_order(datum: RootDatum) -> int:
    """Product of the standard orders per factor (torus factors contribute 1)."""
    from math import factorial
    out = 1
    for f in datum.factors:
        if f.is_torus:
            continue
        n = f.rank
        if f.type == "A":
            out *= factorial(n + 1)
        elif f.type in ("B", "C"):
            out *= 2 ** n * factorial(n)
        else:
            out *= 2 ** (n - 1) * factorial(n)
    return out


@dataclass(frozen=True)
class TorusElement:
    """exp(2 pi i * angles), angles as turn fractions reduced into [0, 1)."""
    angles: tuple[Fraction, ...]

    def __init__(self, angles):
        object.__setattr__(self, "angles", tuple(Fraction(a) % 1 for a in angles))

    @property
    def order(self) -> int:
        return lcm_all(a.denominator for a in self.angles)

    def act(self, w) -> "TorusElement":
        """Image of t under the Weyl element w (given by its weight matrix)."""
        # mu(w.t) = (w^-1 mu)(t): the angles transform by the inverse transpose
        inv = inverse_rational(w)
        return TorusElement(tuple(sum(inv[k][i] * self.angles[k] for k in range(len(w)))
                                  for i in range(len(w))))

    def __repr__(self):
        return "TorusElement(" + ", ".join(str(a) for a in self.angles) + ")"


def pairing_exponent(weight: Sequence[int], t: TorusElement, order: int | None = None) -> int:
    """k with weight(t) = zeta_order ** k."""
    n = order or t.order
    val = sum(w * a for w, a in zip(weight, t.angles)) * n
    if val.denominator != 1:
        raise ValueError(f"order {n} too small for {t}")
    return int(val) % n


def cyclotomic_eval(weight: Sequence[int], t: TorusElement) -> CyclotomicNumber:
    if len(weight) != len(t.angles):
        raise ValueError(f"weight length {len(weight)} does not match torus rank {len(t.angles)}")
    n = t.order
    return CyclotomicNumber.root_of_unity(n, pairing_exponent(weight, t, n))
