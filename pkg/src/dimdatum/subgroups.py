"""Closed subgroups presented by class measures or connected embeddings.

dim V^H is computed three ways depending on the descriptor:

* class-measure averaging over point atoms and translated subtori
  (finite groups, tori, quasi-tori), exact in a cyclotomic field;
* kernel-lattice counting for subtori (a piece of the above);
* branching to the trivial representation for connected embeddings.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .cyclotomic import CyclotomicNumber, lcm_all
from .irreps import (
    enumerate_irreps,
    freudenthal_multiplicities,
    weight_exponent_counts,
    weyl_dimension,
)
from .lie_core import RootDatum, TorusElement, Weight, apply, build_root_datum, weyl_group
from .linalg import integer_kernel, solve_rational


class IntegralityError(ArithmeticError):
    """A class-measure average did not reduce to a nonnegative integer."""

    def __init__(self, message, weight=None):
        super().__init__(message)
        self.weight = weight


class DescriptorError(ValueError):
    pass


@dataclass(frozen=True)
class PointAtom:
    t: TorusElement
    mass: Fraction


@dataclass(frozen=True)
class TorusPiece:
    """The subtorus cut out by `embedding`, translated by `offset`."""
    embedding: tuple[tuple[int, ...], ...]
    offset: TorusElement
    mass: Fraction


Piece = Union[PointAtom, TorusPiece]


@dataclass(frozen=True)
class ClassMeasure:
    pieces: tuple[Piece, ...]
    component_count: int = 1

    @property
    def total_mass(self) -> Fraction:
        return sum((p.mass for p in self.pieces), Fraction(0))

    @property
    def order(self) -> int:
        angles = []
        for p in self.pieces:
            angles.append(p.t.order if isinstance(p, PointAtom) else p.offset.order)
        return lcm_all(angles)


@dataclass(frozen=True)
class FiniteClasses:
    measure: ClassMeasure
    name: str = "finite"


@dataclass(frozen=True)
class Subtorus:
    """A subtorus S (rows of `embedding` restrict G-weights to S-weights).

    Optional `cosets` turn it into a quasi-torus: each coset is a point atom
    or a translated copy of S; the identity component carries the rest of
    the mass.
    """
    embedding: tuple[tuple[int, ...], ...]
    rank: int
    cosets: tuple[Piece, ...] = ()
    component_count: int = 1
    name: str = "subtorus"

    @property
    def measure(self) -> ClassMeasure:
        rest = 1 - sum((c.mass for c in self.cosets), Fraction(0))
        base = TorusPiece(self.embedding, TorusElement([0] * self.rank), rest)
        return ClassMeasure((base,) + tuple(self.cosets), self.component_count)


@dataclass(frozen=True)
class ConnectedEmbedding:
    """Connected reductive H with restriction matrix from G- to H-weight coordinates."""
    h_datum: RootDatum
    restriction: tuple[tuple[int, ...], ...]
    name: str = "connected"


SubgroupDescriptor = Union[FiniteClasses, Subtorus, ConnectedEmbedding]


def measure_of(H: SubgroupDescriptor) -> ClassMeasure:
    if isinstance(H, FiniteClasses):
        return H.measure
    if isinstance(H, Subtorus):
        return H.measure
    raise TypeError(f"{type(H).__name__} has no class measure")


def check_descriptor(datum: RootDatum, H: SubgroupDescriptor) -> None:
    """Structural validation of H against datum; raises DescriptorError."""
    r = datum.rank
    if isinstance(H, ConnectedEmbedding):
        if len(H.restriction) != H.h_datum.rank or any(len(row) != r for row in H.restriction):
            raise DescriptorError(
                f"{H.name}: restriction must be {H.h_datum.rank} x {r}")
        return
    meas = measure_of(H)
    if not meas.pieces:
        raise DescriptorError(f"{H.name}: empty class measure")
    if meas.total_mass != 1:
        raise DescriptorError(f"{H.name}: masses sum to {meas.total_mass}, expected 1")
    for p in meas.pieces:
        if p.mass <= 0:
            raise DescriptorError(f"{H.name}: nonpositive mass {p.mass}")
        t = p.t if isinstance(p, PointAtom) else p.offset
        if len(t.angles) != r:
            raise DescriptorError(f"{H.name}: torus element {t} does not match rank {r}")
        if isinstance(p, TorusPiece):
            if any(len(row) != r for row in p.embedding):
                raise DescriptorError(f"{H.name}: embedding rows must have length {r}")
            if len(integer_kernel(p.embedding, r)) != r - len(p.embedding):
                raise DescriptorError(f"{H.name}: embedding does not have full row rank")
    if isinstance(H, FiniteClasses):
        if any(not isinstance(p, PointAtom) for p in meas.pieces):
            raise DescriptorError(f"{H.name}: finite class data must be point atoms")
        n = meas.component_count
        if any((p.mass * n).denominator != 1 for p in meas.pieces):
            raise DescriptorError(f"{H.name}: masses are not class sizes over order {n}")


def _measure_average(datum: RootDatum, lam: Weight, meas: ClassMeasure) -> CyclotomicNumber:
    mults = freudenthal_multiplicities(datum, lam)
    n = meas.order
    coeffs = [Fraction(0)] * n
    for p in meas.pieces:
        if isinstance(p, PointAtom):
            counts = weight_exponent_counts(mults, p.t, n)
        else:
            # integrating over the subtorus keeps exactly the weights trivial on it
            trivial = {mu: m for mu, m in mults.items()
                       if all(v == 0 for v in apply(p.embedding, mu))}
            counts = weight_exponent_counts(trivial, p.offset, n)
        for k, c in enumerate(counts):
            if c:
                coeffs[k] += p.mass * c
    return CyclotomicNumber.from_group_ring(n, coeffs)


def restricted_weights(datum: RootDatum, lam: Weight, H: ConnectedEmbedding) -> dict[Weight, int]:
    """Pushforward of the weights of V_lam along the restriction matrix."""
    out: dict[Weight, int] = {}
    for mu, m in freudenthal_multiplicities(datum, lam).items():
        nu = apply(H.restriction, mu)
        out[nu] = out.get(nu, 0) + m
    return out


def _check_weyl_invariant(H: ConnectedEmbedding, weights: dict, lam) -> None:
    hd = H.h_datum
    for mu, m in weights.items():
        for i in range(len(hd.simple_roots)):
            if weights.get(hd.reflect(mu, i), 0) != m:
                raise DescriptorError(
                    f"{H.name}: restriction of {lam} is not invariant under the Weyl group of H")


def _branch_to_trivial(datum: RootDatum, lam: Weight, H: ConnectedEmbedding) -> int:
    weights = restricted_weights(datum, lam, H)
    _check_weyl_invariant(H, weights, lam)
    hd = H.h_datum
    rho = hd.rho
    total = 0
    for w, sign in weyl_group(hd).items():
        key = tuple(a - b for a, b in zip(apply(w, rho), rho))
        total += sign * weights.get(key, 0)
    return total


def invariant_dim(datum: RootDatum, lam: Sequence[int], H: SubgroupDescriptor) -> int:
    """dim of the H-fixed subspace of the irreducible representation V_lam."""
    lam = tuple(int(x) for x in lam)
    if isinstance(H, ConnectedEmbedding):
        value = _branch_to_trivial(datum, lam, H)
        if value < 0:
            raise IntegralityError(f"{H.name}: negative trivial multiplicity {value} at {lam}", lam)
        return value
    avg = _measure_average(datum, lam, measure_of(H))
    if not avg.is_rational():
        raise IntegralityError(f"{H.name}: average at {lam} is irrational: {avg}", lam)
    q = avg.to_rational()
    if q.denominator != 1 or q < 0:
        raise IntegralityError(f"{H.name}: average at {lam} is {q}, not a nonnegative integer", lam)
    return int(q)


@dataclass(frozen=True)
class CharacterLattice:
    """Sublattice of G-torus characters restricting trivially to a subtorus."""
    basis: tuple[tuple[int, ...], ...]
    rank_ambient: int

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, mu: Sequence[int]) -> bool:
        if not self.basis:
            return all(x == 0 for x in mu)
        cols = [list(col) for col in zip(*self.basis)]  # ambient x rank
        sol = solve_rational(cols, list(mu))
        if sol is None:
            return False
        if any(x.denominator != 1 for x in sol):
            return False
        return all(sum(c * b[i] for c, b in zip(sol, self.basis)) == mu[i]
                   for i in range(self.rank_ambient))


def kernel_character_lattice(datum: RootDatum, H: Subtorus) -> CharacterLattice:
    if not isinstance(H, Subtorus) or H.cosets:
        raise DescriptorError("kernel lattice needs a connected subtorus descriptor")
    return CharacterLattice(tuple(integer_kernel(H.embedding, datum.rank)), datum.rank)


# ---------------------------------------------------------------------------
# catalog

class CatalogError(ValueError):
    """A catalog entry failed its load-time validation."""


class CatalogInputError(CatalogError):
    """Unknown catalog name, bad parameter, or entry requested in the wrong group."""


CATALOG_NAMES = (
    "cyclic", "binary_dihedral", "binary_tetrahedral", "binary_octahedral",
    "binary_icosahedral", "maximal_torus", "torus_normalizer",
    "principal_a1_in_a2", "trivial",
)
PARAMETRIZED = ("cyclic", "binary_dihedral")
VALIDATION_CASIMIR = 48

# conjugacy classes in SU(2) as (angle, elements); angle a stands for diag(e^{2 pi i a}, e^{-2 pi i a})
BINARY_POLYHEDRAL = {
    "binary_tetrahedral": (24, [("0", 1), ("1/2", 1), ("1/4", 6), ("1/6", 8), ("1/3", 8)]),
    "binary_octahedral": (48, [("0", 1), ("1/2", 1), ("1/4", 18), ("1/6", 8), ("1/3", 8),
                               ("1/8", 6), ("3/8", 6)]),
    "binary_icosahedral": (120, [("0", 1), ("1/2", 1), ("1/4", 30), ("1/6", 20), ("1/3", 20),
                                 ("1/10", 12), ("3/10", 12), ("1/5", 12), ("2/5", 12)]),
}


def _a1():
    return build_root_datum([("A", 1)])


def cyclic_atoms(n: int) -> list[PointAtom]:
    """Class measure of Z/n in SU(2), merging angle a with -a."""
    masses: dict[Fraction, Fraction] = {}
    for k in range(n):
        a = Fraction(k, n)
        a = min(a, 1 - a) if a else a
        masses[a] = masses.get(a, Fraction(0)) + Fraction(1, n)
    return [PointAtom(TorusElement([a]), m) for a, m in sorted(masses.items())]


def _build_entry(name: str, parameter, datum: RootDatum) -> SubgroupDescriptor:
    label = f"{name}({parameter})" if name in PARAMETRIZED else name
    if name == "trivial":
        return FiniteClasses(ClassMeasure((PointAtom(TorusElement([0] * datum.rank), Fraction(1)),), 1),
                             name=label)
    if name == "maximal_torus":
        ident = tuple(tuple(int(i == j) for j in range(datum.rank)) for i in range(datum.rank))
        return Subtorus(ident, datum.rank, name=label)
    if name == "principal_a1_in_a2":
        if datum != build_root_datum([("A", 2)]):
            raise CatalogInputError("principal_a1_in_a2 lives in A2")
        return ConnectedEmbedding(_a1(), ((2, 2),), name=label)
    if datum != _a1():
        raise CatalogInputError(f"catalog entry {name!r} is defined in A1 only")
    if name == "cyclic":
        return FiniteClasses(ClassMeasure(tuple(cyclic_atoms(parameter)), parameter), name=label)
    if name == "binary_dihedral":
        half = Fraction(1, 2)
        atoms = [PointAtom(p.t, p.mass * half) for p in cyclic_atoms(2 * parameter)]
        quarter = TorusElement([Fraction(1, 4)])
        merged = {}
        for p in atoms + [PointAtom(quarter, half)]:
            merged[p.t] = merged.get(p.t, Fraction(0)) + p.mass
        pieces = tuple(PointAtom(t, m) for t, m in sorted(merged.items(), key=lambda kv: kv[0].angles))
        return FiniteClasses(ClassMeasure(pieces, 4 * parameter), name=label)
    if name == "torus_normalizer":
        return Subtorus(((1,),), 1,
                        cosets=(PointAtom(TorusElement([Fraction(1, 4)]), Fraction(1, 2)),),
                        component_count=2, name=label)
    if name in BINARY_POLYHEDRAL:
        order, classes = BINARY_POLYHEDRAL[name]
        pieces = tuple(PointAtom(TorusElement([Fraction(a)]), Fraction(size, order))
                       for a, size in classes)
        return FiniteClasses(ClassMeasure(pieces, order), name=label)
    raise CatalogInputError(f"unknown catalog entry {name!r}")


def validate_descriptor(datum: RootDatum, H: SubgroupDescriptor,
                        casimir_bound=VALIDATION_CASIMIR) -> None:
    """Mass sum, trivial-rep normalization and integrality/box sweep."""
    try:
        check_descriptor(datum, H)
        if invariant_dim(datum, (0,) * datum.rank, H) != 1:
            raise CatalogError(f"{H.name}: trivial representation not fixed exactly once")
        for lam in enumerate_irreps(datum, casimir_bound):
            v = invariant_dim(datum, lam, H)
            if v > weyl_dimension(datum, lam):
                raise CatalogError(f"{H.name}: dim V^H = {v} exceeds dim V at {lam}")
    except (DescriptorError, IntegralityError) as exc:
        raise CatalogError(f"catalog entry rejected: {exc}") from exc


_validated: dict = {}


def catalog_lookup(name: str, parameter: int | None = None,
                   datum: RootDatum | None = None) -> SubgroupDescriptor:
    """Validated catalog subgroup. `datum` defaults to A1 (A2 for the principal A1)."""
    if name not in CATALOG_NAMES:
        raise CatalogInputError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG_NAMES)}")
    if name in PARAMETRIZED:
        if not isinstance(parameter, int) or isinstance(parameter, bool) or parameter < 1:
            raise CatalogInputError(f"{name} needs a positive integer parameter, got {parameter!r}")
    else:
        parameter = None
    if datum is None:
        datum = build_root_datum([("A", 2)]) if name == "principal_a1_in_a2" else _a1()
    key = (name, parameter, datum)
    if key not in _validated:
        H = _build_entry(name, parameter, datum)
        validate_descriptor(datum, H)
        _validated[key] = H
    return _validated[key]
