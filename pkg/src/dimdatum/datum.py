"""Truncated dimension data, family stabilization and separation."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .irreps import enumerate_irreps, weyl_dimension
from .lie_core import RootDatum, Weight
from .subgroups import SubgroupDescriptor, check_descriptor, invariant_dim


@dataclass(frozen=True)
class DatumVector:
    """dim V^H for every irrep with Casimir value <= truncation, in enumeration order."""
    datum: RootDatum
    truncation: int
    weights: tuple[Weight, ...]
    values: tuple[int, ...]
    subgroup_name: str = ""

    def __post_init__(self):
        if len(self.weights) != len(self.values):
            raise ValueError("weights and values differ in length")

    def value(self, lam: Sequence[int]) -> int:
        return self.values[self.weights.index(tuple(lam))]

    def as_dict(self) -> dict[Weight, int]:
        return dict(zip(self.weights, self.values))

    def same_values(self, other: "DatumVector") -> bool:
        return (self.datum == other.datum and self.weights == other.weights
                and self.values == other.values)


def dimension_datum(datum: RootDatum, H: SubgroupDescriptor, truncation) -> DatumVector:
    check_descriptor(datum, H)
    weights = tuple(enumerate_irreps(datum, truncation))
    values = tuple(invariant_dim(datum, lam, H) for lam in weights)
    return DatumVector(datum, truncation, weights, values, getattr(H, "name", ""))


@dataclass(frozen=True)
class LabelStabilization:
    weight: Weight
    final_value: int
    index: Optional[int]  # first family position from which the value is constant; None if not stabilized
    values: tuple[int, ...] = field(repr=False)


@dataclass(frozen=True)
class StabilizationReport:
    members: tuple[str, ...]
    labels: tuple[LabelStabilization, ...]
    stabilized: bool
    limit: Optional[DatumVector]
    matched_candidate: Optional[str]
    candidate: Optional[str] = None
    min_tail: int = 2

    def unstable_labels(self) -> list[Weight]:
        return [s.weight for s in self.labels if s.index is None]


def default_min_tail(length: int) -> int:
    """A value counts as stabilized only if it is constant on the last half of the family."""
    return max(2, (length + 1) // 2)


def family_limit(datum: RootDatum, family: Sequence[SubgroupDescriptor], truncation,
                 candidate: SubgroupDescriptor | None = None,
                 min_tail: int | None = None) -> StabilizationReport:
    """Per-label stabilization of dimension data along a finite family prefix.

    This is finite evidence only: a label is reported stable when its value is
    constant on a tail of at least `min_tail` members.
    """
    if len(family) < 2:
        raise ValueError("family_limit needs at least two members")
    if min_tail is None:
        min_tail = default_min_tail(len(family))
    vectors = [dimension_datum(datum, H, truncation) for H in family]
    weights = vectors[0].weights
    labels = []
    for i, lam in enumerate(weights):
        column = tuple(v.values[i] for v in vectors)
        start = len(column) - 1
        while start > 0 and column[start - 1] == column[-1]:
            start -= 1
        index = start if len(column) - start >= min_tail else None
        labels.append(LabelStabilization(lam, column[-1], index, column))
    stabilized = all(s.index is not None for s in labels)
    limit = None
    matched = None
    cand_name = getattr(candidate, "name", None) if candidate is not None else None
    if stabilized:
        limit = DatumVector(datum, truncation, weights, tuple(s.final_value for s in labels),
                            "limit")
        if candidate is not None:
            cand = dimension_datum(datum, candidate, truncation)
            if cand.values == limit.values:
                matched = cand_name
    return StabilizationReport(
        members=tuple(getattr(H, "name", "") for H in family),
        labels=tuple(labels),
        stabilized=stabilized,
        limit=limit,
        matched_candidate=matched,
        candidate=cand_name,
        min_tail=min_tail,
    )


@dataclass(frozen=True)
class SeparationWitness:
    weight: Weight
    value_h: int
    value_h_prime: int


def find_separating_irrep(datum: RootDatum, H: SubgroupDescriptor, H_prime: SubgroupDescriptor,
                          max_truncation) -> SeparationWitness | None:
    """First irrep (canonical order) with more H-invariants than H'-invariants.

    The caller asserts H is a proper subgroup of H'; this is not checked.
    """
    for lam in enumerate_irreps(datum, max_truncation):
        a = invariant_dim(datum, lam, H)
        b = invariant_dim(datum, lam, H_prime)
        if a > b:
            return SeparationWitness(lam, a, b)
    return None


@dataclass(frozen=True)
class Comparison:
    relation: str  # "equal", "a_dominates", "b_dominates", "incomparable"
    a_greater: Optional[Weight] = None  # first label with a > b
    b_greater: Optional[Weight] = None  # first label with b > a


def compare_data(a: DatumVector, b: DatumVector) -> Comparison:
    if a.datum != b.datum or a.truncation != b.truncation or a.weights != b.weights:
        raise ValueError("datum vectors must share group and truncation")
    a_gt = next((w for w, x, y in zip(a.weights, a.values, b.values) if x > y), None)
    b_gt = next((w for w, x, y in zip(a.weights, a.values, b.values) if y > x), None)
    if a_gt is None and b_gt is None:
        rel = "equal"
    elif b_gt is None:
        rel = "a_dominates"
    elif a_gt is None:
        rel = "b_dominates"
    else:
        rel = "incomparable"
    return Comparison(rel, a_gt, b_gt)


def box_bound(vec: DatumVector) -> int:
    """Number of points of the truncated box prod (dim V + 1)."""
    out = 1
    for lam in vec.weights:
        out *= weyl_dimension(vec.datum, lam) + 1
    return out
