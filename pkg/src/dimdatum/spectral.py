"""Laplace spectra of G/H for a biinvariant metric, built from dimension data."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .datum import DatumVector, dimension_datum
from .irreps import METRIC_CONSTANT, casimir_value, weyl_dimension
from .lie_core import RootDatum
from .subgroups import SubgroupDescriptor

__all__ = ["SpectrumMultiset", "casimir_value", "homogeneous_spectrum", "spectrum_from_datum",
           "isospectral_compare", "SpectralDifference", "METRIC_CONSTANT", "NORMALIZATION"]

NORMALIZATION = "eigenvalue = 2<lam, lam + 2 rho>, short roots of squared length 2 (SU(2): m(m+2))"


@dataclass(frozen=True)
class SpectrumMultiset:
    entries: tuple[tuple[Fraction, int], ...]
    truncation: int
    datum: RootDatum | None = None

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.entries)


def spectrum_from_datum(vec: DatumVector) -> SpectrumMultiset:
    """Peter-Weyl: c(lam) occurs with multiplicity dim V_lam * dim V_lam^H."""
    agg: dict[Fraction, int] = {}
    for lam, inv in zip(vec.weights, vec.values):
        c = casimir_value(vec.datum, lam)
        agg[c] = agg.get(c, 0) + weyl_dimension(vec.datum, lam) * inv
    entries = tuple((c, m) for c, m in sorted(agg.items()) if m or c == 0)
    return SpectrumMultiset(entries, vec.truncation, vec.datum)


def homogeneous_spectrum(datum: RootDatum, H: SubgroupDescriptor, truncation) -> SpectrumMultiset:
    return spectrum_from_datum(dimension_datum(datum, H, truncation))


@dataclass(frozen=True)
class SpectralDifference:
    eigenvalue: Fraction
    multiplicity_a: int
    multiplicity_b: int


def isospectral_compare(a: SpectrumMultiset, b: SpectrumMultiset) -> SpectralDifference | None:
    """None when equal, else the smallest eigenvalue whose multiplicities differ."""
    if a.truncation != b.truncation:
        raise ValueError(f"truncations differ: {a.truncation} vs {b.truncation}")
    if a.datum is not None and b.datum is not None and a.datum != b.datum:
        raise ValueError("spectra belong to different groups")
    da, db = a.as_dict(), b.as_dict()
    for c in sorted(set(da) | set(db)):
        if da.get(c, 0) != db.get(c, 0):
            return SpectralDifference(c, da.get(c, 0), db.get(c, 0))
    return None
