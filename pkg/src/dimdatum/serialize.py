"""JSON grammars for groups, subgroups, datum vectors, spectra and reports."""
from __future__ import annotations

import json
from fractions import Fraction

from .datum import DatumVector, LabelStabilization, StabilizationReport
from .lie_core import RootDatum, TorusElement, build_root_datum
from .spectral import METRIC_CONSTANT, NORMALIZATION, SpectrumMultiset
from .subgroups import (
    ClassMeasure,
    ConnectedEmbedding,
    DescriptorError,
    FiniteClasses,
    PointAtom,
    Subtorus,
    TorusPiece,
    catalog_lookup,
)
from .cyclotomic import lcm_all


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def rational_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise DescriptorError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise DescriptorError(f"rationals are written as 'p/q' strings, got {value!r}")


def _torus_element(angles, rank: int) -> TorusElement:
    if not isinstance(angles, list) or len(angles) != rank:
        raise DescriptorError(f"expected {rank} angles, got {angles!r}")
    return TorusElement([parse_rational(a) for a in angles])


def _int_matrix(rows, ncols: int, what: str):
    if not isinstance(rows, list) or any(
            not isinstance(r, list) or len(r) != ncols
            or any(not isinstance(x, int) or isinstance(x, bool) for x in r) for r in rows):
        raise DescriptorError(f"{what} must be a list of integer rows of length {ncols}")
    return tuple(tuple(r) for r in rows)


def _coset(obj, embedding, rank: int):
    mass = parse_rational(obj.get("mass"))
    if obj.get("kind", "point") == "torus":
        return TorusPiece(embedding, _torus_element(obj.get("offset"), rank), mass)
    return PointAtom(_torus_element(obj.get("angles"), rank), mass)


def subgroup_from_json(obj, datum: RootDatum, name: str = ""):
    if not isinstance(obj, dict):
        raise DescriptorError(f"subgroup {name!r} must be an object")
    kind = obj.get("kind")
    rank = datum.rank
    if kind == "catalog":
        return catalog_lookup(obj.get("name"), obj.get("parameter"), datum)
    if kind == "finite_classes":
        atoms = obj.get("atoms")
        if not isinstance(atoms, list) or not atoms:
            raise DescriptorError(f"subgroup {name!r}: 'atoms' must be a nonempty list")
        pieces = tuple(PointAtom(_torus_element(a.get("angles"), rank), parse_rational(a.get("mass")))
                       for a in atoms)
        order = obj.get("order") or lcm_all(p.mass.denominator for p in pieces)
        return FiniteClasses(ClassMeasure(pieces, order), name=name or "finite_classes")
    if kind == "subtorus":
        emb = _int_matrix(obj.get("embedding", []), rank, "embedding")
        cosets = tuple(_coset(c, emb, rank) for c in obj.get("cosets", []))
        count = obj.get("component_count") or (lcm_all(c.mass.denominator for c in cosets) if cosets else 1)
        return Subtorus(emb, rank, cosets, count, name=name or "subtorus")
    if kind == "connected":
        h = build_root_datum(obj.get("h_factors") or [])
        res = _int_matrix(obj.get("restriction"), rank, "restriction")
        return ConnectedEmbedding(h, res, name=name or "connected")
    raise DescriptorError(f"subgroup {name!r}: unknown kind {kind!r}")


def datum_vector_to_json(vec: DatumVector) -> dict:
    from .irreps import weyl_dimension
    return {
        "group": vec.datum.to_spec(),
        "subgroup": vec.subgroup_name,
        "truncation": vec.truncation,
        "entries": [{"weight": list(w), "dim": weyl_dimension(vec.datum, w), "value": v}
                    for w, v in zip(vec.weights, vec.values)],
    }


def datum_vector_from_json(obj) -> DatumVector:
    datum = build_root_datum(obj["group"])
    entries = obj["entries"]
    return DatumVector(datum, obj["truncation"],
                       tuple(tuple(e["weight"]) for e in entries),
                       tuple(int(e["value"]) for e in entries),
                       obj.get("subgroup", ""))


def spectrum_to_json(spec: SpectrumMultiset) -> dict:
    return {
        "group": spec.datum.to_spec() if spec.datum is not None else None,
        "truncation": spec.truncation,
        "normalization": NORMALIZATION,
        "metric_constant": rational_str(METRIC_CONSTANT),
        "entries": [{"eigenvalue": rational_str(c), "multiplicity": m} for c, m in spec.entries],
    }


def spectrum_from_json(obj) -> SpectrumMultiset:
    datum = build_root_datum(obj["group"]) if obj.get("group") else None
    entries = tuple((parse_rational(e["eigenvalue"]), int(e["multiplicity"])) for e in obj["entries"])
    return SpectrumMultiset(entries, obj["truncation"], datum)


def report_to_json(rep: StabilizationReport) -> dict:
    return {
        "members": list(rep.members),
        "stabilized": rep.stabilized,
        "candidate": rep.candidate,
        "matched_candidate": rep.matched_candidate,
        "min_tail": rep.min_tail,
        "labels": [{"weight": list(s.weight), "final_value": s.final_value, "index": s.index,
                    "values": list(s.values)} for s in rep.labels],
        "limit": datum_vector_to_json(rep.limit) if rep.limit is not None else None,
    }


def report_from_json(obj) -> StabilizationReport:
    labels = tuple(LabelStabilization(tuple(l["weight"]), l["final_value"], l["index"],
                                      tuple(l["values"])) for l in obj["labels"])
    limit = datum_vector_from_json(obj["limit"]) if obj.get("limit") else None
    return StabilizationReport(tuple(obj["members"]), labels, obj["stabilized"], limit,
                               obj["matched_candidate"], obj.get("candidate"), obj["min_tail"])
