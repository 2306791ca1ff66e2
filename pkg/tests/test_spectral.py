from fractions import Fraction

import pytest

from dimdatum.datum import dimension_datum
from dimdatum.irreps import enumerate_irreps, weyl_dimension
from dimdatum.lie_core import build_root_datum
from dimdatum.serialize import datum_vector_from_json, datum_vector_to_json, dumps, spectrum_to_json
from dimdatum.spectral import (
    casimir_value,
    homogeneous_spectrum,
    isospectral_compare,
    spectrum_from_datum,
)
from dimdatum.subgroups import catalog_lookup

from test_subgroups import CHAIN_BD, CHAIN_Z, catalog_sweep


def spec_list(s):
    return [(int(c) if c.denominator == 1 else c, m) for c, m in s.entries]


def test_casimir(A1):
    assert [casimir_value(A1, (m,)) for m in range(3)] == [0, 3, 8]


def test_examples(A1):
    assert spec_list(homogeneous_spectrum(A1, catalog_lookup("trivial"), 8)) == [(0, 1), (3, 4), (8, 9)]
    assert spec_list(homogeneous_spectrum(A1, catalog_lookup("cyclic", 2), 8)) == [(0, 1), (8, 9)]
    assert spec_list(homogeneous_spectrum(A1, catalog_lookup("maximal_torus", None), 8)) == [(0, 1), (8, 3)]


def test_sphere_is_round_s3(A1):
    # multiplicity (m+1)^2 at m(m+2)
    s = homogeneous_spectrum(A1, catalog_lookup("trivial"), 200)
    assert s.entries == tuple((Fraction(m * (m + 2)), (m + 1) ** 2) for m in range(14))


def test_isospectral_compare(A1):
    S3 = homogeneous_spectrum(A1, catalog_lookup("trivial"), 8)
    RP3 = homogeneous_spectrum(A1, catalog_lookup("cyclic", 2), 8)
    assert isospectral_compare(S3, S3) is None
    d = isospectral_compare(S3, RP3)
    assert (d.eigenvalue, d.multiplicity_a, d.multiplicity_b) == (3, 4, 0)
    a = homogeneous_spectrum(A1, catalog_lookup("cyclic", 3), 24)
    b = homogeneous_spectrum(A1, catalog_lookup("cyclic", 4), 24)
    d = isospectral_compare(a, b)
    # eigenvalue 8 agrees (1 invariant each); m = 3 is the first difference
    assert (d.eigenvalue, d.multiplicity_a, d.multiplicity_b) == (15, 8, 0)
    with pytest.raises(ValueError):
        isospectral_compare(S3, a)


@pytest.mark.parametrize("spec", [[("A", 1)], [("A", 2)], [("B", 2)], [("A", 1), ("torus", 1)]], ids=str)
def test_peter_weyl_total(spec):
    d = build_root_datum(spec)
    s = homogeneous_spectrum(d, catalog_lookup("trivial", datum=d), 24)
    assert s.total_multiplicity() == sum(weyl_dimension(d, l) ** 2 for l in enumerate_irreps(d, 24))


@pytest.mark.parametrize("chain", [CHAIN_Z, CHAIN_BD])
def test_domination_along_inclusions(A1, chain):
    specs = [homogeneous_spectrum(A1, catalog_lookup(n, p), 120).as_dict() for n, p in chain]
    for small, big in zip(specs, specs[1:]):
        for c, m in big.items():
            assert m <= small.get(c, 0)


@pytest.mark.parametrize("name,p", catalog_sweep())
def test_constants_once(A1, name, p):
    s = homogeneous_spectrum(A1, catalog_lookup(name, p), 48)
    assert s.entries[0] == (0, 1)
    assert all(m > 0 for _, m in s.entries)
    assert [c for c, _ in s.entries] == sorted({c for c, _ in s.entries})


@pytest.mark.parametrize("name,p", [("cyclic", 3), ("binary_dihedral", 4), ("torus_normalizer", None),
                                    ("binary_icosahedral", None)])
def test_spectrum_from_serialized_datum(A1, name, p):
    H = catalog_lookup(name, p)
    direct = homogeneous_spectrum(A1, H, 48)
    text = dumps(datum_vector_to_json(dimension_datum(A1, H, 48)))
    import json
    rebuilt = spectrum_from_datum(datum_vector_from_json(json.loads(text)))
    assert rebuilt == direct
    assert dumps(spectrum_to_json(rebuilt)) == dumps(spectrum_to_json(direct))
