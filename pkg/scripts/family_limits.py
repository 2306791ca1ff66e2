"""Stabilization of cyclic and binary dihedral families in SU(2).

    python scripts/family_limits.py [--max-n 50]
"""
import argparse

from dimdatum.cli import weight_label
from dimdatum.datum import family_limit
from dimdatum.lie_core import build_root_datum
from dimdatum.subgroups import catalog_lookup


def report(title, datum, family, truncation, candidate):
    rep = family_limit(datum, family, truncation, candidate)
    print(f"{title}  (Casimir <= {truncation}, {len(family)} members)")
    for s in rep.labels:
        where = "not stabilized" if s.index is None else f"from {rep.members[s.index]}"
        print(f"  {weight_label(datum, s.weight):>6}  limit {s.final_value:>3}  {where}")
    verdict = "stabilized" if rep.stabilized else "not stabilized"
    if rep.matched_candidate:
        verdict += f", matches {rep.matched_candidate}"
    print("  " + verdict + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=50)
    args = parser.parse_args()
    A1 = build_root_datum([("A", 1)])
    report("cyclic(n) -> maximal torus", A1,
           [catalog_lookup("cyclic", n) for n in range(1, args.max_n + 1)], 8,
           catalog_lookup("maximal_torus"))
    report("binary_dihedral(n) -> torus normalizer", A1,
           [catalog_lookup("binary_dihedral", n) for n in range(2, args.max_n + 1)], 24,
           catalog_lookup("torus_normalizer"))


if __name__ == "__main__":
    main()
