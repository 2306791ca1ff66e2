"""Pairwise distinctness of SU(2) catalog data as the truncation grows.

For each label cutoff m, prints the number of distinct dimension data among
the finite and quasi-torus catalog entries and the colliding groups.
"""
import argparse
import itertools
from collections import defaultdict

from dimdatum.datum import dimension_datum
from dimdatum.lie_core import build_root_datum
from dimdatum.subgroups import BINARY_POLYHEDRAL, catalog_lookup


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-parameter", type=int, default=12)
    parser.add_argument("--max-label", type=int, default=26)
    args = parser.parse_args()
    A1 = build_root_datum([("A", 1)])
    p = args.max_parameter
    entries = ([("cyclic", n) for n in range(1, p + 1)] + [("binary_dihedral", n) for n in range(1, p + 1)]
               + [(x, None) for x in BINARY_POLYHEDRAL] + [("maximal_torus", None), ("torus_normalizer", None)])
    top = args.max_label
    data = {}
    for name, param in entries:
        H = catalog_lookup(name, param)
        data[H.name] = dimension_datum(A1, H, top * (top + 2)).values
    print(f"{len(entries)} entries")
    for m in range(top + 1):
        groups = defaultdict(list)
        for name, vals in data.items():
            groups[vals[:m + 1]].append(name)
        clashes = [g for g in groups.values() if len(g) > 1]
        print(f"m <= {m:2d} (Casimir <= {m * (m + 2):3d}): {len(groups):2d} distinct"
              + ("" if not clashes else "; collisions: " + "; ".join(" = ".join(g) for g in clashes[:3])
                 + (" ..." if len(clashes) > 3 else "")))


if __name__ == "__main__":
    main()
