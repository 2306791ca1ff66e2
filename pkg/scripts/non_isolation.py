"""Cyclic data agree with the torus datum on every finite truncation.

For each truncation N, finds the smallest n0 from which D(Z/n) equals D(T)
up to Casimir N for all n in the scanned range, and the label where each
Z/n finally separates.
"""
import argparse

from dimdatum.datum import dimension_datum, find_separating_irrep
from dimdatum.lie_core import build_root_datum
from dimdatum.subgroups import catalog_lookup


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--truncations", type=int, nargs="+", default=[8, 24, 48, 120])
    parser.add_argument("--max-n", type=int, default=40)
    args = parser.parse_args()
    A1 = build_root_datum([("A", 1)])
    T = catalog_lookup("maximal_torus")
    for N in args.truncations:
        dT = dimension_datum(A1, T, N).values
        agree = [n for n in range(1, args.max_n + 1)
                 if dimension_datum(A1, catalog_lookup("cyclic", n), N).values == dT]
        n0 = next(n for n in range(1, args.max_n + 1) if all(k in agree for k in range(n, args.max_n + 1)))
        m_max = max(lam[0] for lam in dimension_datum(A1, T, N).weights)
        wit = find_separating_irrep(A1, catalog_lookup("cyclic", n0), T, n0 * (n0 + 2))
        print(f"N={N:4d}  m_max={m_max:2d}  n0={n0:3d} (bound 2*m_max+1 = {2 * m_max + 1:3d})  "
              f"Z/{n0} separates at m={wit.weight[0]}: {wit.value_h} > {wit.value_h_prime}")


if __name__ == "__main__":
    main()
