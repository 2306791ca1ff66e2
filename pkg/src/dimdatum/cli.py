"""dimdatum command line.

    dimdatum <command> --config <path> [--name <id>] [--truncation N] [--format table|json]

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 input
error, 3 internal consistency failure.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .config import ConfigError, JobConfig, load_config
from .datum import dimension_datum, family_limit, find_separating_irrep
from .irreps import weyl_dimension
from .lie_core import RootDatum, build_root_datum
from .serialize import (
    datum_vector_to_json,
    dumps,
    rational_str,
    report_to_json,
    spectrum_to_json,
)
from .spectral import NORMALIZATION, homogeneous_spectrum, isospectral_compare
from .subgroups import (
    BINARY_POLYHEDRAL,
    CatalogError,
    CatalogInputError,
    DescriptorError,
    IntegralityError,
    catalog_lookup,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_ENGINE = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def weight_label(datum: RootDatum, lam) -> str:
    if len(datum.factors) == 1 and datum.factors[0].type == "A" and datum.rank == 1:
        return f"m={lam[0]}"
    return "(" + ",".join(str(x) for x in lam) + ")"


def _table(header: Sequence[str], rows: list[Sequence]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def _one_name(args, cfg: JobConfig, count: int) -> list[str]:
    names = args.name or []
    if len(names) != count:
        raise UsageError(f"{args.command} needs exactly {count} --name argument(s), got {len(names)}")
    return names


def cmd_datum(cfg: JobConfig, args, out) -> int:
    (name,) = _one_name(args, cfg, 1)
    vec = dimension_datum(cfg.group, cfg.subgroup(name), args.truncation)
    if args.format == "json":
        out.write(dumps(datum_vector_to_json(vec)))
    else:
        out.write(f"# dimension datum of {vec.subgroup_name} in {cfg.group}, Casimir <= {vec.truncation}\n")
        out.write(_table(["weight", "dim V", "dim V^H"],
                         [(weight_label(cfg.group, w), weyl_dimension(cfg.group, w), v)
                          for w, v in zip(vec.weights, vec.values)]))
    return EXIT_OK


def cmd_limit(cfg: JobConfig, args, out) -> int:
    (name,) = _one_name(args, cfg, 1)
    fam = cfg.family(name)
    if len(fam.members) < 2:
        raise UsageError(f"family {name!r} has {len(fam.members)} member(s); at least 2 are required")
    candidate = cfg.subgroup(fam.candidate) if fam.candidate else None
    rep = family_limit(cfg.group, fam.members, args.truncation, candidate)
    if args.format == "json":
        out.write(dumps(report_to_json(rep)))
    else:
        out.write(f"# family {name} ({len(rep.members)} members), Casimir <= {args.truncation}\n")
        rows = []
        for s in rep.labels:
            idx = "not stabilized" if s.index is None else f"{s.index} ({rep.members[s.index]})"
            rows.append((weight_label(cfg.group, s.weight), s.final_value, idx))
        out.write(_table(["weight", "final", "stable from"], rows))
        if rep.stabilized:
            line = "stabilized"
            if rep.candidate:
                line += (f"; matches {rep.matched_candidate}" if rep.matched_candidate
                         else f"; does not match {rep.candidate}")
        else:
            line = "not stabilized at " + ", ".join(weight_label(cfg.group, w)
                                                    for w in rep.unstable_labels())
        out.write(line + "\n")
    if not rep.stabilized:
        return EXIT_NEGATIVE
    if rep.candidate and rep.matched_candidate is None:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_separate(cfg: JobConfig, args, out) -> int:
    a, b = _one_name(args, cfg, 2)
    wit = find_separating_irrep(cfg.group, cfg.subgroup(a), cfg.subgroup(b), args.truncation)
    if args.format == "json":
        out.write(dumps({
            "subgroup": a, "overgroup": b, "truncation": args.truncation,
            "witness": None if wit is None else {
                "weight": list(wit.weight), "value_subgroup": wit.value_h,
                "value_overgroup": wit.value_h_prime},
        }))
    elif wit is None:
        out.write(f"none found up to Casimir {args.truncation}\n")
    else:
        out.write(f"{weight_label(cfg.group, wit.weight)}: {wit.value_h} > {wit.value_h_prime}\n")
    return EXIT_NEGATIVE if wit is None else EXIT_OK


def cmd_spectrum(cfg: JobConfig, args, out) -> int:
    (name,) = _one_name(args, cfg, 1)
    spec = homogeneous_spectrum(cfg.group, cfg.subgroup(name), args.truncation)
    if args.format == "json":
        out.write(dumps(spectrum_to_json(spec)))
    else:
        out.write(f"# spectrum of G/{name}, G = {cfg.group}, Casimir <= {args.truncation}\n")
        out.write(f"# {NORMALIZATION}\n")
        out.write(_table(["eigenvalue", "multiplicity"],
                         [(rational_str(c), m) for c, m in spec.entries]))
    return EXIT_OK


def cmd_isospec(cfg: JobConfig, args, out) -> int:
    a, b = _one_name(args, cfg, 2)
    sa = homogeneous_spectrum(cfg.group, cfg.subgroup(a), args.truncation)
    sb = homogeneous_spectrum(cfg.group, cfg.subgroup(b), args.truncation)
    diff = isospectral_compare(sa, sb)
    if args.format == "json":
        out.write(dumps({
            "a": a, "b": b, "truncation": args.truncation, "equal": diff is None,
            "first_difference": None if diff is None else {
                "eigenvalue": rational_str(diff.eigenvalue),
                "multiplicity_a": diff.multiplicity_a, "multiplicity_b": diff.multiplicity_b},
        }))
    elif diff is None:
        out.write(f"isospectral up to Casimir {args.truncation}\n")
    else:
        out.write(f"differ at eigenvalue {rational_str(diff.eigenvalue)}: "
                  f"{diff.multiplicity_a} vs {diff.multiplicity_b}\n")
    return EXIT_OK if diff is None else EXIT_NEGATIVE


def catalog_entries(max_parameter: int = 12):
    yield "trivial", None
    yield "maximal_torus", None
    yield "torus_normalizer", None
    for n in range(1, max_parameter + 1):
        yield "cyclic", n
    for n in range(1, max_parameter + 1):
        yield "binary_dihedral", n
    yield from ((name, None) for name in BINARY_POLYHEDRAL)
    yield "principal_a1_in_a2", None


def cmd_catalog(cfg: JobConfig | None, args, out) -> int:
    rows = []
    for name, param in catalog_entries(args.max_parameter):
        label = f"{name}({param})" if param is not None else name
        try:
            H = catalog_lookup(name, param)
            group = "A2" if name == "principal_a1_in_a2" else "A1"
            status = "ok"
            order = getattr(getattr(H, "measure", None), "component_count", "-")
        except CatalogError as exc:
            group, status, order = "-", f"rejected: {exc}", "-"
        rows.append((label, group, order, status))
    if args.format == "json":
        out.write(dumps({"entries": [{"name": r[0], "group": r[1], "components": r[2], "status": r[3]}
                                     for r in rows]}))
    else:
        out.write(_table(["entry", "group", "components", "status"], rows))
    return EXIT_OK if all(r[3] == "ok" for r in rows) else EXIT_ENGINE


COMMANDS = {
    "datum": cmd_datum,
    "limit": cmd_limit,
    "separate": cmd_separate,
    "spectrum": cmd_spectrum,
    "isospec": cmd_isospec,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dimdatum", description="Dimension data of closed subgroups.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--config", help="JSON job configuration")
    p.add_argument("--name", action="append",
                   help="subgroup or family name (repeat for separate/isospec)")
    p.add_argument("--truncation", type=int, help="Casimir cutoff (overrides the config)")
    p.add_argument("--format", choices=["table", "json"], help="output format (overrides the config)")
    p.add_argument("--max-parameter", type=int, default=12,
                   help="largest cyclic/binary dihedral parameter listed by 'catalog'")
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = None
        if args.config:
            cfg = load_config(args.config)
        elif args.command != "catalog":
            raise UsageError(f"{args.command} needs --config")
        if cfg is not None:
            if args.truncation is None:
                args.truncation = cfg.truncation
            if args.format is None:
                args.format = cfg.output
        args.format = args.format or "table"
        if args.truncation is not None and args.truncation < 0:
            raise UsageError("truncation must be nonnegative")
        return COMMANDS[args.command](cfg, args, out)
    except (ConfigError, UsageError, DescriptorError, CatalogInputError, OSError) as exc:
        err.write(f"dimdatum: error: {exc}\n")
        return EXIT_INPUT
    except (IntegralityError, CatalogError, ArithmeticError) as exc:
        err.write(f"dimdatum: internal consistency failure: {exc}\n")
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
