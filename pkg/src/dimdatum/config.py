"""Job configuration files for the command line."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .lie_core import RootDatum, RootDatumError, build_root_datum
from .subgroups import CatalogError, DescriptorError, SubgroupDescriptor, catalog_lookup
from .serialize import subgroup_from_json


class ConfigError(ValueError):
    pass


@dataclass
class FamilySpec:
    members: list[SubgroupDescriptor]
    candidate: str | None = None


@dataclass
class JobConfig:
    group: RootDatum
    subgroups: dict[str, SubgroupDescriptor] = field(default_factory=dict)
    families: dict[str, FamilySpec] = field(default_factory=dict)
    truncation: int = 8
    output: str = "table"

    def subgroup(self, name: str) -> SubgroupDescriptor:
        try:
            return self.subgroups[name]
        except KeyError:
            raise ConfigError(f"unknown subgroup {name!r}; defined: {', '.join(sorted(self.subgroups)) or 'none'}")

    def family(self, name: str) -> FamilySpec:
        try:
            return self.families[name]
        except KeyError:
            raise ConfigError(f"unknown family {name!r}; defined: {', '.join(sorted(self.families)) or 'none'}")


def _expand_member(item, cfg: JobConfig) -> list[SubgroupDescriptor]:
    if isinstance(item, str):
        return [cfg.subgroup(item)]
    if isinstance(item, dict) and "catalog" in item:
        lo, hi = item.get("range", [None, None])
        if not isinstance(lo, int) or not isinstance(hi, int) or lo > hi:
            raise ConfigError(f"catalog generator needs an inclusive integer range, got {item!r}")
        return [catalog_lookup(item["catalog"], n, cfg.group) for n in range(lo, hi + 1)]
    if isinstance(item, dict) and "kind" in item:
        return [subgroup_from_json(item, cfg.group, item.get("label", ""))]
    raise ConfigError(f"cannot interpret family member {item!r}")


def parse_config(obj) -> JobConfig:
    if not isinstance(obj, dict):
        raise ConfigError("config must be a JSON object")
    try:
        group = build_root_datum(obj.get("group") or {})
        cfg = JobConfig(group=group)
        trunc = obj.get("truncation", 8)
        if not isinstance(trunc, int) or isinstance(trunc, bool) or trunc < 0:
            raise ConfigError(f"truncation must be a nonnegative integer, got {trunc!r}")
        cfg.truncation = trunc
        cfg.output = obj.get("output", "table")
        if cfg.output not in ("table", "json"):
            raise ConfigError(f"output must be 'table' or 'json', got {cfg.output!r}")
        for name, spec in (obj.get("subgroups") or {}).items():
            cfg.subgroups[name] = subgroup_from_json(spec, group, name)
        for name, spec in (obj.get("families") or {}).items():
            if isinstance(spec, list):
                spec = {"members": spec}
            members = []
            for item in spec.get("members", []):
                members.extend(_expand_member(item, cfg))
            cand = spec.get("candidate")
            if cand is not None:
                cfg.subgroup(cand)
            cfg.families[name] = FamilySpec(members, cand)
    except (RootDatumError, DescriptorError) as exc:
        raise ConfigError(str(exc)) from exc
    return cfg


def load_config(path) -> JobConfig:
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ConfigError(f"config is not UTF-8 (byte {exc.start})") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[:exc.pos].encode("utf-8"))
        raise ConfigError(f"malformed JSON at byte offset {offset}: {exc.msg}") from exc
    return parse_config(obj)
