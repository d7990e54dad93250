"""Manifest loading.

A manifest is a TOML file describing one specialization target: where its
sources live, how to build and run it, its removable options and presets,
the benchmark inputs, and the metrics to extract from program output.

Field names in the file are normative:

    [target]            name, source_root, guard_header, build_cmd,
                        run_cmd_template, rejection_pattern
    [[options]]         name, guard, cli_tokens, group (optional)
    [[presets]]         name, cli_token, used, unused
    inputs              list of input file paths
    [[metrics]]         name, unit, pattern, capture_group (optional)
    repetitions         default 5
    alpha               default 0.05

Relative paths (source_root, inputs) resolve against the manifest's
directory; guard_header resolves against source_root.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import ParseError, ValidationError
from .model import AlternativeGroup, OptionCatalog, Preset, RuntimeOption, Usage

DEFAULT_REPETITIONS = 5
DEFAULT_ALPHA = 0.05


@dataclass(frozen=True)
class TargetSpec:
    """Build/run contract of the program under specialization."""

    name: str
    source_root: Path
    guard_header: Path
    build_cmd: str
    run_cmd_template: str
    rejection_pattern: str


@dataclass(frozen=True)
class MetricSpec:
    """A metric scraped from program output via a regex capture group."""

    name: str
    unit: str
    pattern: str
    capture_group: int = 1

    def extract(self, text: str) -> float | None:
        match = re.search(self.pattern, text)
        if match is None:
            return None
        try:
            return float(match.group(self.capture_group))
        except (IndexError, ValueError):
            return None


@dataclass(frozen=True)
class Manifest:
    path: Path
    target: TargetSpec
    catalog: OptionCatalog
    inputs: tuple[Path, ...]
    metrics: tuple[MetricSpec, ...]
    repetitions: int
    alpha: float


def _require(table: dict, key: str, kind, where: str):
    if key not in table:
        raise ParseError(f"{where}: missing required field {key!r}")
    value = table[key]
    if not isinstance(value, kind):
        raise ParseError(
            f"{where}: field {key!r} must be {kind.__name__}, got {type(value).__name__}"
        )
    return value


def _build_catalog(raw: dict, where: str) -> OptionCatalog:
    options = []
    group_members: dict[str, set[str]] = {}
    for i, entry in enumerate(raw.get("options", [])):
        ctx = f"{where}: options[{i}]"
        name = _require(entry, "name", str, ctx)
        guard = _require(entry, "guard", str, ctx)
        tokens = _require(entry, "cli_tokens", list, ctx)
        if not all(isinstance(t, str) for t in tokens):
            raise ParseError(f"{ctx}: cli_tokens must be strings")
        group = entry.get("group")
        if group is not None and not isinstance(group, str):
            raise ParseError(f"{ctx}: group must be a string")
        options.append(RuntimeOption(name, guard, tuple(tokens), group))
        if group is not None:
            group_members.setdefault(group, set()).add(name)

    groups = tuple(
        AlternativeGroup(gid, frozenset(members))
        for gid, members in sorted(group_members.items())
    )

    option_names = {o.name for o in options}
    presets = []
    for i, entry in enumerate(raw.get("presets", [])):
        ctx = f"{where}: presets[{i}]"
        name = _require(entry, "name", str, ctx)
        cli_token = _require(entry, "cli_token", str, ctx)
        used = _require(entry, "used", list, ctx)
        unused = _require(entry, "unused", list, ctx)
        overlap = set(used) & set(unused)
        if overlap:
            raise ValidationError(
                f"{ctx}: options listed both used and unused: {sorted(overlap)}"
            )
        dangling = (set(used) | set(unused)) - option_names
        if dangling:
            raise ValidationError(f"{ctx}: unknown options {sorted(dangling)}")
        usage = {n: Usage.USED for n in used}
        usage.update({n: Usage.UNUSED for n in unused})
        presets.append(Preset(name, cli_token, usage))

    return OptionCatalog(tuple(options), groups, tuple(presets))


def load_manifest(path: str | Path) -> Manifest:
    """Parse and validate a manifest file."""
    path = Path(path)
    try:
        raw = tomllib.loads(path.read_text(encoding="utf-8"))
    except tomllib.TOMLDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc

    where = str(path)
    known_top = {"target", "options", "presets", "inputs", "metrics",
                 "repetitions", "alpha"}
    stray = set(raw) - known_top
    if stray:
        raise ParseError(f"{where}: unknown top-level keys {sorted(stray)}")

    target_raw = _require(raw, "target", dict, where)
    known_target = {"name", "source_root", "guard_header", "build_cmd",
                    "run_cmd_template", "rejection_pattern"}
    stray = set(target_raw) - known_target
    if stray:
        raise ParseError(
            f"{where}: unknown [target] keys {sorted(stray)} "
            "(top-level keys must appear before any table header)"
        )
    base = path.parent
    source_root = base / _require(target_raw, "source_root", str, f"{where}: target")
    target = TargetSpec(
        name=_require(target_raw, "name", str, f"{where}: target"),
        source_root=source_root,
        guard_header=source_root / _require(target_raw, "guard_header", str, f"{where}: target"),
        build_cmd=_require(target_raw, "build_cmd", str, f"{where}: target"),
        run_cmd_template=_require(target_raw, "run_cmd_template", str, f"{where}: target"),
        rejection_pattern=_require(target_raw, "rejection_pattern", str, f"{where}: target"),
    )

    catalog = _build_catalog(raw, where)

    inputs = tuple(base / p for p in raw.get("inputs", []))

    metrics = []
    for i, entry in enumerate(raw.get("metrics", [])):
        ctx = f"{where}: metrics[{i}]"
        pattern = _require(entry, "pattern", str, ctx)
        try:
            re.compile(pattern)
        except re.error as exc:
            raise ParseError(f"{ctx}: bad pattern: {exc}") from exc
        metrics.append(
            MetricSpec(
                name=_require(entry, "name", str, ctx),
                unit=_require(entry, "unit", str, ctx),
                pattern=pattern,
                capture_group=entry.get("capture_group", 1),
            )
        )

    repetitions = raw.get("repetitions", DEFAULT_REPETITIONS)
    if not isinstance(repetitions, int) or repetitions < 1:
        raise ParseError(f"{where}: repetitions must be a positive integer")
    alpha = raw.get("alpha", DEFAULT_ALPHA)
    if not isinstance(alpha, (int, float)) or not 0 < alpha < 1:
        raise ParseError(f"{where}: alpha must be in (0, 1)")

    return Manifest(
        path=path,
        target=target,
        catalog=catalog,
        inputs=inputs,
        metrics=tuple(metrics),
        repetitions=repetitions,
        alpha=float(alpha),
    )


def load_catalog(path: str | Path) -> OptionCatalog:
    """Load only the option catalog from a manifest file."""
    return load_manifest(path).catalog
