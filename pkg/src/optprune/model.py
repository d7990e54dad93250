"""Run-time option catalog, presets, and specialization plans.

A catalog describes the removable run-time options of one target program:
each option has a guard macro that conditionally compiles its code, options
with alternative logic (``--x`` / ``--no-x``) form groups of which at least
one member must survive any specialization, and presets bundle options with
a per-option USED/UNUSED matrix. A specialization plan is a removal set
plus the 0/1 guard-macro assignment realizing it.

Everything here is immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import GroupViolation, UnknownOption, UnknownPreset, ValidationError


class Usage(enum.Enum):
    USED = "used"
    UNUSED = "unused"


class Scenario(enum.Enum):
    BASELINE = "baseline"
    SINGLE_OPTION = "single-option"
    PRESET = "preset"


@dataclass(frozen=True)
class RuntimeOption:
    """One removable run-time option and the guard macro that strips it."""

    name: str
    guard_macro: str
    cli_tokens: tuple[str, ...]
    group_id: str | None = None

    def __post_init__(self):
        if not self.name:
            raise ValidationError("option name must be non-empty")
        if not self.guard_macro:
            raise ValidationError(f"option {self.name!r}: guard macro must be non-empty")
        if not self.cli_tokens:
            raise ValidationError(f"option {self.name!r}: cli_tokens must be non-empty")


@dataclass(frozen=True)
class AlternativeGroup:
    """Options with alternative logic; removing all members is invalid."""

    id: str
    members: frozenset[str]

    def __post_init__(self):
        if len(self.members) < 2:
            raise ValidationError(
                f"alternative group {self.id!r} needs at least 2 members, "
                f"got {sorted(self.members)}"
            )


@dataclass(frozen=True)
class Preset:
    """A named option bundle with a complete USED/UNUSED usage map."""

    name: str
    cli_token: str
    usage: Mapping[str, Usage]

    def unused_options(self) -> tuple[str, ...]:
        return tuple(n for n, u in self.usage.items() if u is Usage.UNUSED)

    def used_options(self) -> tuple[str, ...]:
        return tuple(n for n, u in self.usage.items() if u is Usage.USED)


@dataclass(frozen=True)
class OptionCatalog:
    """The full option/group/preset model of one target program."""

    options: tuple[RuntimeOption, ...]
    groups: tuple[AlternativeGroup, ...]
    presets: tuple[Preset, ...]

    def __post_init__(self):
        if not self.options:
            raise ValidationError("catalog has no options")
        names = [o.name for o in self.options]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ValidationError(f"duplicate option names: {dupes}")
        guards = [o.guard_macro for o in self.options]
        if len(set(guards)) != len(guards):
            dupes = sorted({g for g in guards if guards.count(g) > 1})
            raise ValidationError(f"duplicate guard macros: {dupes}")
        name_set = set(names)
        seen_in_group: dict[str, str] = {}
        for group in self.groups:
            for member in group.members:
                if member not in name_set:
                    raise ValidationError(
                        f"group {group.id!r} references unknown option {member!r}"
                    )
                if member in seen_in_group:
                    raise ValidationError(
                        f"option {member!r} is in groups {seen_in_group[member]!r} "
                        f"and {group.id!r}"
                    )
                seen_in_group[member] = group.id
        for option in self.options:
            if option.group_id is not None:
                group = next((g for g in self.groups if g.id == option.group_id), None)
                if group is None or option.name not in group.members:
                    raise ValidationError(
                        f"option {option.name!r} names group {option.group_id!r} "
                        "but is not a member of it"
                    )
        preset_names = [p.name for p in self.presets]
        if len(set(preset_names)) != len(preset_names):
            raise ValidationError("duplicate preset names")
        for preset in self.presets:
            covered = set(preset.usage)
            if covered != name_set:
                missing = sorted(name_set - covered)
                extra = sorted(covered - name_set)
                raise ValidationError(
                    f"preset {preset.name!r} usage map must cover exactly the "
                    f"catalogued options (missing={missing}, unknown={extra})"
                )

    # -- lookups ---------------------------------------------------------

    def option(self, name: str) -> RuntimeOption:
        for option in self.options:
            if option.name == name:
                return option
        raise UnknownOption(f"no option named {name!r}")

    def preset(self, name: str) -> Preset:
        for preset in self.presets:
            if preset.name == name:
                return preset
        raise UnknownPreset(f"no preset named {name!r}")

    def option_names(self) -> tuple[str, ...]:
        return tuple(o.name for o in self.options)

    def guard_macros(self) -> tuple[str, ...]:
        return tuple(o.guard_macro for o in self.options)

    def group_of(self, option_name: str) -> AlternativeGroup | None:
        for group in self.groups:
            if option_name in group.members:
                return group
        return None


@dataclass(frozen=True)
class SpecializationPlan:
    """A removal set plus the guard assignment handed to the build."""

    id: str
    removed: frozenset[str]
    macro_assignment: Mapping[str, int]
    scenario: Scenario
    # Preset plans remember which preset they specialize toward.
    preset_name: str | None = field(default=None, compare=False)


def _check_groups(catalog: OptionCatalog, removed: Iterable[str], plan_desc: str):
    removed = set(removed)
    for group in catalog.groups:
        if group.members <= removed:
            raise GroupViolation(
                f"{plan_desc} removes every member of alternative group "
                f"{group.id!r} ({sorted(group.members)})"
            )


def make_plan(
    catalog: OptionCatalog,
    plan_id: str,
    removed: Iterable[str],
    scenario: Scenario,
    preset_name: str | None = None,
) -> SpecializationPlan:
    """Build a plan for an explicit removal set, enforcing all invariants."""
    removed = frozenset(removed)
    for name in removed:
        catalog.option(name)  # raises UnknownOption
    _check_groups(catalog, removed, f"plan {plan_id}")
    removed_guards = {catalog.option(n).guard_macro for n in removed}
    assignment = {
        o.guard_macro: 0 if o.guard_macro in removed_guards else 1
        for o in catalog.options
    }
    return SpecializationPlan(
        id=plan_id,
        removed=removed,
        macro_assignment=assignment,
        scenario=scenario,
        preset_name=preset_name,
    )


def plan_baseline(catalog: OptionCatalog) -> SpecializationPlan:
    """The unspecialized S0 plan: nothing removed, all guards enabled."""
    return make_plan(catalog, "S0", (), Scenario.BASELINE)


def plan_single_option(catalog: OptionCatalog, option_name: str) -> SpecializationPlan:
    """Specialize by removing one run-time option.

    The plan id follows the S-numbering: the k-th catalogued option yields
    plan ``S<k>``.
    """
    option = catalog.option(option_name)
    index = catalog.options.index(option)
    return make_plan(
        catalog, f"S{index + 1}", {option_name}, Scenario.SINGLE_OPTION
    )


def plan_for_preset(catalog: OptionCatalog, preset_name: str) -> SpecializationPlan:
    """Specialize toward a preset by removing every option it leaves unused."""
    preset = catalog.preset(preset_name)
    index = catalog.presets.index(preset)
    plan_id = f"S{len(catalog.options) + index + 1}"
    return make_plan(
        catalog, plan_id, preset.unused_options(), Scenario.PRESET,
        preset_name=preset_name,
    )


def enumerate_scenarios(catalog: OptionCatalog) -> list[SpecializationPlan]:
    """All plans in deterministic order: S0, one per option, one per preset."""
    plans = [plan_baseline(catalog)]
    for option in catalog.options:
        plans.append(plan_single_option(catalog, option.name))
    for preset in catalog.presets:
        plans.append(plan_for_preset(catalog, preset.name))
    return plans


def available_presets(catalog: OptionCatalog, plan: SpecializationPlan) -> set[str]:
    """Presets still usable under a plan.

    A preset survives iff none of the plan's removed options is marked USED
    by it.
    """
    for name in plan.removed:
        catalog.option(name)
    out = set()
    for preset in catalog.presets:
        if not any(preset.usage[name] is Usage.USED for name in plan.removed):
            out.add(preset.name)
    return out
