import pytest
from hypothesis import given, strategies as st

from optprune.errors import GroupViolation, UnknownOption, UnknownPreset, ValidationError
from optprune.model import (
    AlternativeGroup,
    OptionCatalog,
    Preset,
    RuntimeOption,
    Scenario,
    Usage,
    available_presets,
    enumerate_scenarios,
    make_plan,
    plan_baseline,
    plan_for_preset,
    plan_single_option,
)


def tiny_catalog():
    options = (
        RuntimeOption("alpha", "ALPHA_YES", ("--alpha",), "alpha"),
        RuntimeOption("no-alpha", "ALPHA_NO", ("--no-alpha",), "alpha"),
        RuntimeOption("beta", "BETA_YES", ("--beta",)),
    )
    groups = (AlternativeGroup("alpha", frozenset({"alpha", "no-alpha"})),)
    presets = (
        Preset("q1", "--preset=q1",
               {"alpha": Usage.USED, "no-alpha": Usage.UNUSED,
                "beta": Usage.UNUSED}),
        Preset("q2", "--preset=q2",
               {"alpha": Usage.UNUSED, "no-alpha": Usage.USED,
                "beta": Usage.USED}),
    )
    return OptionCatalog(options, groups, presets)


class TestCatalogInvariants:
    def test_duplicate_option_name_rejected(self):
        options = (
            RuntimeOption("x", "X_YES", ("--x",)),
            RuntimeOption("x", "X_NO", ("--no-x",)),
        )
        with pytest.raises(ValidationError, match="duplicate option names"):
            OptionCatalog(options, (), ())

    def test_duplicate_guard_rejected(self):
        options = (
            RuntimeOption("x", "SAME", ("--x",)),
            RuntimeOption("y", "SAME", ("--y",)),
        )
        with pytest.raises(ValidationError, match="duplicate guard"):
            OptionCatalog(options, (), ())

    def test_empty_catalog_rejected(self):
        with pytest.raises(ValidationError, match="no options"):
            OptionCatalog((), (), ())

    def test_empty_cli_tokens_rejected(self):
        with pytest.raises(ValidationError, match="cli_tokens"):
            RuntimeOption("x", "X_YES", ())

    def test_group_smaller_than_two_rejected(self):
        with pytest.raises(ValidationError, match="at least 2"):
            AlternativeGroup("cabac", frozenset({"cabac"}))

    def test_group_with_unknown_member_rejected(self):
        options = (RuntimeOption("x", "X_YES", ("--x",)),)
        groups = (AlternativeGroup("g", frozenset({"x", "ghost"})),)
        with pytest.raises(ValidationError, match="unknown option 'ghost'"):
            OptionCatalog(options, groups, ())

    def test_option_in_two_groups_rejected(self):
        options = (
            RuntimeOption("x", "X_YES", ("--x",)),
            RuntimeOption("y", "Y_YES", ("--y",)),
            RuntimeOption("z", "Z_YES", ("--z",)),
        )
        groups = (
            AlternativeGroup("g1", frozenset({"x", "y"})),
            AlternativeGroup("g2", frozenset({"x", "z"})),
        )
        with pytest.raises(ValidationError, match="in groups"):
            OptionCatalog(options, groups, ())

    def test_incomplete_usage_map_rejected(self):
        options = (
            RuntimeOption("x", "X_YES", ("--x",)),
            RuntimeOption("y", "Y_YES", ("--y",)),
        )
        presets = (Preset("p", "--preset=p", {"x": Usage.USED}),)
        with pytest.raises(ValidationError, match="cover exactly"):
            OptionCatalog(options, (), presets)


class TestPlans:
    def test_single_option_plan(self):
        catalog = tiny_catalog()
        plan = plan_single_option(catalog, "alpha")
        assert plan.id == "S1"
        assert plan.removed == {"alpha"}
        assert plan.scenario is Scenario.SINGLE_OPTION
        assert plan.macro_assignment == {
            "ALPHA_YES": 0, "ALPHA_NO": 1, "BETA_YES": 1
        }

    def test_unknown_option(self):
        with pytest.raises(UnknownOption):
            plan_single_option(tiny_catalog(), "nonexistent")

    def test_unknown_preset(self):
        with pytest.raises(UnknownPreset):
            plan_for_preset(tiny_catalog(), "nonexistent")

    def test_preset_plan_removes_unused(self):
        catalog = tiny_catalog()
        plan = plan_for_preset(catalog, "q1")
        assert plan.removed == {"no-alpha", "beta"}
        assert plan.scenario is Scenario.PRESET
        assert plan.preset_name == "q1"

    def test_group_violation_on_explicit_removal(self):
        catalog = tiny_catalog()
        with pytest.raises(GroupViolation, match="alpha"):
            make_plan(catalog, "SX", {"alpha", "no-alpha"}, Scenario.PRESET)

    def test_preset_emptying_group_is_violation(self):
        options = (
            RuntimeOption("a", "A_YES", ("--a",), "g"),
            RuntimeOption("b", "B_YES", ("--b",), "g"),
        )
        groups = (AlternativeGroup("g", frozenset({"a", "b"})),)
        presets = (
            Preset("bad", "--preset=bad",
                   {"a": Usage.UNUSED, "b": Usage.UNUSED}),
        )
        catalog = OptionCatalog(options, groups, presets)
        with pytest.raises(GroupViolation):
            plan_for_preset(catalog, "bad")

    def test_macro_assignment_invariant(self):
        catalog = tiny_catalog()
        for plan in enumerate_scenarios(catalog):
            assert set(plan.macro_assignment) == set(catalog.guard_macros())
            assert all(v in (0, 1) for v in plan.macro_assignment.values())
            zeros = sum(1 for v in plan.macro_assignment.values() if v == 0)
            assert zeros == len(plan.removed)


class TestEnumeration:
    def test_order_and_ids(self):
        catalog = tiny_catalog()
        plans = enumerate_scenarios(catalog)
        assert [p.id for p in plans] == ["S0", "S1", "S2", "S3", "S4", "S5"]
        assert plans[0].scenario is Scenario.BASELINE
        assert [p.scenario for p in plans[1:4]] == [Scenario.SINGLE_OPTION] * 3
        assert [p.scenario for p in plans[4:]] == [Scenario.PRESET] * 2

    def test_deterministic_across_calls(self):
        catalog = tiny_catalog()
        assert enumerate_scenarios(catalog) == enumerate_scenarios(catalog)

    def test_minimal_catalog_with_empty_preset_removal(self):
        options = (RuntimeOption("only", "ONLY_YES", ("--only",)),)
        presets = (Preset("p", "--preset=p", {"only": Usage.USED}),)
        catalog = OptionCatalog(options, (), presets)
        plans = enumerate_scenarios(catalog)
        assert len(plans) == 3
        preset_plan = plans[-1]
        assert preset_plan.scenario is Scenario.PRESET
        assert preset_plan.removed == frozenset()


class TestAvailablePresets:
    def test_baseline_keeps_all(self):
        catalog = tiny_catalog()
        assert available_presets(catalog, plan_baseline(catalog)) == {"q1", "q2"}

    def test_removal_hides_presets_using_option(self):
        catalog = tiny_catalog()
        plan = plan_single_option(catalog, "alpha")
        assert available_presets(catalog, plan) == {"q2"}

    def test_antitone_in_removals(self):
        catalog = tiny_catalog()
        small = make_plan(catalog, "SA", {"beta"}, Scenario.SINGLE_OPTION)
        large = make_plan(catalog, "SB", {"beta", "alpha"}, Scenario.PRESET)
        assert available_presets(catalog, large) <= available_presets(catalog, small)


class TestTableOneCatalog:
    """Checks against the bundled ten-option / ten-preset study matrix."""

    def test_twenty_one_plans(self, x264_manifest):
        plans = enumerate_scenarios(x264_manifest.catalog)
        assert len(plans) == 21
        assert plans[0].id == "S0"
        assert plans[-1].id == "S20"

    def test_ultrafast_removes_its_five_unused(self, x264_manifest):
        plan = plan_for_preset(x264_manifest.catalog, "ultrafast")
        assert plan.id == "S11"
        assert plan.removed == {
            "no-psy", "mixed-refs", "mbtree", "cabac", "weightb"
        }

    def test_veryfast_and_faster_identical(self, x264_manifest):
        catalog = x264_manifest.catalog
        a = plan_for_preset(catalog, "veryfast")
        b = plan_for_preset(catalog, "faster")
        assert a.removed == b.removed
        assert (a.id, b.id) == ("S13", "S14")

    def test_mixed_refs_removal_keeps_first_four_presets(self, x264_manifest):
        catalog = x264_manifest.catalog
        plan = plan_single_option(catalog, "mixed-refs")
        assert available_presets(catalog, plan) == {
            "ultrafast", "superfast", "veryfast", "faster"
        }

    def test_psy_removal_leaves_no_presets(self, x264_manifest):
        catalog = x264_manifest.catalog
        plan = plan_single_option(catalog, "psy")
        assert plan.id == "S10"
        assert available_presets(catalog, plan) == set()


@given(st.data())
def test_group_safety_property(data):
    """Any enumerated plan keeps at least one member of every group."""
    n_groups = data.draw(st.integers(1, 3))
    options = []
    groups = []
    for g in range(n_groups):
        members = set()
        for i in range(data.draw(st.integers(2, 3))):
            name = f"opt{g}_{i}"
            options.append(
                RuntimeOption(name, f"OPT{g}_{i}", (f"--{name}",), f"g{g}")
            )
            members.add(name)
        groups.append(AlternativeGroup(f"g{g}", frozenset(members)))
    usage = {}
    for group in groups:
        members = sorted(group.members)
        keep = data.draw(st.sampled_from(members))
        for m in members:
            usage[m] = Usage.USED if m == keep else Usage.UNUSED
    catalog = OptionCatalog(
        tuple(options), tuple(groups),
        (Preset("p", "--preset=p", usage),),
    )
    for plan in enumerate_scenarios(catalog):
        for group in catalog.groups:
            assert len(group.members & plan.removed) < len(group.members)
