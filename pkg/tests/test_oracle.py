import pytest

from optprune.build import build_variant
from optprune.errors import InputError
from optprune.manifest import load_manifest
from optprune.model import plan_single_option
from optprune.oracle import (
    NO_PRESETS_FLAG,
    OracleConfig,
    run_behavior_check,
    run_interop_check,
    validate,
)

from .conftest import FIXTURES


@pytest.fixture(scope="module")
def good(minienc_builds):
    return minienc_builds


def test_self_comparison_is_valid(good, minienc_manifest):
    """Oracle symmetry: the baseline validated against itself."""
    baseline = good.artifact("S0")
    result = validate(
        good.plans["S0"], baseline, baseline, list(minienc_manifest.inputs),
        minienc_manifest.catalog, minienc_manifest.target,
    )
    assert result.verdict == "VALID"
    assert result.reason is None
    # 4 presets x 3 inputs, no removed tokens
    assert len(result.behavior_cases) == 12
    assert result.interop_cases == []


def test_single_option_plan_valid_with_twelve_cases(good, minienc_manifest):
    """Removing the preset-free option keeps all 4 presets over 3 inputs."""
    plan = good.plans["S1"]  # removes "fast"
    result = validate(
        plan, good.artifact("S0"), good.artifact("S1"),
        list(minienc_manifest.inputs), minienc_manifest.catalog,
        minienc_manifest.target,
    )
    assert result.verdict == "VALID"
    assert len(result.behavior_cases) == 12
    assert all(c.equal for c in result.behavior_cases)
    assert [c.cli_token for c in result.interop_cases] == ["--fast"]
    assert all(c.rejected for c in result.interop_cases)


def test_no_retained_presets_flagged_and_vacuous(good, minienc_manifest):
    plan = good.plans["S5"]  # removes "psy", used by every preset
    result = validate(
        plan, good.artifact("S0"), good.artifact("S5"),
        list(minienc_manifest.inputs), minienc_manifest.catalog,
        minienc_manifest.target,
    )
    assert result.behavior_cases == []
    assert NO_PRESETS_FLAG in result.flags
    assert result.verdict == "VALID"  # vacuous behavior + rejected flag


def test_failed_build_short_circuits(good, minienc_manifest):
    from optprune.build import BuildArtifact

    broken = BuildArtifact(
        plan_id="S3", binary_path=None, build_ok=False, build_log="boom",
        toolchain_fingerprint="cc",
    )
    result = validate(
        good.plans["S3"], good.artifact("S0"), broken,
        list(minienc_manifest.inputs), minienc_manifest.catalog,
        minienc_manifest.target,
    )
    assert result.verdict == "INVALID"
    assert result.reason == "not compilable"
    assert result.behavior_cases == [] and result.interop_cases == []


def test_baseline_must_be_built(good, minienc_manifest):
    from optprune.build import BuildArtifact

    broken = BuildArtifact("S0", None, False, "", "cc")
    with pytest.raises(InputError):
        validate(
            good.plans["S0"], broken, good.artifact("S0"),
            list(minienc_manifest.inputs), minienc_manifest.catalog,
            minienc_manifest.target,
        )


def test_behavior_mismatch_detected(tmp_path, minienc_manifest):
    """Baseline of the behavior-fault tree vs its sharp-removed build."""
    manifest = load_manifest(FIXTURES / "minienc-broken-behavior.toml")
    from optprune.model import plan_baseline

    baseline = build_variant(manifest.target, plan_baseline(manifest.catalog), tmp_path)
    plan = plan_single_option(manifest.catalog, "sharp")
    specialized = build_variant(manifest.target, plan, tmp_path)
    result = validate(
        plan, baseline, specialized, list(manifest.inputs),
        manifest.catalog, manifest.target,
    )
    assert result.verdict == "INVALID"
    assert result.reason.startswith("behavior")
    bad = [c for c in result.behavior_cases if not c.equal]
    assert bad
    assert bad[0].baseline_digest != bad[0].specialized_digest


def test_unrejected_flag_detected(tmp_path):
    manifest = load_manifest(FIXTURES / "minienc-broken-interop.toml")
    from optprune.model import plan_baseline

    baseline = build_variant(manifest.target, plan_baseline(manifest.catalog), tmp_path)
    plan = plan_single_option(manifest.catalog, "fast")
    specialized = build_variant(manifest.target, plan, tmp_path)
    result = validate(
        plan, baseline, specialized, list(manifest.inputs),
        manifest.catalog, manifest.target,
    )
    assert result.verdict == "INVALID"
    assert result.reason == "interoperability: '--fast' was not rejected"
    assert all(c.equal for c in result.behavior_cases)  # B passed
    case = result.interop_cases[0]
    assert not case.rejected and case.produced_output


def test_retained_token_reports_unrejected(good, minienc_manifest):
    """Misuse: passing a retained option's token shows up as rejected=False."""
    cases = run_interop_check(
        good.artifact("S1"), ["--blur"],  # blur is retained in S1
        minienc_manifest.target.rejection_pattern,
        minienc_manifest.target.run_cmd_template,
        minienc_manifest.inputs[0],
    )
    assert len(cases) == 1
    assert not cases[0].rejected
    assert cases[0].produced_output


def test_empty_removed_tokens_empty_cases(good, minienc_manifest):
    cases = run_interop_check(
        good.artifact("S0"), [],
        minienc_manifest.target.rejection_pattern,
        minienc_manifest.target.run_cmd_template,
        minienc_manifest.inputs[0],
    )
    assert cases == []


def test_behavior_check_execution_error_marks_case(good, minienc_manifest, tmp_path):
    missing_input = tmp_path / "missing.bin"
    cases = run_behavior_check(
        good.artifact("S0"), good.artifact("S0"), [missing_input],
        ["--preset=p1"], minienc_manifest.target.run_cmd_template,
    )
    assert len(cases) == 1
    assert not cases[0].equal
    assert "exited nonzero" in cases[0].error


def test_size_only_mode(good, minienc_manifest):
    config = OracleConfig(size_only=True)
    cases = run_behavior_check(
        good.artifact("S0"), good.artifact("S1"),
        list(minienc_manifest.inputs)[:1], ["--preset=p1"],
        minienc_manifest.target.run_cmd_template, config,
    )
    assert cases[0].equal
    assert cases[0].baseline_digest.startswith("size:")


def test_result_serializes(good, minienc_manifest):
    result = validate(
        good.plans["S1"], good.artifact("S0"), good.artifact("S1"),
        list(minienc_manifest.inputs), minienc_manifest.catalog,
        minienc_manifest.target,
    )
    data = result.to_dict()
    assert data["plan_id"] == "S1"
    assert data["verdict"] == "VALID"
    assert len(data["behavior_cases"]) == 12
