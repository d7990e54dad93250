"""Acceptance suite: every release-gating criterion at its pinned tolerance.

Each test prints one PASS line (visible with ``pytest -s`` or on failure)
and enforces its runtime budget, so the suite doubles as the go/no-go
checklist for the pipeline.
"""

import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from optprune.annotations import scan_guards
from optprune.build import verify_option_annotation
from optprune.campaign import Campaign
from optprune.gadgets import GadgetConfig, count_gadgets_builtin
from optprune.manifest import load_manifest
from optprune.measure import summarize
from optprune.model import (
    available_presets,
    enumerate_scenarios,
    plan_for_preset,
    plan_single_option,
)
from optprune.stats import (
    Alternative,
    Method,
    _average_ranks,
    _normal_tail,
    percent_change,
    wilcoxon_signed_rank,
)
from optprune.x86 import SubsetDecoder

from .conftest import FIXTURES, MANIFESTS
from .elfcraft import write_text_elf
from .gadget_oracle import brute_force_gadgets
from .test_gadgets import CRAFTED


def report(name, started):
    print(f"ACCEPTANCE PASS: {name} ({time.perf_counter() - started:.2f}s)")


def test_exact_wilcoxon_reproduction():
    started = time.perf_counter()

    x20 = [float(100 + i) for i in range(1, 21)]
    result = wilcoxon_signed_rank(x20, [100.0] * 20, Alternative.GREATER)
    assert result.w_statistic == 210
    assert result.method is Method.EXACT
    assert abs(result.p_value - 9.5367e-07) < 1e-9

    x10 = [float(50 + i) for i in range(1, 11)]
    result = wilcoxon_signed_rank(x10, [50.0] * 10, Alternative.GREATER)
    assert result.w_statistic == 55
    assert abs(result.p_value - 9.766e-4) < 1e-7

    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"exact reproduction took {elapsed:.2f}s"
    report("exact Wilcoxon reproduction (W=210/p=2^-20, W=55/p=2^-10)", started)


def test_wilcoxon_property_suite():
    started = time.perf_counter()

    # Exact vs normal approximation on 100 random tie-free instances.
    rng = random.Random(20260810)
    checked = 0
    while checked < 100:
        n = rng.randint(10, 25)
        magnitudes = rng.sample(range(1, 100_000), n)
        diffs = [m * rng.choice((-1, 1)) for m in magnitudes]
        x = [float(d) for d in diffs]
        y = [0.0] * n
        exact = wilcoxon_signed_rank(x, y, Alternative.GREATER)
        assert exact.method is Method.EXACT
        ranks = _average_ranks([abs(v) for v in x])
        approx = _normal_tail(ranks, exact.w_statistic, Alternative.GREATER)
        assert abs(exact.p_value - approx) < 0.01, (diffs, exact.p_value, approx)
        checked += 1

    # 2^-n law for all-positive distinct differences.
    for n in range(3, 21):
        x = [float(i) for i in range(1, n + 1)]
        result = wilcoxon_signed_rank(x, [0.0] * n, Alternative.GREATER)
        assert result.p_value == pytest.approx(2.0**-n, rel=1e-12)

    # Symmetry: swap samples, flip the alternative.
    for _ in range(50):
        n = rng.randint(2, 25)
        x = [rng.uniform(-10, 10) for _ in range(n)]
        y = [rng.uniform(-10, 10) for _ in range(n)]
        if all(a == b for a, b in zip(x, y)):
            continue
        forward = wilcoxon_signed_rank(x, y, Alternative.GREATER)
        backward = wilcoxon_signed_rank(y, x, Alternative.LESS)
        assert abs(forward.p_value - backward.p_value) < 1e-12

    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"property suite took {elapsed:.2f}s"
    report("Wilcoxon property suite (100 instances, 2^-n law, symmetry)", started)


def test_gadget_counter_matches_oracle(tmp_path):
    started = time.perf_counter()
    decoder = SubsetDecoder()
    assert len(CRAFTED) >= 10

    for name, hexstr in sorted(CRAFTED.items()):
        data = bytes.fromhex(hexstr)
        assert len(data) <= 4096
        path = write_text_elf(tmp_path / f"{name}.elf", data)
        counts = []
        for depth in (1, 2, 3, 10):
            config = GadgetConfig(depth=depth)
            got = count_gadgets_builtin(path, config, decoder)
            want_count, want_kinds = brute_force_gadgets(data, config, decoder)
            assert got.unique_count == want_count, (name, depth)
            assert got.per_terminator == want_kinds, (name, depth)
            counts.append(got.unique_count)
        assert counts == sorted(counts), f"depth monotonicity violated: {name}"

    pop_ret = count_gadgets_builtin(
        write_text_elf(tmp_path / "case-58c3.elf", bytes.fromhex("58c3"))
    )
    assert pop_ret.unique_count == 2
    double_ret = count_gadgets_builtin(
        write_text_elf(tmp_path / "case-c3c3.elf", bytes.fromhex("c3c3"))
    )
    assert double_ret.unique_count == 1

    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"gadget acceptance took {elapsed:.2f}s"
    report(f"gadget counter vs brute-force oracle on {len(CRAFTED)} fixtures",
           started)


def test_scenario_generation_table1():
    started = time.perf_counter()
    manifest = load_manifest(MANIFESTS / "x264-table1.toml")
    catalog = manifest.catalog

    plans = enumerate_scenarios(catalog)
    assert len(plans) == 21

    ultrafast = plan_for_preset(catalog, "ultrafast")
    assert ultrafast.id == "S11"
    assert ultrafast.removed == {
        "no-psy", "mixed-refs", "mbtree", "cabac", "weightb"
    }

    psy_plan = plan_single_option(catalog, "psy")
    assert available_presets(catalog, psy_plan) == set()

    assert (
        plan_for_preset(catalog, "veryfast").removed
        == plan_for_preset(catalog, "faster").removed
    )

    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"scenario generation took {elapsed:.2f}s"
    report("scenario generation on the ten-option study matrix", started)


def test_end_to_end_pipeline(tmp_path):
    started = time.perf_counter()
    manifest = load_manifest(FIXTURES / "minienc.toml")
    campaign = Campaign(manifest, tmp_path / "out")
    ok = campaign.run_all()
    assert ok, "pipeline reported failure"

    records = campaign.result.plans
    assert all(r.build_ok for r in records)
    assert all(r.oracle_verdict == "VALID" for r in records)

    baseline_size = records[0].size
    specialized = [r for r in records if r.scenario != "baseline"]
    assert all(r.size <= baseline_size for r in specialized)
    assert any(r.size < baseline_size for r in specialized)

    out = tmp_path / "out"
    for artifact in ("plans.txt", "measurements.tsv", "hypotheses.tsv",
                     "report.md", "tradeoff.tsv", "campaign.json"):
        assert (out / artifact).is_file(), artifact
    for record in records:
        assert (out / record.plan_id / "build.log").is_file()
        assert (out / record.plan_id / "oracle.json").is_file()
        assert (out / "oracle" / f"{record.plan_id}.txt").is_file()

    # Nothing was ever benchmarked on a preset its plan removed.
    from optprune.measure import read_measurements

    allowed = {r.plan_id: set(r.available_presets) for r in records}
    for row in read_measurements(out / "measurements.tsv"):
        assert row["preset"] in allowed[row["plan"]], row

    elapsed = time.perf_counter() - started
    assert elapsed < 120.0, f"pipeline took {elapsed:.2f}s"
    report(f"end-to-end pipeline on minienc ({len(records)} plans)", started)


def test_seeded_fault_detection(tmp_path):
    started = time.perf_counter()

    good = load_manifest(FIXTURES / "minienc.toml")
    for option in ("fast", "blur", "sharp"):
        verdict = verify_option_annotation(
            good.target, good.catalog, option, tmp_path / f"good-{option}",
            list(good.inputs),
        )
        assert verdict.passed, f"false alarm on good fixture option {option}"

    compile_fault = load_manifest(FIXTURES / "minienc-broken-compile.toml")
    verdict = verify_option_annotation(
        compile_fault.target, compile_fault.catalog, "blur",
        tmp_path / "bc", list(compile_fault.inputs),
    )
    assert verdict.failed_check == "A"

    behavior_fault = load_manifest(FIXTURES / "minienc-broken-behavior.toml")
    verdict = verify_option_annotation(
        behavior_fault.target, behavior_fault.catalog, "sharp",
        tmp_path / "bb", list(behavior_fault.inputs),
    )
    assert verdict.failed_check == "B"
    assert "input=" in verdict.evidence and "config=" in verdict.evidence

    interop_fault = load_manifest(FIXTURES / "minienc-broken-interop.toml")
    verdict = verify_option_annotation(
        interop_fault.target, interop_fault.catalog, "fast",
        tmp_path / "bi", list(interop_fault.inputs),
    )
    assert verdict.failed_check == "C"
    assert "--fast" in verdict.evidence

    report("seeded-fault detection (A, B, C; zero false passes)", started)


def test_percent_change_and_summary_arithmetic():
    started = time.perf_counter()

    rng = random.Random(31)
    for _ in range(2000):
        baseline = rng.uniform(1e-3, 1e9)
        fraction = rng.uniform(-0.99, 0.99)
        specialized = baseline * (1 + fraction)
        assert abs(percent_change(baseline, specialized) - fraction * 100) < 1e-3

    baseline = 3_096_176
    back = baseline * (1 - 0.05416)
    assert abs(percent_change(baseline, back) - (-5.416)) < 1e-3

    summary = summarize([0.26, 0.28, 0.28, 0.28, 0.30])
    assert abs(summary.mean - 0.28) < 1e-9
    assert abs(summary.std - 0.014142135623730951) < 1e-9

    report("percent-change round-trip and summary arithmetic", started)


def test_minienc_determinism_and_combined_guard(tmp_path, minienc_builds,
                                                minienc_manifest):
    started = time.perf_counter()

    artifact = minienc_builds.artifact("S0")
    for preset in minienc_manifest.catalog.presets:
        for input_path in minienc_manifest.inputs:
            digests = set()
            for i in range(10):
                out = tmp_path / f"d-{preset.name}-{input_path.name}-{i}.bin"
                proc = subprocess.run(
                    [str(artifact.binary_path), preset.cli_token,
                     "-o", str(out), str(input_path)],
                    capture_output=True, text=True,
                )
                assert proc.returncode == 0
                digests.add(out.read_bytes())
            assert len(digests) == 1, (
                f"nondeterministic output for {preset.name}/{input_path.name}"
            )

    usage = scan_guards(
        minienc_manifest.target.source_root, minienc_manifest.catalog
    )
    combined = [r for r in usage.regions if r.expression == ("FAST_YES", "FAST_NO")]
    assert combined, "combined-guard else region not detected"

    report("minienc determinism (10 runs x 4 presets x 3 inputs) and "
           "combined-guard detection", started)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
