import pytest

from optprune.errors import UnknownMetric
from optprune.measure import MetricSummary
from optprune.report import (
    CampaignResult,
    HypothesisRecord,
    PlanRecord,
    emit_hypotheses_table,
    emit_plans_text,
    emit_report_md,
    emit_results_table,
    emit_tradeoff_table,
    load_campaign,
    save_campaign,
)
from optprune.stats import percent_change


def summary(mean_value, std=0.0, n=5):
    return MetricSummary(mean=mean_value, std=std, n=n)


def toy_campaign():
    """Two presets, one single-option plan, one preset plan, plus one plan
    with no retained presets (all performance cells NaN)."""

    def summaries(p1, p2):
        out = {"time": {}}
        if p1 is not None:
            out["time"]["p1"] = {"v1": summary(p1), "v2": summary(p1 + 0.02)}
        if p2 is not None:
            out["time"]["p2"] = {"v1": summary(p2), "v2": summary(p2 + 0.02)}
        return out

    s0 = PlanRecord(
        "S0", "baseline", [], None, True, "aa", 1000, 500, "builtin",
        "VALID", None, [], ["p1", "p2"], summaries(1.00, 2.00),
    )
    s1 = PlanRecord(
        "S1", "single-option", ["x"], None, True, "bb", 990, 490, "builtin",
        "VALID", None, [], ["p1", "p2"], summaries(0.90, 2.10),
    )
    s2 = PlanRecord(
        "S2", "preset", ["x", "y"], "p1", True, "cc", 900, 400, "builtin",
        "VALID", None, [], ["p1"], summaries(0.80, None),
    )
    s3 = PlanRecord(
        "S3", "preset", ["z"], "p2", True, "dd", 980, 505, "builtin",
        "VALID", None, ["no measurable presets"], [], {},
    )
    return CampaignResult(
        target_name="toy",
        catalog_digest="deadbeef",
        toolchain_fingerprint="cc 0.0",
        generated_at="2000-01-01T00:00:00+00:00",
        clock_resolution=1e-9,
        preset_order=["p1", "p2"],
        metrics=[("time", "s")],
        plans=[s0, s1, s2, s3],
        hypotheses=[
            HypothesisRecord("H01", "size", "S1-S3", "greater", 6.0, 0.125,
                             3, "exact", False),
            HypothesisRecord("H03-time", "time", "S1-S3", "greater", None,
                             None, None, None, False, undefined=True),
        ],
    )


class TestResultsTable:
    def test_shape_and_dashes(self):
        table = emit_results_table(toy_campaign(), "time")
        lines = table.splitlines()
        assert lines[0].split()[:2] == ["System", "[s]"]
        s3_row = next(l for l in lines if l.startswith("S3"))
        assert s3_row.split()[1:] == ["-", "-"]
        s2_row = next(l for l in lines if l.startswith("S2"))
        assert s2_row.split()[-1] == "-"  # p2 unavailable

    def test_cell_format(self):
        table = emit_results_table(toy_campaign(), "time")
        s0_row = next(l for l in table.splitlines() if l.startswith("S0"))
        assert "1.01 ± 0.01" in s0_row  # mean of (1.00, 1.02), std over inputs

    def test_group_average_rows(self):
        lines = emit_results_table(toy_campaign(), "time").splitlines()
        labels = [l.split("  ")[0] for l in lines]
        assert any(l.startswith("Avr. S1") for l in labels)
        assert any(l.startswith("Avr. S2-S3") for l in labels)
        assert any(l.startswith("Avr. S1-S3") for l in labels)
        assert any(l.startswith("% of S1-S3") for l in labels)

    def test_percent_row_matches_stats(self):
        campaign = toy_campaign()
        table = emit_results_table(campaign, "time")
        pct_line = next(
            l for l in table.splitlines() if l.startswith("% of")
        )
        # p1 column: overall avg of S1 (0.91) and S2 (0.81) = 0.86 vs S0 1.01.
        expected = percent_change(1.01, 0.86)
        shown = float(pct_line.split()[-2].rstrip("%"))
        assert shown == pytest.approx(round(expected, 2), abs=0.01)

    def test_unknown_metric(self):
        with pytest.raises(UnknownMetric):
            emit_results_table(toy_campaign(), "bogus")

    def test_two_row_campaign(self):
        campaign = toy_campaign()
        campaign.plans = campaign.plans[:2]
        table = emit_results_table(campaign, "time")
        body = [l for l in table.splitlines() if l and not l.startswith(("System",))]
        assert body[0].startswith("S0")
        assert body[1].startswith("S1")

    def test_tsv_variant(self):
        table = emit_results_table(toy_campaign(), "time", fmt="tsv")
        assert "\t" in table.splitlines()[0]

    def test_pure_function_of_campaign(self):
        assert emit_results_table(toy_campaign(), "time") == emit_results_table(
            toy_campaign(), "time"
        )


class TestTradeoffTable:
    def test_nan_for_plan_without_presets(self):
        table = emit_tradeoff_table(toy_campaign())
        s3_row = next(l for l in table.splitlines() if l.startswith("S3"))
        assert s3_row.split()[-1] == "NaN"

    def test_size_percent_against_baseline(self):
        table = emit_tradeoff_table(toy_campaign())
        s2_row = next(l for l in table.splitlines() if l.startswith("S2"))
        assert "-10.000%" in s2_row  # 900 vs 1000, best in column

    def test_markers(self):
        table = emit_tradeoff_table(toy_campaign())
        s2_row = next(l for l in table.splitlines() if l.startswith("S2"))
        assert "*-10.000%*" in s2_row  # best size improvement
        s3_row = next(l for l in table.splitlines() if l.startswith("S3"))
        assert "!+1.000%!" in s3_row  # gadgets got worse: 505 vs 500

    def test_average_row(self):
        table = emit_tradeoff_table(toy_campaign())
        avg_row = next(l for l in table.splitlines() if l.startswith("Avr."))
        # sizes: -1%, -10%, -2% -> mean -4.333%
        assert "-4.333%" in avg_row

    def test_baseline_only_campaign(self):
        campaign = toy_campaign()
        campaign.plans = campaign.plans[:1]
        table = emit_tradeoff_table(campaign)
        assert "no specialized systems" in table


class TestPersistence:
    def test_round_trip(self, tmp_path):
        campaign = toy_campaign()
        path = tmp_path / "campaign.json"
        save_campaign(campaign, path)
        loaded = load_campaign(path)
        assert loaded == campaign

    def test_reports_identical_after_round_trip(self, tmp_path):
        campaign = toy_campaign()
        path = tmp_path / "campaign.json"
        save_campaign(campaign, path)
        loaded = load_campaign(path)
        assert emit_report_md(loaded) == emit_report_md(campaign)


def test_hypotheses_table_renders_undefined():
    text = emit_hypotheses_table(toy_campaign(), fmt="text")
    assert "undefined" in text
    assert "0.125" in text


def test_plans_text_lists_removals():
    text = emit_plans_text(toy_campaign())
    assert "S2\tpreset [preset p1]\tremoved(2): x, y" in text
    assert "S0\tbaseline\tremoved(0): (none)" in text


def test_report_md_sections():
    text = emit_report_md(toy_campaign())
    assert "# Specialization campaign: toy" in text
    assert "## Systems" in text
    assert "## time" in text
    assert "## Trade-off" in text
    assert "## Hypothesis tests" in text
