import pytest

from optprune.campaign import Campaign, run_hypotheses
from optprune.manifest import load_manifest
from optprune.measure import MetricSummary
from optprune.report import CampaignResult, PlanRecord

from .conftest import FIXTURES


def campaign_with_sizes(baseline_size, specialized_sizes):
    plans = [PlanRecord("S0", "baseline", [], None, True, size=baseline_size,
                        available_presets=["p1"])]
    for i, size in enumerate(specialized_sizes, start=1):
        plans.append(PlanRecord(f"S{i}", "single-option", ["x"], None, True,
                                size=size, available_presets=["p1"]))
    return CampaignResult(
        target_name="t", catalog_digest="d", toolchain_fingerprint="cc",
        generated_at="now", clock_resolution=1e-9, preset_order=["p1"],
        metrics=[("time", "s")], plans=plans,
    )


class TestRunHypotheses:
    def test_h01_all_reduced_distinct(self):
        sizes = [1000 - i for i in range(1, 21)]
        campaign = campaign_with_sizes(1000, sizes)
        records = run_hypotheses(campaign, alpha=0.05)
        h01 = next(r for r in records if r.id == "H01")
        assert h01.w == 210
        assert h01.p == pytest.approx(2.0**-20, rel=1e-9)
        assert h01.reject

    def test_identical_sizes_undefined(self):
        campaign = campaign_with_sizes(1000, [1000, 1000, 1000])
        records = run_hypotheses(campaign, alpha=0.05)
        h01 = next(r for r in records if r.id == "H01")
        assert h01.undefined and not h01.reject

    def test_performance_pairing_per_preset(self):
        campaign = campaign_with_sizes(1000, [900, 950])
        # baseline slower than both plans on the single preset
        campaign.plans[0].summaries = {
            "time": {"p1": {"v1": MetricSummary(2.0, 0.0, 5)}}
        }
        for plan, t in zip(campaign.plans[1:], (1.0, 1.5)):
            plan.summaries = {"time": {"p1": {"v1": MetricSummary(t, 0.0, 5)}}}
        records = run_hypotheses(campaign, alpha=0.05)
        h03 = next(r for r in records if r.id == "H03-time")
        # single preset -> one pair (2.0 vs mean(1.0, 1.5))
        assert h03.n_effective == 1
        assert h03.w == 1.0

    def test_scoped_records_for_both_scenarios(self):
        campaign = campaign_with_sizes(100, [90, 80])
        campaign.plans[2].scenario = "preset"
        records = run_hypotheses(campaign, alpha=0.05)
        scopes = {r.scope for r in records if r.id == "H01"}
        assert scopes == {"S1", "S2", "S1-S2"}


class TestCampaignState:
    def test_state_survives_reload(self, tmp_path):
        manifest = load_manifest(FIXTURES / "minienc.toml")
        first = Campaign(manifest, tmp_path)
        first.result.plan("S1").size = 12345
        first.save()
        second = Campaign(manifest, tmp_path)
        assert second.result.plan("S1").size == 12345

    def test_stale_state_discarded_on_manifest_change(self, tmp_path):
        manifest = load_manifest(FIXTURES / "minienc.toml")
        first = Campaign(manifest, tmp_path)
        first.result.plan("S1").size = 12345
        first.result.catalog_digest = "0000000000000000"
        first.save()
        second = Campaign(manifest, tmp_path)
        assert second.result.plan("S1").size is None

    def test_plan_records_mirror_enumeration(self, tmp_path, minienc_manifest):
        campaign = Campaign(minienc_manifest, tmp_path)
        ids = [r.plan_id for r in campaign.result.plans]
        assert ids == [f"S{i}" for i in range(11)]
        s5 = campaign.result.plan("S5")
        assert s5.available_presets == []
        s1 = campaign.result.plan("S1")
        assert s1.available_presets == ["p1", "p2", "p3", "p4"]
