"""End-to-end campaign orchestration.

Drives the pipeline stages over one manifest and keeps the cumulative
state in ``<out>/campaign.json`` so the CLI subcommands can run the stages
separately or all at once:

    plan      enumerate specializations            -> plans.txt
    build     compile every plan                   -> <plan>/<binary>, build.log
    validate  oracle checks A/B/C per plan         -> oracle/<plan>.txt, <plan>/oracle.json
    measure   sizes, gadget counts, benchmarks     -> measurements.tsv
    analyze   hypothesis tests                     -> hypotheses.tsv
    report    tables and campaign report           -> report.md, tradeoff.tsv
"""

from __future__ import annotations

import datetime
import hashlib
import json
import logging
from pathlib import Path

from . import build as build_mod
from . import gadgets as gadgets_mod
from . import measure as measure_mod
from . import oracle as oracle_mod
from . import report as report_mod
from . import stats as stats_mod
from .errors import BuildFailure
from .manifest import Manifest
from .model import available_presets, enumerate_scenarios

log = logging.getLogger(__name__)

CAMPAIGN_FILE = "campaign.json"


class Campaign:
    """Mutable pipeline state for one manifest and output directory."""

    def __init__(self, manifest: Manifest, out_root: str | Path):
        self.manifest = manifest
        self.out_root = Path(out_root)
        self.plans = enumerate_scenarios(manifest.catalog)
        self.artifacts: dict[str, build_mod.BuildArtifact] = {}
        self.result = self._load_or_init()

    # -- state ------------------------------------------------------------

    def _catalog_digest(self) -> str:
        return hashlib.sha256(self.manifest.path.read_bytes()).hexdigest()[:16]

    def _load_or_init(self) -> report_mod.CampaignResult:
        path = self.out_root / CAMPAIGN_FILE
        if path.exists():
            stored = report_mod.load_campaign(path)
            if stored.catalog_digest == self._catalog_digest():
                return stored
            log.warning("manifest changed; discarding stale campaign state")
        catalog = self.manifest.catalog
        metrics = [(measure_mod.TIME_METRIC.name, measure_mod.TIME_METRIC.unit)]
        metrics += [(m.name, m.unit) for m in self.manifest.metrics]
        records = []
        for plan in self.plans:
            records.append(report_mod.PlanRecord(
                plan_id=plan.id,
                scenario=plan.scenario.value,
                removed=sorted(plan.removed),
                preset_name=plan.preset_name,
                available_presets=[
                    p.name for p in catalog.presets
                    if p.name in available_presets(catalog, plan)
                ],
            ))
        return report_mod.CampaignResult(
            target_name=self.manifest.target.name,
            catalog_digest=self._catalog_digest(),
            toolchain_fingerprint="",
            generated_at=datetime.datetime.now(datetime.timezone.utc).isoformat(),
            clock_resolution=measure_mod.clock_resolution(),
            preset_order=[p.name for p in catalog.presets],
            metrics=metrics,
            plans=records,
        )

    def save(self):
        self.out_root.mkdir(parents=True, exist_ok=True)
        report_mod.save_campaign(self.result, self.out_root / CAMPAIGN_FILE)

    # -- stages -----------------------------------------------------------

    def write_plans(self) -> Path:
        self.out_root.mkdir(parents=True, exist_ok=True)
        path = self.out_root / "plans.txt"
        path.write_text(report_mod.emit_plans_text(self.result), encoding="utf-8")
        return path

    def build(self) -> bool:
        """Build every plan; True iff all builds succeeded."""
        target = self.manifest.target
        artifacts = build_mod.build_all(
            target, self.plans, self.out_root, self.manifest.catalog
        )
        ok = True
        for plan, artifact in zip(self.plans, artifacts):
            self.artifacts[plan.id] = artifact
            record = self.result.plan(plan.id)
            record.build_ok = artifact.build_ok
            record.sha256 = artifact.sha256
            ok &= artifact.build_ok
        self.result.toolchain_fingerprint = artifacts[0].toolchain_fingerprint
        self.save()
        return ok

    def ensure_artifacts(self):
        if not self.artifacts:
            self.build()

    def validate(self) -> bool:
        """Oracle-check every plan against the baseline build."""
        self.ensure_artifacts()
        baseline = self.artifacts[self.plans[0].id]
        if not baseline.build_ok:
            raise BuildFailure("baseline build failed; cannot validate", baseline)
        oracle_dir = self.out_root / "oracle"
        oracle_dir.mkdir(parents=True, exist_ok=True)
        all_valid = True
        for plan in self.plans:
            artifact = self.artifacts[plan.id]
            result = oracle_mod.validate(
                plan, baseline, artifact, list(self.manifest.inputs),
                self.manifest.catalog, self.manifest.target,
            )
            record = self.result.plan(plan.id)
            record.oracle_verdict = result.verdict
            record.oracle_reason = result.reason
            record.oracle_flags = list(result.flags)
            (self.out_root / plan.id).mkdir(parents=True, exist_ok=True)
            (self.out_root / plan.id / "oracle.json").write_text(
                json.dumps(result.to_dict(), indent=2), encoding="utf-8"
            )
            (oracle_dir / f"{plan.id}.txt").write_text(
                self._oracle_text(result), encoding="utf-8"
            )
            all_valid &= result.valid
        self.save()
        return all_valid

    @staticmethod
    def _oracle_text(result: oracle_mod.OracleResult) -> str:
        lines = [f"plan: {result.plan_id}", f"verdict: {result.verdict}"]
        if result.reason:
            lines.append(f"reason: {result.reason}")
        for flag in result.flags:
            lines.append(f"flag: {flag}")
        lines.append(f"compilable: {result.compilable}")
        for case in result.behavior_cases:
            status = "equal" if case.equal else f"DIFFER ({case.error or 'bytes'})"
            lines.append(
                f"behavior\t{Path(case.input).name}\t{case.config}\t{status}"
            )
        for case in result.interop_cases:
            status = "rejected" if case.rejected else "NOT REJECTED"
            lines.append(
                f"interop\t{case.cli_token}\t{status}\t{case.message_excerpt}"
            )
        return "\n".join(lines) + "\n"

    def measure_sizes(self, strip: bool = False):
        self.ensure_artifacts()
        for plan in self.plans:
            artifact = self.artifacts[plan.id]
            if artifact.build_ok:
                self.result.plan(plan.id).size = measure_mod.measure_binary_size(
                    artifact, strip=strip
                )
        self.save()

    def measure_gadgets(self, config: gadgets_mod.GadgetConfig | None = None,
                        tool_cmd: str | None = None):
        self.ensure_artifacts()
        for plan in self.plans:
            artifact = self.artifacts[plan.id]
            if not artifact.build_ok:
                continue
            if tool_cmd:
                report = gadgets_mod.count_gadgets_external(
                    artifact.binary_path, tool_cmd
                )
            else:
                report = gadgets_mod.count_gadgets_builtin(
                    artifact.binary_path, config
                )
            record = self.result.plan(plan.id)
            record.gadgets = report.unique_count
            record.gadget_backend = report.backend.value
        self.save()

    def measure_bench(self):
        """Benchmark every built plan over its available presets."""
        self.ensure_artifacts()
        table = self.out_root / "measurements.tsv"
        if table.exists():
            table.unlink()
        catalog = self.manifest.catalog
        for plan in self.plans:
            artifact = self.artifacts[plan.id]
            if not artifact.build_ok:
                continue
            record = self.result.plan(plan.id)
            retained = available_presets(catalog, plan)
            for preset in catalog.presets:
                if preset.name not in retained:
                    continue
                for input_path in self.manifest.inputs:
                    samples = measure_mod.run_benchmark(
                        artifact, preset.cli_token, input_path,
                        self.manifest.metrics, self.manifest.repetitions,
                        self.manifest.target.run_cmd_template,
                        preset_name=preset.name,
                    )
                    measure_mod.append_measurements(table, samples)
                    for sample in samples:
                        if not sample.values:
                            continue
                        record.summaries.setdefault(sample.metric, {}) \
                            .setdefault(preset.name, {})[sample.input] = \
                            measure_mod.summarize(sample)
        self.save()

    def analyze(self):
        """Hypothesis tests over the collected measurements."""
        self.result.hypotheses = run_hypotheses(self.result, self.manifest.alpha)
        self.save()

    def write_reports(self):
        out = self.out_root
        out.mkdir(parents=True, exist_ok=True)
        (out / "hypotheses.tsv").write_text(
            report_mod.emit_hypotheses_table(self.result), encoding="utf-8"
        )
        (out / "tradeoff.tsv").write_text(
            report_mod.emit_tradeoff_table(self.result, fmt="tsv"), encoding="utf-8"
        )
        (out / "report.md").write_text(
            report_mod.emit_report_md(self.result), encoding="utf-8"
        )

    def run_all(self) -> bool:
        """The full pipeline; True iff builds and oracle checks all passed."""
        self.write_plans()
        built = self.build()
        valid = self.validate()
        self.measure_sizes()
        self.measure_gadgets()
        self.measure_bench()
        self.analyze()
        self.write_reports()
        return built and valid


def _scopes(campaign: report_mod.CampaignResult):
    singles = [p for p in campaign.plans if p.scenario == "single-option"]
    presets = [p for p in campaign.plans if p.scenario == "preset"]
    both = singles + presets
    scopes = []
    if singles and presets:
        scopes.append((_scope_label(singles), singles))
        scopes.append((_scope_label(presets), presets))
    if both:
        scopes.append((_scope_label(both), both))
    return scopes


def _scope_label(plans) -> str:
    if len(plans) == 1:
        return plans[0].plan_id
    return f"{plans[0].plan_id}-{plans[-1].plan_id}"


def run_hypotheses(
    campaign: report_mod.CampaignResult, alpha: float
) -> list[report_mod.HypothesisRecord]:
    """Evaluate the standard hypothesis set over every scenario scope.

    Size and gadget hypotheses pair each specialized plan with the
    baseline; performance hypotheses pair per preset, comparing the
    baseline's preset mean against the scope's per-preset plan average.
    """
    baseline = campaign.baseline
    records = []
    perf_metrics = campaign.metric_names()
    for spec in stats_mod.standard_hypotheses(perf_metrics, alpha):
        for scope_label, scope_plans in _scopes(campaign):
            if spec.metric == "size":
                pairs = [
                    (baseline.size, p.size) for p in scope_plans
                    if p.size is not None and baseline.size is not None
                ]
            elif spec.metric == "gadgets":
                pairs = [
                    (baseline.gadgets, p.gadgets) for p in scope_plans
                    if p.gadgets is not None and baseline.gadgets is not None
                ]
            else:
                pairs = []
                for preset in campaign.preset_order:
                    base_mean = baseline.preset_mean(spec.metric, preset)
                    plan_means = [
                        m for p in scope_plans
                        if (m := p.preset_mean(spec.metric, preset)) is not None
                    ]
                    if base_mean is None or not plan_means:
                        continue
                    pairs.append((base_mean, sum(plan_means) / len(plan_means)))
            if not pairs:
                continue
            outcome = stats_mod.evaluate_hypothesis(
                spec, [a for a, _ in pairs], [b for _, b in pairs]
            )
            if outcome.undefined:
                records.append(report_mod.HypothesisRecord(
                    id=spec.id, metric=spec.metric, scope=scope_label,
                    alternative=spec.alternative.value, w=None, p=None,
                    n_effective=None, method=None, reject=False, undefined=True,
                ))
            else:
                result = outcome.result
                records.append(report_mod.HypothesisRecord(
                    id=spec.id, metric=spec.metric, scope=scope_label,
                    alternative=spec.alternative.value,
                    w=result.w_statistic, p=result.p_value,
                    n_effective=result.n_effective, method=result.method.value,
                    reject=outcome.reject,
                ))
    return records
