"""Campaign results and report rendering.

A campaign bundles everything measured for one manifest: the plans, their
oracle verdicts, binary sizes, gadget counts, per-(preset, input) metric
summaries, and the hypothesis-test records. Reports are pure functions of
this bundle: the same campaign always renders byte-identical tables.

Table conventions follow the measurement design: rows are systems plus
per-scenario-group averages, columns are presets, unavailable cells show
"-", plans with no retained presets show "NaN" in performance columns,
and per-column best/worst cells in the trade-off table are marked
``*best*`` / ``!worst!``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict
from pathlib import Path
from statistics import mean, stdev

from .errors import UnknownMetric
from .measure import MetricSummary
from .stats import percent_change

# Metrics where a lower value is an improvement; everything else counts
# higher as better (bitrate/frame-rate convention).
LOWER_IS_BETTER = {"size", "gadgets", "time"}


@dataclass
class PlanRecord:
    plan_id: str
    scenario: str
    removed: list[str] = field(default_factory=list)
    preset_name: str | None = None
    build_ok: bool = False
    sha256: str | None = None
    size: int | None = None
    gadgets: int | None = None
    gadget_backend: str | None = None
    oracle_verdict: str | None = None
    oracle_reason: str | None = None
    oracle_flags: list[str] = field(default_factory=list)
    available_presets: list[str] = field(default_factory=list)
    # summaries[metric][preset][input] = MetricSummary over repetitions
    summaries: dict[str, dict[str, dict[str, MetricSummary]]] = field(
        default_factory=dict
    )

    def preset_mean(self, metric: str, preset: str) -> float | None:
        """Mean over inputs of the per-input repetition means."""
        by_input = self.summaries.get(metric, {}).get(preset)
        if not by_input:
            return None
        return mean(s.mean for s in by_input.values())

    def preset_cell(self, metric: str, preset: str) -> tuple[float, float] | None:
        """(mean, std) across inputs for one table cell."""
        by_input = self.summaries.get(metric, {}).get(preset)
        if not by_input:
            return None
        means = [s.mean for s in by_input.values()]
        return mean(means), (stdev(means) if len(means) > 1 else 0.0)


@dataclass
class HypothesisRecord:
    id: str
    metric: str
    scope: str
    alternative: str
    w: float | None
    p: float | None
    n_effective: int | None
    method: str | None
    reject: bool
    undefined: bool = False


@dataclass
class CampaignResult:
    target_name: str
    catalog_digest: str
    toolchain_fingerprint: str
    generated_at: str
    clock_resolution: float
    preset_order: list[str]
    metrics: list[tuple[str, str]]  # (name, unit), built-in time first
    plans: list[PlanRecord]
    hypotheses: list[HypothesisRecord] = field(default_factory=list)
    reproducible: bool | None = None

    def plan(self, plan_id: str) -> PlanRecord:
        for record in self.plans:
            if record.plan_id == plan_id:
                return record
        raise KeyError(plan_id)

    @property
    def baseline(self) -> PlanRecord:
        return self.plans[0]

    def metric_names(self) -> list[str]:
        return [name for name, _ in self.metrics]

    # -- persistence ------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "CampaignResult":
        raw = json.loads(text)
        plans = []
        for p in raw["plans"]:
            summaries = {
                metric: {
                    preset: {
                        inp: MetricSummary(**s) for inp, s in by_input.items()
                    }
                    for preset, by_input in by_preset.items()
                }
                for metric, by_preset in p.pop("summaries").items()
            }
            plans.append(PlanRecord(**p, summaries=summaries))
        hypotheses = [HypothesisRecord(**h) for h in raw["hypotheses"]]
        return cls(
            target_name=raw["target_name"],
            catalog_digest=raw["catalog_digest"],
            toolchain_fingerprint=raw["toolchain_fingerprint"],
            generated_at=raw["generated_at"],
            clock_resolution=raw["clock_resolution"],
            preset_order=raw["preset_order"],
            metrics=[tuple(m) for m in raw["metrics"]],
            plans=plans,
            hypotheses=hypotheses,
            reproducible=raw.get("reproducible"),
        )


def save_campaign(campaign: CampaignResult, path: str | Path):
    Path(path).write_text(campaign.to_json(), encoding="utf-8")


def load_campaign(path: str | Path) -> CampaignResult:
    return CampaignResult.from_json(Path(path).read_text(encoding="utf-8"))


# -- table rendering -------------------------------------------------------


def _render_text(rows: list[list[str]]) -> str:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [cell.ljust(widths[i]) for i, cell in enumerate(row)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _render(rows: list[list[str]], fmt: str) -> str:
    if fmt == "tsv":
        return "\n".join("\t".join(row) for row in rows) + "\n"
    return _render_text(rows)


def _group_rows(campaign: CampaignResult):
    singles = [p for p in campaign.plans if p.scenario == "single-option"]
    presets = [p for p in campaign.plans if p.scenario == "preset"]
    return singles, presets


def _span_label(plans: list[PlanRecord]) -> str:
    if len(plans) == 1:
        return f"Avr. {plans[0].plan_id}"
    return f"Avr. {plans[0].plan_id}-{plans[-1].plan_id}"


def emit_results_table(
    campaign: CampaignResult, metric: str, fmt: str = "text", precision: int = 2
) -> str:
    """Per-preset measurement table of one metric across all systems."""
    if metric not in campaign.metric_names():
        raise UnknownMetric(
            f"metric {metric!r} not measured (have {campaign.metric_names()})"
        )
    unit = dict(campaign.metrics)[metric]
    presets = campaign.preset_order

    def fmt_cell(value: tuple[float, float] | None) -> str:
        if value is None:
            return "-"
        return f"{value[0]:.{precision}f} ± {value[1]:.{precision}f}"

    rows = [["System", f"[{unit}]"] + presets]
    for plan in campaign.plans:
        rows.append(
            [plan.plan_id, ""]
            + [fmt_cell(plan.preset_cell(metric, p)) for p in presets]
        )

    def group_cells(group: list[PlanRecord]) -> list[tuple[float, float] | None]:
        cells = []
        for preset in presets:
            values = [
                m for plan in group
                if (m := plan.preset_mean(metric, preset)) is not None
            ]
            if not values:
                cells.append(None)
            else:
                cells.append((mean(values), stdev(values) if len(values) > 1 else 0.0))
        return cells

    singles, preset_plans = _group_rows(campaign)
    specialized = singles + preset_plans
    for group in (singles, preset_plans):
        if group:
            rows.append(
                [_span_label(group), ""] + [fmt_cell(c) for c in group_cells(group)]
            )
    if specialized:
        overall = group_cells(specialized)
        rows.append([_span_label(specialized), ""] + [fmt_cell(c) for c in overall])
        pct_row = [f"% of {_span_label(specialized)[5:]}", ""]
        for preset, cell in zip(presets, overall):
            base = campaign.baseline.preset_mean(metric, preset)
            if cell is None or base in (None, 0):
                pct_row.append("-")
            else:
                pct_row.append(f"{percent_change(base, cell[0]):+.2f}%")
        rows.append(pct_row)
    return _render(rows, fmt)


def _tradeoff_columns(campaign: CampaignResult) -> list[str]:
    return ["size", "gadgets"] + campaign.metric_names()


def _plan_vs_baseline_pct(
    campaign: CampaignResult, plan: PlanRecord, prop: str
) -> float | None:
    """Percent change of one property vs the baseline, or None for NaN."""
    base = campaign.baseline
    if prop == "size":
        if plan.size is None or not base.size:
            return None
        return percent_change(base.size, plan.size)
    if prop == "gadgets":
        if plan.gadgets is None or not base.gadgets:
            return None
        return percent_change(base.gadgets, plan.gadgets)
    # Performance: averaged over the plan's available presets, compared
    # against the baseline restricted to the same presets.
    pairs = [
        (bm, pm)
        for preset in campaign.preset_order
        if (pm := plan.preset_mean(prop, preset)) is not None
        and (bm := base.preset_mean(prop, preset)) is not None
    ]
    if not pairs:
        return None
    base_avg = mean(b for b, _ in pairs)
    plan_avg = mean(p for _, p in pairs)
    if base_avg == 0:
        return None
    return percent_change(base_avg, plan_avg)


def emit_tradeoff_table(campaign: CampaignResult, fmt: str = "text") -> str:
    """Percent change of every property vs baseline, one row per plan.

    The most improved cell per column is wrapped in ``*``, the most
    worsened in ``!``; plans with no retained presets show NaN in the
    performance columns.
    """
    columns = _tradeoff_columns(campaign)
    specialized = [p for p in campaign.plans if p.scenario != "baseline"]
    values: dict[str, dict[str, float | None]] = {
        plan.plan_id: {
            prop: _plan_vs_baseline_pct(campaign, plan, prop) for prop in columns
        }
        for plan in specialized
    }

    best: dict[str, float] = {}
    worst: dict[str, float] = {}
    for prop in columns:
        observed = [
            v for plan in specialized
            if (v := values[plan.plan_id][prop]) is not None
        ]
        if not observed:
            continue
        improved = min if prop in LOWER_IS_BETTER else max
        best[prop] = improved(observed)
        worst[prop] = (max if improved is min else min)(observed)

    def fmt_cell(prop: str, value: float | None) -> str:
        if value is None:
            return "NaN"
        text = f"{value:+.3f}%"
        if prop in best and value == best[prop] and best[prop] != worst[prop]:
            return f"*{text}*"
        if prop in worst and value == worst[prop] and best[prop] != worst[prop]:
            return f"!{text}!"
        return text

    rows = [["System"] + columns]
    if not specialized:
        rows.append(["(no specialized systems measured)"] + [""] * len(columns))
        return _render(rows, fmt)
    for plan in specialized:
        rows.append(
            [plan.plan_id]
            + [fmt_cell(prop, values[plan.plan_id][prop]) for prop in columns]
        )
    avg_row = ["Avr."]
    for prop in columns:
        observed = [
            v for plan in specialized
            if (v := values[plan.plan_id][prop]) is not None
        ]
        avg_row.append(f"{mean(observed):+.3f}%" if observed else "NaN")
    rows.append(avg_row)
    return _render(rows, fmt)


def emit_hypotheses_table(campaign: CampaignResult, fmt: str = "tsv") -> str:
    rows = [["id", "metric", "scope", "alternative", "W", "p", "n", "method",
             "reject"]]
    for record in campaign.hypotheses:
        if record.undefined:
            rows.append([record.id, record.metric, record.scope,
                         record.alternative, "-", "-", "-", "undefined", "no"])
        else:
            rows.append([
                record.id, record.metric, record.scope, record.alternative,
                f"{record.w:g}", f"{record.p:.6g}", str(record.n_effective),
                record.method, "yes" if record.reject else "no",
            ])
    return _render(rows, fmt)


def emit_plans_text(campaign: CampaignResult) -> str:
    lines = []
    for plan in campaign.plans:
        removed = ", ".join(sorted(plan.removed)) if plan.removed else "(none)"
        suffix = f" [preset {plan.preset_name}]" if plan.preset_name else ""
        lines.append(
            f"{plan.plan_id}\t{plan.scenario}{suffix}\tremoved({len(plan.removed)}): "
            f"{removed}"
        )
    return "\n".join(lines) + "\n"


def emit_report_md(campaign: CampaignResult) -> str:
    """The full campaign report as Markdown with embedded aligned tables."""
    out = []
    out.append(f"# Specialization campaign: {campaign.target_name}\n")
    out.append(f"- generated: {campaign.generated_at}")
    out.append(f"- toolchain: {campaign.toolchain_fingerprint}")
    out.append(f"- catalog digest: {campaign.catalog_digest}")
    out.append(f"- timer resolution: {campaign.clock_resolution:g} s")
    if campaign.reproducible is not None:
        note = "yes" if campaign.reproducible else "NO - non-reproducible build"
        out.append(f"- reproducible build: {note}")
    out.append("")

    out.append("## Systems\n")
    header = ["System", "Scenario", "Removed", "Build", "Oracle", "Size [B]",
              "Gadgets"]
    rows = [header]
    for plan in campaign.plans:
        verdict = plan.oracle_verdict or "-"
        if plan.oracle_reason:
            verdict += f" ({plan.oracle_reason})"
        rows.append([
            plan.plan_id, plan.scenario,
            ",".join(sorted(plan.removed)) or "-",
            "ok" if plan.build_ok else "FAILED",
            verdict,
            str(plan.size) if plan.size is not None else "-",
            str(plan.gadgets) if plan.gadgets is not None else "-",
        ])
    out.append("```\n" + _render_text(rows) + "```\n")

    for metric in campaign.metric_names():
        measured = any(
            plan.summaries.get(metric) for plan in campaign.plans
        )
        if not measured:
            continue
        out.append(f"## {metric}\n")
        out.append("```\n" + emit_results_table(campaign, metric) + "```\n")

    out.append("## Trade-off (percent change vs baseline)\n")
    out.append("```\n" + emit_tradeoff_table(campaign) + "```\n")

    if campaign.hypotheses:
        out.append("## Hypothesis tests\n")
        out.append("```\n" + emit_hypotheses_table(campaign, fmt="text") + "```\n")
    return "\n".join(out)
