"""One-sided Wilcoxon signed-rank testing and percent-change arithmetic.

The signed-rank statistic here is W = sum of the ranks of the positive
differences d_i = x_i - y_i (zero differences dropped, ties in |d| given
average ranks). For small samples the p-value is exact: the full null
distribution over all 2^n sign assignments is tabulated, which reproduces
reference values like P(W >= n(n+1)/2) = 2^-n for n all-positive distinct
differences. Larger samples fall back to the normal approximation with tie
and continuity corrections.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from statistics import NormalDist
from typing import Sequence

from .errors import AllZeroDifferences, LengthMismatch, ZeroBaseline

# Largest n for which the exact null distribution is tabulated. Above this
# the normal approximation is accurate to well under 0.01 in p.
EXACT_MAX_N = 25

_NORMAL = NormalDist()


class Alternative(enum.Enum):
    GREATER = "greater"
    LESS = "less"


class Method(enum.Enum):
    EXACT = "exact"
    NORMAL_APPROX = "normal-approx"


@dataclass(frozen=True)
class WilcoxonResult:
    w_statistic: float
    p_value: float
    n_effective: int
    method: Method
    alternative: Alternative


def _average_ranks(values: Sequence[float]) -> list[float]:
    """Ascending ranks with ties sharing their average rank."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j + 2) / 2  # ranks are 1-based
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def _exact_tail(ranks: Sequence[float], w: float, alternative: Alternative) -> float:
    """Exact tail probability of W over all 2^n sign assignments.

    Average ranks are multiples of 1/2, so doubling makes them integers and
    the distribution of 2*W is the subset-sum count polynomial
    prod_i (1 + z^(2*r_i)), accumulated exactly in integer arithmetic.
    """
    scaled = [round(2 * r) for r in ranks]
    total = sum(scaled)
    counts = [0] * (total + 1)
    counts[0] = 1
    for r in scaled:
        for s in range(total, r - 1, -1):
            if counts[s - r]:
                counts[s] += counts[s - r]
    w2 = round(2 * w)
    if alternative is Alternative.GREATER:
        hits = sum(counts[w2:])
    else:
        hits = sum(counts[: w2 + 1])
    return hits / (1 << len(ranks))


def _normal_tail(
    ranks: Sequence[float], w: float, alternative: Alternative
) -> float:
    n = len(ranks)
    mean = n * (n + 1) / 4
    var = n * (n + 1) * (2 * n + 1) / 24
    # Tie correction: each group of t tied ranks reduces variance.
    seen: dict[float, int] = {}
    for r in ranks:
        seen[r] = seen.get(r, 0) + 1
    var -= sum(t**3 - t for t in seen.values()) / 48
    sd = math.sqrt(var)
    if alternative is Alternative.GREATER:
        z = (w - 0.5 - mean) / sd  # continuity correction toward the tail
        p = 1.0 - _NORMAL.cdf(z)
    else:
        z = (w + 0.5 - mean) / sd
        p = _NORMAL.cdf(z)
    return min(max(p, math.ulp(0.0)), 1.0)


def wilcoxon_signed_rank(
    x: Sequence[float],
    y: Sequence[float],
    alternative: Alternative = Alternative.GREATER,
) -> WilcoxonResult:
    """Paired one-sided Wilcoxon signed-rank test on d = x - y.

    GREATER tests P(W+ >= observed) (x tends to exceed y); LESS tests
    P(W+ <= observed). Zero differences are dropped and reported via
    ``n_effective``; if every difference is zero the test is undefined and
    AllZeroDifferences is raised rather than returning a silent p=1.
    """
    if len(x) != len(y):
        raise LengthMismatch(f"paired samples differ in length: {len(x)} vs {len(y)}")
    if len(x) == 0:
        raise LengthMismatch("need at least one pair")
    diffs = [float(a) - float(b) for a, b in zip(x, y)]
    diffs = [d for d in diffs if d != 0.0]
    if not diffs:
        raise AllZeroDifferences("all paired differences are zero")
    ranks = _average_ranks([abs(d) for d in diffs])
    w = sum(r for d, r in zip(diffs, ranks) if d > 0)
    n = len(diffs)
    if n <= EXACT_MAX_N:
        p = _exact_tail(ranks, w, alternative)
        method = Method.EXACT
    else:
        p = _normal_tail(ranks, w, alternative)
        method = Method.NORMAL_APPROX
    return WilcoxonResult(
        w_statistic=w,
        p_value=p,
        n_effective=n,
        method=method,
        alternative=alternative,
    )


def percent_change(baseline: float, specialized: float) -> float:
    """Relative change in percent; negative means a reduction."""
    if baseline == 0:
        raise ZeroBaseline("percent change undefined for zero baseline")
    return (specialized - baseline) / baseline * 100.0


@dataclass(frozen=True)
class HypothesisSpec:
    """One null hypothesis: pairing of baseline vs specialized values.

    ``alternative`` is stated on d = baseline - specialized: GREATER means
    the baseline values are expected to exceed the specialized ones (e.g.
    binary size shrinks), LESS means the specialized system is expected to
    score higher (e.g. frame rate improves).
    """

    id: str
    metric: str
    alternative: Alternative
    alpha: float = 0.05
    description: str = ""


@dataclass(frozen=True)
class HypothesisOutcome:
    spec: HypothesisSpec
    result: WilcoxonResult | None
    reject: bool
    undefined: bool = False

    @property
    def note(self) -> str:
        if self.undefined:
            return "test undefined (all differences zero)"
        return ""


def evaluate_hypothesis(
    spec: HypothesisSpec,
    baseline_values: Sequence[float],
    specialized_values: Sequence[float],
) -> HypothesisOutcome:
    """Run one hypothesis; reject iff p < alpha.

    An all-zero difference vector makes the test undefined: the outcome is
    flagged and never counted as a rejection.
    """
    try:
        result = wilcoxon_signed_rank(
            baseline_values, specialized_values, spec.alternative
        )
    except AllZeroDifferences:
        return HypothesisOutcome(spec=spec, result=None, reject=False, undefined=True)
    return HypothesisOutcome(
        spec=spec, result=result, reject=result.p_value < spec.alpha
    )


def standard_hypotheses(metric_names: Sequence[str], alpha: float) -> list[HypothesisSpec]:
    """The default hypothesis set for a campaign.

    H01 (binary size) and H02 (gadget count) pair per plan against the
    baseline and expect reductions. One H03 per performance metric pairs
    per preset: wall-clock time is better when lower, every other metric
    when higher.
    """
    specs = [
        HypothesisSpec(
            "H01", "size", Alternative.GREATER, alpha,
            "specialized binaries are smaller than the baseline",
        ),
        HypothesisSpec(
            "H02", "gadgets", Alternative.GREATER, alpha,
            "specialized binaries expose fewer code-reuse gadgets",
        ),
    ]
    for name in metric_names:
        direction = Alternative.GREATER if name == "time" else Alternative.LESS
        better = "lower" if name == "time" else "higher"
        specs.append(
            HypothesisSpec(
                f"H03-{name}", name, direction, alpha,
                f"specialized systems score {better} {name} than the baseline",
            )
        )
    return specs
