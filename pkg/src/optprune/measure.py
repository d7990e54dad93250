"""Binary-size and performance measurement with repetitions.

Benchmark runs are strictly sequential: a process-wide lock serializes
them so no two measured executions overlap. Wall-clock time comes from the
monotonic high-resolution counter and is recorded for every run as the
built-in ``time`` metric (unit: seconds); further metrics are scraped from
program output via the manifest's regex patterns.

Results accumulate in a flat tab-separated table, one row per
(plan, preset, input, metric, iteration, value); that file is the single
source for the statistics and reporting stages.
"""

from __future__ import annotations

import csv
import logging
import shlex
import shutil
import subprocess
import tempfile
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from statistics import mean, stdev
from typing import Sequence

from .build import BuildArtifact
from .errors import ExecutionError, MissingBinary
from .manifest import MetricSpec

log = logging.getLogger(__name__)

TIME_METRIC = MetricSpec(name="time", unit="s", pattern="", capture_group=0)

MEASUREMENTS_HEADER = ("plan", "preset", "input", "metric", "iteration", "value")

_MEASURE_LOCK = threading.Lock()


@dataclass
class MetricSamples:
    plan_id: str
    preset: str
    input: str
    metric: str
    unit: str
    values: tuple[float, ...]
    invalid_iterations: int = 0


@dataclass(frozen=True)
class MetricSummary:
    mean: float
    std: float
    n: int


def summarize(samples: MetricSamples | Sequence[float]) -> MetricSummary:
    """Arithmetic mean and sample (n-1) standard deviation."""
    values = samples.values if isinstance(samples, MetricSamples) else samples
    if not values:
        raise ValueError("cannot summarize an empty sample list")
    return MetricSummary(
        mean=mean(values),
        std=stdev(values) if len(values) > 1 else 0.0,
        n=len(values),
    )


def measure_binary_size(artifact: BuildArtifact, strip: bool = False) -> int:
    """File size of the binary in bytes; never touches the artifact.

    With ``strip`` a stripped copy is measured and discarded, for targets
    whose deployment strips symbol tables.
    """
    if not artifact.build_ok or artifact.binary_path is None:
        raise MissingBinary(f"plan {artifact.plan_id}: no binary to measure")
    path = Path(artifact.binary_path)
    if not path.is_file():
        raise MissingBinary(f"plan {artifact.plan_id}: {path} is gone")
    if strip:
        with tempfile.TemporaryDirectory(prefix="strip-") as tmp:
            copy = Path(tmp) / path.name
            shutil.copy2(path, copy)
            subprocess.run(["strip", str(copy)], check=True, capture_output=True)
            size = copy.stat().st_size
    else:
        size = path.stat().st_size
    if size == 0:
        log.warning("plan %s: binary %s is empty", artifact.plan_id, path)
    return size


def clock_resolution() -> float:
    return time.get_clock_info("perf_counter").resolution


def run_benchmark(
    artifact: BuildArtifact,
    preset_token: str,
    input_path: Path,
    metrics: Sequence[MetricSpec],
    repetitions: int,
    run_template: str,
    preset_name: str | None = None,
    timeout: float = 300,
) -> list[MetricSamples]:
    """Run the binary ``repetitions`` times and collect every metric.

    An iteration whose output lacks a metric's pattern contributes nothing
    to that metric; the gap is counted in ``invalid_iterations`` so
    summaries stay honest about their n.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    if not artifact.build_ok or artifact.binary_path is None:
        raise MissingBinary(f"plan {artifact.plan_id}: no binary to benchmark")
    preset_name = preset_name or preset_token
    times: list[float] = []
    scraped: dict[str, list[float]] = {m.name: [] for m in metrics}
    missing: dict[str, int] = {m.name: 0 for m in metrics}

    with _MEASURE_LOCK:
        for _ in range(repetitions):
            with tempfile.TemporaryDirectory(prefix="bench-") as tmp:
                out = Path(tmp) / "bench.out"
                cmd = run_template.format(
                    BIN=artifact.binary_path, FLAGS=preset_token,
                    INPUT=input_path, OUTPUT=out,
                )
                start = time.perf_counter()
                proc = subprocess.run(
                    shlex.split(cmd), capture_output=True, text=True,
                    timeout=timeout,
                )
                elapsed = time.perf_counter() - start
                if proc.returncode != 0:
                    raise ExecutionError(
                        f"plan {artifact.plan_id}: {cmd!r} exited "
                        f"{proc.returncode}: {(proc.stderr or proc.stdout)[:200]}"
                    )
                times.append(elapsed)
                output = proc.stdout + proc.stderr
                for metric in metrics:
                    value = metric.extract(output)
                    if value is None:
                        missing[metric.name] += 1
                        log.warning(
                            "plan %s preset %s: metric %s missing in iteration "
                            "output", artifact.plan_id, preset_name, metric.name,
                        )
                    else:
                        scraped[metric.name].append(value)

    results = [
        MetricSamples(
            plan_id=artifact.plan_id, preset=preset_name,
            input=input_path.name, metric=TIME_METRIC.name,
            unit=TIME_METRIC.unit, values=tuple(times),
        )
    ]
    for metric in metrics:
        results.append(
            MetricSamples(
                plan_id=artifact.plan_id, preset=preset_name,
                input=input_path.name, metric=metric.name, unit=metric.unit,
                values=tuple(scraped[metric.name]),
                invalid_iterations=missing[metric.name],
            )
        )
    return results


def append_measurements(path: str | Path, samples: Sequence[MetricSamples]):
    """Append sample rows to the measurements table, creating the header."""
    path = Path(path)
    new_file = not path.exists()
    with open(path, "a", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter="\t")
        if new_file:
            writer.writerow(MEASUREMENTS_HEADER)
        for sample in samples:
            for i, value in enumerate(sample.values, start=1):
                writer.writerow(
                    [sample.plan_id, sample.preset, sample.input,
                     sample.metric, i, repr(value)]
                )


def read_measurements(path: str | Path) -> list[dict]:
    """Rows of the measurements table as dicts with a float ``value``."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh, delimiter="\t")
        rows = []
        for row in reader:
            row["value"] = float(row["value"])
            row["iteration"] = int(row["iteration"])
            rows.append(row)
        return rows
