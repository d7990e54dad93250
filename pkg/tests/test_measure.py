import stat

import pytest
from hypothesis import given, strategies as st

from optprune.build import BuildArtifact
from optprune.errors import ExecutionError, MissingBinary
from optprune.manifest import MetricSpec
from optprune.measure import (
    MetricSamples,
    append_measurements,
    measure_binary_size,
    read_measurements,
    run_benchmark,
    summarize,
)


class TestSummarize:
    def test_hand_computed_five_samples(self):
        summary = summarize([0.26, 0.28, 0.28, 0.28, 0.30])
        assert summary.mean == pytest.approx(0.28, abs=1e-12)
        assert summary.std == pytest.approx(0.014142135623730951, abs=1e-9)
        assert summary.n == 5

    def test_single_sample_zero_std(self):
        summary = summarize([5.0])
        assert (summary.mean, summary.std, summary.n) == (5.0, 0.0, 1)

    def test_constant_samples_zero_std(self):
        summary = summarize([2.0, 2.0, 2.0])
        assert summary.std == 0.0

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            summarize([])

    @given(st.lists(st.floats(-1e6, 1e6), min_size=2, max_size=10), st.randoms())
    def test_permutation_invariant(self, values, rng):
        shuffled = list(values)
        rng.shuffle(shuffled)
        a, b = summarize(values), summarize(shuffled)
        assert a.mean == pytest.approx(b.mean, rel=1e-9, abs=1e-9)
        assert a.std == pytest.approx(b.std, rel=1e-9, abs=1e-9)


class TestBinarySize:
    def test_matches_stat(self, minienc_builds):
        artifact = minienc_builds.artifact("S0")
        assert measure_binary_size(artifact) == artifact.binary_path.stat().st_size

    def test_pure_and_repeatable(self, minienc_builds):
        artifact = minienc_builds.artifact("S0")
        before = artifact.binary_path.read_bytes()
        first = measure_binary_size(artifact, strip=True)
        second = measure_binary_size(artifact, strip=True)
        assert first == second
        assert artifact.binary_path.read_bytes() == before

    def test_stripped_not_larger(self, minienc_builds):
        artifact = minienc_builds.artifact("S0")
        assert measure_binary_size(artifact, strip=True) <= measure_binary_size(artifact)

    def test_missing_binary(self):
        artifact = BuildArtifact("S9", None, False, "", "cc")
        with pytest.raises(MissingBinary):
            measure_binary_size(artifact)

    def test_zero_byte_binary_warns(self, tmp_path, caplog):
        empty = tmp_path / "empty"
        empty.touch()
        artifact = BuildArtifact("S1", empty, True, "", "cc")
        with caplog.at_level("WARNING"):
            assert measure_binary_size(artifact) == 0
        assert "empty" in caplog.text


def fake_target(tmp_path, script):
    binary = tmp_path / "fake-target"
    binary.write_text("#!/bin/sh\n" + script)
    binary.chmod(binary.stat().st_mode | stat.S_IEXEC)
    return BuildArtifact("SX", binary, True, "", "sh")


class TestRunBenchmark:
    RUN_TEMPLATE = "{BIN} {FLAGS} -o {OUTPUT} {INPUT}"

    def test_minienc_five_reps(self, minienc_builds, minienc_manifest):
        artifact = minienc_builds.artifact("S0")
        samples = run_benchmark(
            artifact, "--preset=p1", minienc_manifest.inputs[0],
            minienc_manifest.metrics, 5,
            minienc_manifest.target.run_cmd_template, preset_name="p1",
        )
        by_name = {s.metric: s for s in samples}
        assert set(by_name) == {"time", "time-units", "ratio"}
        time_samples = by_name["time"]
        assert len(time_samples.values) == 5
        assert all(v > 0 for v in time_samples.values)
        # Deterministic program: scraped metrics identical across reps.
        assert len(set(by_name["ratio"].values)) == 1
        assert len(set(by_name["time-units"].values)) == 1
        assert by_name["time-units"].invalid_iterations == 0

    def test_metric_missing_iteration_excluded(self, tmp_path):
        # Prints the metric on every iteration except the second.
        script = (
            'count_file="$(dirname "$0")/count"\n'
            'n=$(cat "$count_file" 2>/dev/null || echo 0)\n'
            'n=$((n + 1)); echo $n > "$count_file"\n'
            'if [ "$n" -ne 2 ]; then echo "score: 42"; fi\n'
            'echo out > "$2"\n'
        )
        artifact = fake_target(tmp_path, script)
        metric = MetricSpec("score", "pt", r"score:\s*(\d+)")
        (tmp_path / "in.bin").touch()
        samples = run_benchmark(
            artifact, "", tmp_path / "in.bin", [metric], 5,
            "{BIN} {FLAGS} -o {OUTPUT} {INPUT}",
        )
        by_name = {s.metric: s for s in samples}
        score = by_name["score"]
        assert len(score.values) == 4
        assert score.invalid_iterations == 1
        assert summarize(score).n == 4
        assert len(by_name["time"].values) == 5

    def test_nonzero_exit_raises(self, tmp_path):
        artifact = fake_target(tmp_path, "exit 3\n")
        with pytest.raises(ExecutionError):
            run_benchmark(
                artifact, "", tmp_path / "in.bin", [], 2, self.RUN_TEMPLATE
            )

    def test_zero_repetitions_rejected(self, minienc_builds, minienc_manifest):
        with pytest.raises(ValueError):
            run_benchmark(
                minienc_builds.artifact("S0"), "--preset=p1",
                minienc_manifest.inputs[0], [], 0,
                minienc_manifest.target.run_cmd_template,
            )


class TestMeasurementsTable:
    def test_round_trip(self, tmp_path):
        table = tmp_path / "measurements.tsv"
        samples = [
            MetricSamples("S1", "p1", "v1.bin", "time", "s", (0.5, 0.6)),
            MetricSamples("S1", "p1", "v1.bin", "ratio", "x", (1.25,)),
        ]
        append_measurements(table, samples)
        append_measurements(
            table, [MetricSamples("S2", "p2", "v2.bin", "time", "s", (0.7,))]
        )
        rows = read_measurements(table)
        assert len(rows) == 4
        assert rows[0] == {
            "plan": "S1", "preset": "p1", "input": "v1.bin",
            "metric": "time", "iteration": 1, "value": 0.5,
        }
        assert rows[-1]["plan"] == "S2"
        header = table.read_text().splitlines()[0].split("\t")
        assert header == ["plan", "preset", "input", "metric", "iteration", "value"]

    def test_values_preserve_precision(self, tmp_path):
        table = tmp_path / "m.tsv"
        value = 0.123456789012345678
        append_measurements(
            table, [MetricSamples("S1", "p", "i", "time", "s", (value,))]
        )
        assert read_measurements(table)[0]["value"] == value
