"""Differential validation of specialized builds.

A specialization is valid when (A) it compiles, (B) every retained
configuration produces byte-identical output to the baseline build, and
(C) every removed option's command-line token is rejected with the
target's documented message and without producing an output artifact.

Byte equality is strictly stronger than comparing output sizes; a
``size_only`` compatibility mode downgrades the comparison to size
equality for targets measured that way historically.
"""

from __future__ import annotations

import hashlib
import re
import subprocess
import shlex
import tempfile
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Sequence

from .build import BuildArtifact
from .errors import InputError
from .manifest import TargetSpec
from .model import OptionCatalog, SpecializationPlan, available_presets

NO_PRESETS_FLAG = "no measurable presets"


@dataclass(frozen=True)
class OracleConfig:
    timeout: float = 60.0
    size_only: bool = False
    # Optional byte-regex scrubbed from outputs before digesting, for
    # targets that embed run-varying noise (timestamps etc.).
    normalize_pattern: str | None = None


@dataclass
class BehaviorCase:
    input: str
    config: str
    baseline_digest: str | None
    specialized_digest: str | None
    equal: bool
    error: str | None = None


@dataclass
class InteropCase:
    cli_token: str
    rejected: bool
    message_excerpt: str
    exit_status: int | None
    produced_output: bool


@dataclass
class OracleResult:
    plan_id: str
    compilable: bool
    behavior_cases: list[BehaviorCase] = field(default_factory=list)
    interop_cases: list[InteropCase] = field(default_factory=list)
    verdict: str = "INVALID"
    reason: str | None = None
    flags: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.verdict == "VALID"

    def to_dict(self) -> dict:
        return asdict(self)


def _finish(result: OracleResult) -> OracleResult:
    """Derive the verdict from the recorded evidence."""
    if not result.compilable:
        result.verdict, result.reason = "INVALID", "not compilable"
        return result
    bad_behavior = next((c for c in result.behavior_cases if not c.equal), None)
    if bad_behavior is not None:
        detail = bad_behavior.error or "output differs"
        result.verdict = "INVALID"
        result.reason = (
            f"behavior: {detail} for input {bad_behavior.input!r} "
            f"under {bad_behavior.config!r}"
        )
        return result
    unrejected = next((c for c in result.interop_cases if not c.rejected), None)
    if unrejected is not None:
        result.verdict = "INVALID"
        result.reason = (
            f"interoperability: {unrejected.cli_token!r} was not rejected"
        )
        return result
    result.verdict, result.reason = "VALID", None
    return result


def _run(binary: Path, flags: str, input_path: Path, output_path: Path,
         run_template: str, timeout: float):
    cmd = run_template.format(
        BIN=binary, FLAGS=flags, INPUT=input_path, OUTPUT=output_path
    )
    proc = subprocess.run(
        shlex.split(cmd), capture_output=True, text=True, timeout=timeout
    )
    return proc.returncode, proc.stdout + proc.stderr


def _digest(path: Path, config: OracleConfig) -> str:
    data = path.read_bytes()
    if config.normalize_pattern:
        data = re.sub(config.normalize_pattern.encode(), b"", data)
    if config.size_only:
        return f"size:{len(data)}"
    return hashlib.sha256(data).hexdigest()


def run_behavior_check(
    baseline: BuildArtifact,
    specialized: BuildArtifact,
    inputs: Sequence[Path],
    configs: Sequence[str],
    run_template: str,
    config: OracleConfig | None = None,
) -> list[BehaviorCase]:
    """Compare outputs of both builds over every (input, configuration)."""
    config = config or OracleConfig()
    cases = []
    for input_path in inputs:
        for flags in configs:
            case = BehaviorCase(
                input=str(input_path), config=flags,
                baseline_digest=None, specialized_digest=None, equal=False,
            )
            with tempfile.TemporaryDirectory(prefix="oracle-") as tmp:
                out_a = Path(tmp) / "baseline.out"
                out_b = Path(tmp) / "specialized.out"
                try:
                    rc_a, log_a = _run(baseline.binary_path, flags,
                                       input_path, out_a, run_template,
                                       config.timeout)
                    rc_b, log_b = _run(specialized.binary_path, flags,
                                       input_path, out_b, run_template,
                                       config.timeout)
                except subprocess.TimeoutExpired as exc:
                    case.error = f"timeout after {exc.timeout}s"
                    cases.append(case)
                    continue
                if rc_a != 0 or rc_b != 0:
                    which = "baseline" if rc_a != 0 else "specialized"
                    log = log_a if rc_a != 0 else log_b
                    case.error = f"{which} exited nonzero: {log.strip()[:200]}"
                    cases.append(case)
                    continue
                case.baseline_digest = _digest(out_a, config)
                case.specialized_digest = _digest(out_b, config)
                case.equal = case.baseline_digest == case.specialized_digest
            cases.append(case)
    return cases


def run_interop_check(
    specialized: BuildArtifact,
    removed_tokens: Sequence[str],
    rejection_pattern: str,
    run_template: str,
    sample_input: Path,
    config: OracleConfig | None = None,
) -> list[InteropCase]:
    """Check each removed token is refused: message matches the target's
    rejection pattern and no output artifact appears."""
    config = config or OracleConfig()
    pattern = re.compile(rejection_pattern)
    cases = []
    for token in removed_tokens:
        with tempfile.TemporaryDirectory(prefix="interop-") as tmp:
            out = Path(tmp) / "rejected.out"
            try:
                rc, log = _run(specialized.binary_path, token, sample_input,
                               out, run_template, config.timeout)
            except subprocess.TimeoutExpired:
                cases.append(InteropCase(token, False, "timeout", None, False))
                continue
            produced = out.exists()
            match = pattern.search(log)
            excerpt = ""
            if match:
                line_start = log.rfind("\n", 0, match.start()) + 1
                line_end = log.find("\n", match.end())
                excerpt = log[line_start : line_end if line_end >= 0 else None]
            elif log:
                excerpt = log.strip().splitlines()[-1][:200]
            cases.append(InteropCase(
                cli_token=token,
                rejected=bool(match) and not produced,
                message_excerpt=excerpt.strip(),
                exit_status=rc,
                produced_output=produced,
            ))
    return cases


def validate(
    plan: SpecializationPlan,
    baseline_artifact: BuildArtifact,
    specialized_artifact: BuildArtifact,
    inputs: Sequence[Path],
    catalog: OptionCatalog,
    target: TargetSpec,
    config: OracleConfig | None = None,
) -> OracleResult:
    """Compose checks A, B, C into one verdict for a plan."""
    if not baseline_artifact.build_ok:
        raise InputError("baseline artifact must be a successful build")
    config = config or OracleConfig()
    result = OracleResult(
        plan_id=plan.id, compilable=bool(specialized_artifact.build_ok)
    )
    if not result.compilable:
        return _finish(result)

    retained = available_presets(catalog, plan)
    configs = [p.cli_token for p in catalog.presets if p.name in retained]
    if not configs:
        result.flags.append(NO_PRESETS_FLAG)
    result.behavior_cases = run_behavior_check(
        baseline_artifact, specialized_artifact, inputs, configs,
        target.run_cmd_template, config,
    )

    removed_tokens = [
        token
        for option in catalog.options
        if option.name in plan.removed
        for token in option.cli_tokens
    ]
    if removed_tokens and inputs:
        result.interop_cases = run_interop_check(
            specialized_artifact, removed_tokens, target.rejection_pattern,
            target.run_cmd_template, inputs[0], config,
        )
    return _finish(result)
