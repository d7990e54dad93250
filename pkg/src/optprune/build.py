"""Building baseline and specialized variants.

Guard-macro assignments are injected as ``-DGUARD=<0|1>`` compiler
definitions through the ``{DEFINES}`` placeholder of the manifest's build
command, overriding the ``#ifndef`` defaults of the guard header. The
source tree is never edited; a plan is purely declarative.

Artifacts land under ``<out_root>/<plan_id>/`` together with the build
log. Measured builds must run sequentially so their binaries are
reproducible and comparable; validation builds may run concurrently in
separate working directories.
"""

from __future__ import annotations

import hashlib
import shlex
import shutil
import subprocess
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import BuildFailure, GroupViolation, InputError, MissingBinary
from .manifest import TargetSpec
from .model import OptionCatalog, SpecializationPlan


@dataclass
class BuildArtifact:
    plan_id: str
    binary_path: Path | None
    build_ok: bool
    build_log: str
    toolchain_fingerprint: str
    sha256: str | None = None


def defines_for(plan: SpecializationPlan) -> str:
    """The -D definition string realizing a plan's macro assignment."""
    return " ".join(f"-D{g}={v}" for g, v in plan.macro_assignment.items())


def toolchain_fingerprint(target: TargetSpec) -> str:
    """Compiler identity plus the exact build command template."""
    compiler = shlex.split(target.build_cmd)[0]
    try:
        probe = subprocess.run(
            [compiler, "--version"], capture_output=True, text=True, timeout=30
        )
        version = probe.stdout.splitlines()[0] if probe.stdout else compiler
    except (OSError, subprocess.TimeoutExpired):
        version = compiler
    return f"{version} | {target.build_cmd}"


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _check_plan(catalog: OptionCatalog, plan: SpecializationPlan):
    for group in catalog.groups:
        if group.members <= plan.removed:
            raise GroupViolation(
                f"plan {plan.id} empties alternative group {group.id!r}"
            )


def build_variant(
    target: TargetSpec,
    plan: SpecializationPlan,
    out_root: str | Path,
    catalog: OptionCatalog | None = None,
    timeout: float = 300,
) -> BuildArtifact:
    """Build one plan; raises BuildFailure/MissingBinary with the artifact
    attached so campaign drivers can keep going."""
    if catalog is not None:
        _check_plan(catalog, plan)
    out_dir = Path(out_root) / plan.id
    out_dir.mkdir(parents=True, exist_ok=True)
    binary_path = out_dir / target.name
    if binary_path.exists():
        binary_path.unlink()

    cmd = target.build_cmd.format(
        DEFINES=defines_for(plan), OUT=binary_path, SRC=target.source_root
    )
    fingerprint = toolchain_fingerprint(target)
    proc = subprocess.run(
        shlex.split(cmd),
        cwd=target.source_root,
        capture_output=True,
        text=True,
        timeout=timeout,
    )
    log = f"$ {cmd}\n{proc.stdout}{proc.stderr}"
    (out_dir / "build.log").write_text(log, encoding="utf-8")

    if proc.returncode != 0:
        artifact = BuildArtifact(plan.id, None, False, log, fingerprint)
        raise BuildFailure(
            f"plan {plan.id}: build exited {proc.returncode}", artifact
        )
    if not binary_path.is_file():
        artifact = BuildArtifact(plan.id, None, False, log, fingerprint)
        raise MissingBinary(
            f"plan {plan.id}: build succeeded but {binary_path} is missing",
            artifact,
        )
    binary_path.chmod(0o755)
    return BuildArtifact(
        plan_id=plan.id,
        binary_path=binary_path,
        build_ok=True,
        build_log=log,
        toolchain_fingerprint=fingerprint,
        sha256=_sha256(binary_path),
    )


def build_all(
    target: TargetSpec,
    plans: Sequence[SpecializationPlan],
    out_root: str | Path,
    catalog: OptionCatalog | None = None,
) -> list[BuildArtifact]:
    """Build every plan sequentially; failures do not abort the rest."""
    ids = [p.id for p in plans]
    if len(set(ids)) != len(ids):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise InputError(f"duplicate plan ids: {dupes}")
    artifacts = []
    for plan in plans:
        try:
            artifacts.append(build_variant(target, plan, out_root, catalog))
        except BuildFailure as exc:  # includes MissingBinary
            artifacts.append(exc.artifact)
    return artifacts


@dataclass
class AnnotationVerdict:
    """Outcome of the per-option verify loop: which check failed, if any."""

    option: str
    compilable: bool
    behavior: bool | None  # None = not reached
    interop: bool | None
    evidence: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.compilable and self.behavior and self.interop)

    @property
    def failed_check(self) -> str | None:
        if not self.compilable:
            return "A"
        if self.behavior is False:
            return "B"
        if self.interop is False:
            return "C"
        return None


def verify_option_annotation(
    target: TargetSpec,
    catalog: OptionCatalog,
    option_name: str,
    out_root: str | Path,
    inputs: Sequence[Path],
    oracle_config=None,
) -> AnnotationVerdict:
    """Check one option's annotations by building and validating its
    single-option plan: compilable, behavior-preserving, interoperable.

    Checks run in order and stop at the first failure, mirroring how an
    annotator iterates on one option until the specialized system is valid.
    """
    from . import oracle as oracle_mod
    from .model import plan_baseline, plan_single_option

    option = catalog.option(option_name)
    plan = plan_single_option(catalog, option_name)
    out_root = Path(out_root)

    baseline = build_variant(target, plan_baseline(catalog), out_root, catalog)
    try:
        specialized = build_variant(target, plan, out_root, catalog)
    except BuildFailure as exc:
        tail = "\n".join(exc.artifact.build_log.splitlines()[-10:])
        return AnnotationVerdict(
            option=option_name, compilable=False, behavior=None, interop=None,
            evidence=tail,
        )

    result = oracle_mod.validate(
        plan, baseline, specialized, inputs, catalog, target, oracle_config
    )
    bad_case = next((c for c in result.behavior_cases if not c.equal), None)
    if bad_case is not None:
        return AnnotationVerdict(
            option=option_name, compilable=True, behavior=False, interop=None,
            evidence=(
                f"first differing output: input={bad_case.input} "
                f"config={bad_case.config}"
                + (f" ({bad_case.error})" if bad_case.error else "")
            ),
        )
    unrejected = next((c for c in result.interop_cases if not c.rejected), None)
    if unrejected is not None:
        return AnnotationVerdict(
            option=option_name, compilable=True, behavior=True, interop=False,
            evidence=(
                f"flag {unrejected.cli_token!r} not rejected "
                f"(exit={unrejected.exit_status}, "
                f"output_produced={unrejected.produced_output})"
            ),
        )
    return AnnotationVerdict(
        option=option_name, compilable=True, behavior=True, interop=True
    )


def check_reproducible(
    target: TargetSpec, plan: SpecializationPlan, out_root: str | Path
) -> bool:
    """Build the plan twice and compare binary digests.

    A False result means measurements on this target would include build
    noise and the campaign report should flag it.
    """
    out_root = Path(out_root)
    first = build_variant(target, plan, out_root / "repro-a")
    second = build_variant(target, plan, out_root / "repro-b")
    same = first.sha256 == second.sha256
    shutil.rmtree(out_root / "repro-a", ignore_errors=True)
    shutil.rmtree(out_root / "repro-b", ignore_errors=True)
    return same
