"""Static checks over guard-annotated C/C++ source trees.

The annotation discipline under check: every removable option has a guard
macro, the guard header gives each macro an overridable default
(``#ifndef G`` / ``#define G 0|1`` / ``#endif``), and option code is
enclosed in ``#if G`` or ``#if G && H`` regions. Only those two
conditional forms are recognized; any other expression that mentions a
guard is reported as a defect instead of being silently accepted.

Passing these checks is a necessary condition for a sound specialization,
not a sufficient one: whether the annotations capture all of an option's
behavior is decided dynamically by the oracle module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import UnbalancedDirective
from .model import OptionCatalog

SOURCE_SUFFIXES = {".c", ".h", ".cc", ".cpp", ".cxx", ".hh", ".hpp"}

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
# Guard-like macros follow the catalog's suffix convention.
_GUARD_LIKE = re.compile(r"\b([A-Z][A-Z0-9_]*_(?:YES|NO))\b")
_DIRECTIVE = re.compile(r"^\s*#\s*(\w+)\s*(.*)$")


@dataclass(frozen=True)
class GuardRegion:
    """One ``#if`` ... ``#endif`` span controlled by guard macros."""

    file: Path
    start_line: int
    end_line: int
    expression: tuple[str, ...]


@dataclass(frozen=True)
class Defect:
    severity: str  # "error" or "warning"
    file: Path
    line: int
    message: str

    def render(self) -> str:
        return f"{self.severity}\t{self.file}\t{self.line}\t{self.message}"


@dataclass
class GuardUsageReport:
    regions: list[GuardRegion] = field(default_factory=list)
    per_guard_counts: dict[str, int] = field(default_factory=dict)
    undeclared_guards_seen: set[str] = field(default_factory=set)
    declared_guards_unused: set[str] = field(default_factory=set)
    unbalanced: list[tuple[Path, int]] = field(default_factory=list)
    unsupported: list[Defect] = field(default_factory=list)


@dataclass(frozen=True)
class CoverageVerdict:
    passed: bool
    unused_guards: frozenset[str]
    undeclared_guards: frozenset[str]

    def __str__(self) -> str:
        if self.passed:
            return "PASS"
        parts = []
        if self.unused_guards:
            parts.append(f"declared but unused: {sorted(self.unused_guards)}")
        if self.undeclared_guards:
            parts.append(f"undeclared: {sorted(self.undeclared_guards)}")
        return "FAIL (" + "; ".join(parts) + ")"


def _strip_comments(text: str) -> str:
    text = re.sub(r"/\*.*?\*/", " ", text)
    text = re.sub(r"//.*$", " ", text)
    return text.strip()


def _logical_lines(path: Path):
    """(line_number, text) pairs with backslash continuations joined."""
    raw = path.read_text(encoding="utf-8", errors="replace").splitlines()
    i = 0
    while i < len(raw):
        start = i
        line = raw[i]
        while line.rstrip().endswith("\\") and i + 1 < len(raw):
            line = line.rstrip()[:-1] + " " + raw[i + 1]
            i += 1
        yield start + 1, line
        i += 1


def _parse_conjunction(expr: str) -> list[str] | None:
    """Identifier list for a pure conjunction ``A`` / ``A && B``, else None."""
    parts = [p.strip() for p in expr.split("&&")]
    if not parts or any(not _IDENT.match(p) for p in parts):
        return None
    return parts


class _Frame:
    __slots__ = ("line", "keyword", "expr", "guard_region", "declaration")

    def __init__(self, line, keyword, expr, guard_region, declaration=False):
        self.line = line
        self.keyword = keyword
        self.expr = expr
        self.guard_region = guard_region  # tuple of guards or None
        self.declaration = declaration


def scan_file(path: Path, catalog: OptionCatalog, report: GuardUsageReport,
              rel_to: Path | None = None):
    """Scan one translation unit into a shared report."""
    guards = set(catalog.guard_macros())
    display = path.relative_to(rel_to) if rel_to else path
    stack: list[_Frame] = []
    pending: _Frame | None = None  # "#ifndef G" awaiting its "#define G"

    def resolve_pending(keyword: str, rest: str):
        nonlocal pending
        if pending is None:
            return
        # A "#define G ..." right after "#ifndef G" is the default-define
        # declaration idiom; anything else means the guard controlled a
        # conditional region through #ifndef, which is unsupported.
        if keyword == "define" and rest.split()[:1] == [pending.expr]:
            pending.declaration = True
        else:
            report.unsupported.append(Defect(
                "error", display, pending.line,
                f"guard referenced by #ifndef, expected a default-define "
                f"block: {pending.expr}",
            ))
        pending = None

    for lineno, line in _logical_lines(path):
        match = _DIRECTIVE.match(line)
        if match is None:
            continue
        keyword, rest = match.group(1), _strip_comments(match.group(2))
        resolve_pending(keyword, rest)

        if keyword in ("if", "ifdef", "ifndef"):
            mentioned = set(_GUARD_LIKE.findall(rest))
            frame = _Frame(lineno, keyword, rest, None)
            if keyword == "if" and mentioned:
                idents = _parse_conjunction(rest)
                if idents is not None and all(i in guards for i in idents):
                    frame.guard_region = tuple(idents)
                else:
                    report.unsupported.append(Defect(
                        "error", display, lineno,
                        f"unsupported guard expression: #if {rest}",
                    ))
                report.undeclared_guards_seen.update(mentioned - guards)
            elif keyword == "ifndef" and (rest in guards or mentioned):
                pending = frame
                if rest not in guards:
                    report.undeclared_guards_seen.update(mentioned)
            elif mentioned:
                report.unsupported.append(Defect(
                    "error", display, lineno,
                    f"guard referenced by #{keyword}, expected #if: {rest}",
                ))
                report.undeclared_guards_seen.update(mentioned - guards)
            stack.append(frame)
        elif keyword in ("elif", "else"):
            if stack and stack[-1].guard_region is not None:
                report.unsupported.append(Defect(
                    "error", display, lineno,
                    f"#{keyword} attached to a guard region started at line "
                    f"{stack[-1].line}",
                ))
                stack[-1].guard_region = None
        elif keyword == "endif":
            if not stack:
                report.unbalanced.append((display, lineno))
                continue
            frame = stack.pop()
            if frame.guard_region is not None:
                region = GuardRegion(display, frame.line, lineno, frame.guard_region)
                report.regions.append(region)
                for guard in frame.guard_region:
                    report.per_guard_counts[guard] = (
                        report.per_guard_counts.get(guard, 0) + 1
                    )

    resolve_pending("", "")
    for frame in stack:
        report.unbalanced.append((display, frame.line))
        if frame.guard_region is not None or (
            frame.keyword == "ifndef" and frame.declaration
        ):
            raise UnbalancedDirective(
                f"{display}:{frame.line}: #{frame.keyword} {frame.expr} "
                "has no matching #endif"
            )


def scan_guards(source_root: str | Path, catalog: OptionCatalog) -> GuardUsageReport:
    """Scan a source tree for guard-controlled conditional regions.

    Regions are reported in (file, start line) order, so the result does
    not depend on directory traversal order.
    """
    source_root = Path(source_root)
    report = GuardUsageReport()
    files = sorted(
        p for p in source_root.rglob("*")
        if p.is_file() and p.suffix in SOURCE_SUFFIXES
    )
    for path in files:
        scan_file(path, catalog, report, rel_to=source_root)
    report.regions.sort(key=lambda r: (str(r.file), r.start_line))
    report.declared_guards_unused = set(catalog.guard_macros()) - set(
        report.per_guard_counts
    )
    return report


_DEFINE = re.compile(r"^\s*#\s*define\s+(\w+)(?:\s+(.*))?$")
_IFNDEF = re.compile(r"^\s*#\s*ifndef\s+(\w+)\s*$")


def verify_header(guard_header: str | Path, catalog: OptionCatalog) -> list[Defect]:
    """Check that the guard header defaults every guard overridably.

    Each catalogued guard needs the three-line pattern ``#ifndef G`` /
    ``#define G <0|1>`` / ``#endif``; a bare ``#define`` cannot be
    overridden by the build's ``-D`` injection and is flagged.
    """
    guard_header = Path(guard_header)
    defects: list[Defect] = []
    defined: dict[str, tuple[int, str | None, str | None]] = {}

    context: str | None = None
    for lineno, line in _logical_lines(guard_header):
        stripped = _strip_comments(line)
        ifndef = _IFNDEF.match(stripped)
        if ifndef:
            context = ifndef.group(1)
            continue
        define = _DEFINE.match(stripped)
        if define:
            name, value = define.group(1), define.group(2)
            if name in catalog.guard_macros() and name not in defined:
                value = value.strip() if value else None
                defined[name] = (lineno, value, context)
            continue
        directive = _DIRECTIVE.match(stripped)
        if directive and directive.group(1) == "endif":
            context = None

    for guard in catalog.guard_macros():
        if guard not in defined:
            defects.append(Defect(
                "error", guard_header, 0,
                f"guard {guard} has no default define",
            ))
            continue
        lineno, value, context = defined[guard]
        if context != guard:
            defects.append(Defect(
                "error", guard_header, lineno,
                f"guard {guard} default is not overridable "
                f"(missing #ifndef {guard} wrapper)",
            ))
        if value not in ("0", "1"):
            defects.append(Defect(
                "error", guard_header, lineno,
                f"guard {guard} default must be 0 or 1, got {value!r}",
            ))
    return defects


def verify_coverage(report: GuardUsageReport, catalog: OptionCatalog) -> CoverageVerdict:
    """PASS iff every guard is used somewhere and nothing guard-like is stray."""
    unused = frozenset(
        set(catalog.guard_macros()) - set(report.per_guard_counts)
    )
    undeclared = frozenset(report.undeclared_guards_seen)
    return CoverageVerdict(
        passed=not unused and not undeclared,
        unused_guards=unused,
        undeclared_guards=undeclared,
    )
