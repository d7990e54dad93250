"""Code-reuse gadget counting over ELF executables.

A gadget is a byte sequence that decodes into at most ``depth`` consecutive
valid instructions, the last of which is a configured terminator (ret,
ret imm16, indirect jmp/call, syscall, int 0x80) and none of the earlier
ones is: execution entering at the gadget's first byte falls straight
through into the terminator. Every byte offset is a legal entry point
("unaligned" semantics), so overlapping gadgets are all enumerated.

Two backends exist: the builtin scanner below (self-contained, exact
within the shipped decoder's subset) and an adapter driving an external
gadget-finding tool. Counts are comparable within one backend only.
"""

from __future__ import annotations

import enum
import re
import shlex
import subprocess
from dataclasses import dataclass, field
from pathlib import Path

from .elf import read_elf
from .errors import DecoderUnsupported, ParseError, ToolNotFound
from .x86 import SubsetDecoder, Terminator

ALL_TERMINATORS = frozenset(Terminator)

# Upper bound on bytes per instruction, used to size the candidate window
# behind each terminator occurrence.
_MAX_INSN_BYTES = 15


class Dedupe(enum.Enum):
    BY_BYTES = "by-bytes"
    NONE = "none"


class Backend(enum.Enum):
    BUILTIN = "builtin"
    EXTERNAL = "external"


@dataclass(frozen=True)
class GadgetConfig:
    depth: int = 10
    terminators: frozenset[Terminator] = ALL_TERMINATORS
    dedupe: Dedupe = Dedupe.BY_BYTES

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        if not self.terminators:
            raise ValueError("terminator set must be non-empty")


@dataclass
class GadgetReport:
    unique_count: int
    per_terminator: dict[Terminator, int] = field(default_factory=dict)
    sections_scanned: list[tuple[str, int]] = field(default_factory=list)
    backend: Backend = Backend.BUILTIN
    tool_version: str | None = None


def _find_terminators(data: bytes, decoder, config: GadgetConfig):
    """All (start, end, kind) occurrences of terminator instructions."""
    out = []
    for offset in range(len(data)):
        insn = decoder.decode(data, offset)
        if insn.valid and insn.terminator in config.terminators:
            out.append((offset, offset + insn.length, insn.terminator))
    return out


def _chain_reaches(data: bytes, start: int, target: int, decoder,
                   config: GadgetConfig) -> int | None:
    """Instructions needed to fall through from start to target, else None.

    Fails on invalid bytes, on overshooting the target, on exceeding the
    depth budget, and on hitting a terminator before the target (control
    would leave the gadget early).
    """
    pos = start
    count = 0
    while pos < target:
        insn = decoder.decode(data, pos)
        if not insn.valid:
            return None
        if insn.terminator in config.terminators:
            return None
        count += 1
        if count >= config.depth:  # the terminator itself still needs a slot
            return None
        pos += insn.length
    return count if pos == target else None


def count_gadgets_builtin(
    binary: str | Path,
    config: GadgetConfig | None = None,
    decoder=None,
) -> GadgetReport:
    """Scan every executable section with the builtin decoder.

    For each terminator occurrence, candidate gadget starts are every
    offset within depth * 15 bytes before the terminator's end; a candidate
    counts iff its bytes fall through into that occurrence within the depth
    budget.
    """
    config = config or GadgetConfig()
    decoder = decoder or SubsetDecoder()
    info = read_elf(binary)
    if info.machine not in decoder.machines:
        raise DecoderUnsupported(
            f"{binary}: decoder supports machine ids {sorted(decoder.machines)}, "
            f"binary has {info.machine}"
        )

    seen: set[bytes] = set()
    per_terminator: dict[Terminator, int] = {}
    total = 0
    window = config.depth * _MAX_INSN_BYTES
    for section in info.sections:
        data = section.data
        for t_start, t_end, kind in _find_terminators(data, decoder, config):
            for start in range(max(0, t_end - window), t_start + 1):
                steps = _chain_reaches(data, start, t_start, decoder, config)
                if steps is None:
                    continue
                gadget = data[start:t_end]
                if config.dedupe is Dedupe.BY_BYTES:
                    if gadget in seen:
                        continue
                    seen.add(gadget)
                total += 1
                per_terminator[kind] = per_terminator.get(kind, 0) + 1

    return GadgetReport(
        unique_count=total,
        per_terminator=per_terminator,
        sections_scanned=[(s.name, len(s.data)) for s in info.sections],
        backend=Backend.BUILTIN,
    )


_SUMMARY_RE = re.compile(r"Unique gadgets found:\s*(\d+)")


def count_gadgets_external(binary: str | Path, tool_cmd: str) -> GadgetReport:
    """Run an external gadget tool and parse its unique-count summary line.

    ``tool_cmd`` is a command template with a ``{BIN}`` placeholder, e.g.
    ``ROPgadget --binary {BIN}``. The tool must print a line of the form
    ``Unique gadgets found: <N>``.
    """
    argv = shlex.split(tool_cmd.format(BIN=str(binary)))
    try:
        proc = subprocess.run(argv, capture_output=True, text=True)
    except FileNotFoundError as exc:
        raise ToolNotFound(f"gadget tool not found: {argv[0]}") from exc
    output = proc.stdout + proc.stderr
    match = _SUMMARY_RE.search(output)
    if match is None:
        raise ParseError(
            f"no 'Unique gadgets found: <N>' summary in output of {argv[0]}"
        )
    version = None
    version_match = re.search(r"[Vv]ersion:?\s*([^\s]+)", output)
    if version_match:
        version = version_match.group(1)
    return GadgetReport(
        unique_count=int(match.group(1)),
        backend=Backend.EXTERNAL,
        tool_version=version,
    )
