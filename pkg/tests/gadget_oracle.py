"""Brute-force gadget oracle: exhaustive start-offset enumeration.

Deliberately structured unlike the shipped scanner (which windows around
terminator occurrences): this walks forward from every byte offset and
takes the first terminator reached within the depth budget. Both must
agree exactly on any input.
"""

from __future__ import annotations

from optprune.gadgets import Dedupe, GadgetConfig
from optprune.x86 import Terminator


def brute_force_gadgets(data: bytes, config: GadgetConfig, decoder):
    """(unique_count, per_terminator) over one section's bytes."""
    seen: set[bytes] = set()
    per_terminator: dict[Terminator, int] = {}
    total = 0
    for start in range(len(data)):
        pos = start
        steps = 0
        while pos < len(data) and steps < config.depth:
            insn = decoder.decode(data, pos)
            if not insn.valid:
                break
            steps += 1
            pos += insn.length
            if insn.terminator in config.terminators:
                gadget = data[start:pos]
                if config.dedupe is Dedupe.BY_BYTES:
                    if gadget in seen:
                        break
                    seen.add(gadget)
                total += 1
                per_terminator[insn.terminator] = (
                    per_terminator.get(insn.terminator, 0) + 1
                )
                break
    return total, per_terminator
