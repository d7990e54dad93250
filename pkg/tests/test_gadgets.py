import os
import stat

import pytest

from optprune.errors import DecoderUnsupported, ParseError, ToolNotFound
from optprune.gadgets import (
    Backend,
    Dedupe,
    GadgetConfig,
    count_gadgets_builtin,
    count_gadgets_external,
)
from optprune.x86 import SubsetDecoder, Terminator

from .elfcraft import write_text_elf
from .gadget_oracle import brute_force_gadgets

DEC = SubsetDecoder()

# Crafted section payloads (hex): each exercises a different mix of
# terminators, overlaps, prefixes, and junk bytes.
CRAFTED = {
    "pop-ret": "58c3",
    "double-ret": "c3c3",
    "nop-sled-ret": "909090909090c3",
    "mov-pop-ret": "b8010000005fc3",
    "ret-imm": "5e5fc20800",
    "syscall": "b83c0000000f05",
    "int80": "b801000000cd80",
    "jmp-reg": "4889c7ffe0",
    "call-reg": "4889c7ffd0",
    "mixed": "58c35fc20400909090ffe1",
    "junk-and-ret": "06ff06c3",       # invalid byte and FF /0 before ret
    "overlap-imm": "b8c3c3c3c3c3",    # rets hidden inside an immediate
    "prefix-ret": "f3c3",
    "big": ("4883ec08488b05c50b2000" * 8) + "c3" + ("9058" * 10) + "c3",
}


def crafted_elf(tmp_path, name):
    return write_text_elf(tmp_path / f"{name}.elf", bytes.fromhex(CRAFTED[name]))


class TestPinnedCounts:
    def test_pop_ret_two_gadgets(self, tmp_path):
        # "58 C3" yields "pop; ret" and the bare "ret".
        path = crafted_elf(tmp_path, "pop-ret")
        report = count_gadgets_builtin(path)
        assert report.unique_count == 2
        assert report.per_terminator == {Terminator.RET: 2}

    def test_double_ret_dedupes_to_one(self, tmp_path):
        # Both "C3" occurrences give the same byte sequence; "C3 C3" is
        # not a gadget because control leaves at the first ret.
        path = crafted_elf(tmp_path, "double-ret")
        report = count_gadgets_builtin(path)
        assert report.unique_count == 1
        assert report.per_terminator == {Terminator.RET: 1}

    def test_double_ret_without_dedupe(self, tmp_path):
        path = crafted_elf(tmp_path, "double-ret")
        report = count_gadgets_builtin(
            path, GadgetConfig(dedupe=Dedupe.NONE)
        )
        assert report.unique_count == 2

    def test_empty_section_list(self, tmp_path):
        from .elfcraft import write_data_only_elf

        path = write_data_only_elf(tmp_path / "noexec.elf")
        report = count_gadgets_builtin(path)
        assert report.unique_count == 0
        assert report.sections_scanned == []

    def test_depth_one_keeps_only_bare_terminators(self, tmp_path):
        path = crafted_elf(tmp_path, "pop-ret")
        report = count_gadgets_builtin(path, GadgetConfig(depth=1))
        assert report.unique_count == 1  # just "c3"

    def test_terminator_filter(self, tmp_path):
        path = crafted_elf(tmp_path, "mixed")
        only_ret = count_gadgets_builtin(
            path, GadgetConfig(terminators=frozenset({Terminator.RET}))
        )
        assert set(only_ret.per_terminator) == {Terminator.RET}


class TestOracleEquality:
    @pytest.mark.parametrize("name", sorted(CRAFTED))
    def test_matches_brute_force(self, tmp_path, name):
        data = bytes.fromhex(CRAFTED[name])
        path = crafted_elf(tmp_path, name)
        for depth in (1, 2, 10):
            config = GadgetConfig(depth=depth)
            report = count_gadgets_builtin(path, config)
            expected_count, expected_kinds = brute_force_gadgets(
                data, config, DEC
            )
            assert report.unique_count == expected_count, (name, depth)
            assert report.per_terminator == expected_kinds, (name, depth)

    def test_matches_brute_force_on_compiled_text(self, minienc_builds):
        """Same equality on a real (small) compiled binary's sections."""
        from optprune.elf import extract_exec_sections

        path = minienc_builds.artifact("S3").binary_path  # smallest variant
        config = GadgetConfig()
        report = count_gadgets_builtin(path, config)
        total = 0
        seen_union: set[bytes] = set()
        # The oracle dedupes across the whole binary exactly like the
        # scanner: collect per-section sets and merge.
        for section in extract_exec_sections(path):
            for start in range(len(section.data)):
                pos, steps = start, 0
                while pos < len(section.data) and steps < config.depth:
                    insn = DEC.decode(section.data, pos)
                    if not insn.valid:
                        break
                    steps += 1
                    pos += insn.length
                    if insn.terminator in config.terminators:
                        seen_union.add(section.data[start:pos])
                        break
        assert report.unique_count == len(seen_union)


class TestProperties:
    @pytest.mark.parametrize("name", sorted(CRAFTED))
    def test_depth_monotonicity(self, tmp_path, name):
        path = crafted_elf(tmp_path, name)
        counts = [
            count_gadgets_builtin(path, GadgetConfig(depth=d)).unique_count
            for d in range(1, 7)
        ]
        assert counts == sorted(counts)

    def test_deterministic(self, tmp_path):
        path = crafted_elf(tmp_path, "big")
        first = count_gadgets_builtin(path)
        second = count_gadgets_builtin(path)
        assert first == second

    def test_reported_gadgets_redecode_clean(self, tmp_path):
        """Every deduped byte sequence re-decodes to <= depth instructions
        ending in a configured terminator."""
        config = GadgetConfig(dedupe=Dedupe.NONE)
        for name, hexstr in CRAFTED.items():
            data = bytes.fromhex(hexstr)
            _, _ = brute_force_gadgets(data, config, DEC)
            # Reconstruct the gadget set and re-validate each element.
            gadgets: set[bytes] = set()
            for start in range(len(data)):
                pos, steps = start, 0
                while pos < len(data) and steps < config.depth:
                    insn = DEC.decode(data, pos)
                    if not insn.valid:
                        break
                    steps += 1
                    pos += insn.length
                    if insn.terminator in config.terminators:
                        gadgets.add(data[start:pos])
                        break
            for gadget in gadgets:
                pos, steps, last = 0, 0, None
                while pos < len(gadget):
                    insn = DEC.decode(gadget, pos)
                    assert insn.valid
                    steps += 1
                    pos += insn.length
                    last = insn
                assert pos == len(gadget)
                assert steps <= config.depth
                assert last.terminator in config.terminators

    def test_unique_le_sum_invariant(self, tmp_path):
        path = crafted_elf(tmp_path, "mixed")
        for dedupe in Dedupe:
            report = count_gadgets_builtin(path, GadgetConfig(dedupe=dedupe))
            assert report.unique_count <= sum(report.per_terminator.values())

    def test_wrong_architecture_rejected(self, tmp_path):
        path = write_text_elf(tmp_path / "arm.elf", b"\xc3", machine=183)
        with pytest.raises(DecoderUnsupported):
            count_gadgets_builtin(path)

    def test_config_validation(self):
        with pytest.raises(ValueError):
            GadgetConfig(depth=0)
        with pytest.raises(ValueError):
            GadgetConfig(terminators=frozenset())


class TestExternalAdapter:
    def make_tool(self, tmp_path, script):
        tool = tmp_path / "fake-gadget-tool"
        tool.write_text("#!/bin/sh\n" + script)
        tool.chmod(tool.stat().st_mode | stat.S_IEXEC)
        return tool

    def test_parses_summary(self, tmp_path):
        tool = self.make_tool(
            tmp_path, 'echo "Gadgets information"\necho "Unique gadgets found: 106495"\n'
        )
        report = count_gadgets_external("/bin/true", f"{tool} --binary {{BIN}}")
        assert report.unique_count == 106495
        assert report.backend is Backend.EXTERNAL

    def test_version_captured(self, tmp_path):
        tool = self.make_tool(
            tmp_path, 'echo "Version: v7.3"\necho "Unique gadgets found: 7"\n'
        )
        report = count_gadgets_external("/bin/true", f"{tool} {{BIN}}")
        assert report.tool_version == "v7.3"

    def test_missing_summary_is_parse_error(self, tmp_path):
        tool = self.make_tool(tmp_path, 'echo "no summary here"\n')
        with pytest.raises(ParseError):
            count_gadgets_external("/bin/true", f"{tool} {{BIN}}")

    def test_tool_not_found(self):
        with pytest.raises(ToolNotFound):
            count_gadgets_external("/bin/true", "/nonexistent/ROPtool {BIN}")

    def test_binary_path_substituted(self, tmp_path):
        tool = self.make_tool(
            tmp_path,
            'test -e "$1" || { echo "missing arg"; exit 1; }\n'
            'echo "Unique gadgets found: 3"\n',
        )
        report = count_gadgets_external(os.__file__, f"{tool} {{BIN}}")
        assert report.unique_count == 3
