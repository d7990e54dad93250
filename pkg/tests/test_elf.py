import re
import shutil
import subprocess

import pytest

from optprune.elf import extract_exec_sections, read_elf
from optprune.errors import MalformedElf, NotElf

from .elfcraft import (
    SHF_ALLOC,
    SHF_EXECINSTR,
    build_elf,
    write_data_only_elf,
    write_text_elf,
)


def test_crafted_text_section_round_trips(tmp_path):
    payload = b"\x58\xc3\x90\x90"
    path = write_text_elf(tmp_path / "a.elf", payload)
    sections = extract_exec_sections(path)
    assert [(s.name, s.data) for s in sections] == [(".text", payload)]


def test_machine_field(tmp_path):
    path = write_text_elf(tmp_path / "a.elf", b"\xc3", machine=62)
    assert read_elf(path).machine == 62
    path = write_text_elf(tmp_path / "b.elf", b"\xc3", machine=183)  # aarch64
    assert read_elf(path).machine == 183


def test_no_executable_sections(tmp_path):
    path = write_data_only_elf(tmp_path / "data.elf")
    assert extract_exec_sections(path) == []


def test_multiple_exec_sections(tmp_path):
    blob = build_elf([
        (".text", b"\xc3", SHF_ALLOC | SHF_EXECINSTR),
        (".data", b"\x11\x22", SHF_ALLOC),
        (".text.hot", b"\x90\xc3", SHF_ALLOC | SHF_EXECINSTR),
    ])
    path = tmp_path / "multi.elf"
    path.write_bytes(blob)
    names = [s.name for s in extract_exec_sections(path)]
    assert names == [".text", ".text.hot"]


def test_not_elf(tmp_path):
    path = tmp_path / "note.txt"
    path.write_text("definitely not an object file\n")
    with pytest.raises(NotElf):
        extract_exec_sections(path)


def test_truncated_elf(tmp_path):
    blob = build_elf([(".text", b"\xc3" * 16, SHF_ALLOC | SHF_EXECINSTR)])
    path = tmp_path / "trunc.elf"
    path.write_bytes(blob[: len(blob) // 2])
    with pytest.raises(MalformedElf):
        extract_exec_sections(path)


def test_32_bit_rejected(tmp_path):
    blob = bytearray(build_elf([(".text", b"\xc3", SHF_ALLOC | SHF_EXECINSTR)]))
    blob[4] = 1  # ELFCLASS32
    path = tmp_path / "elf32.elf"
    path.write_bytes(bytes(blob))
    with pytest.raises(MalformedElf, match="64-bit"):
        extract_exec_sections(path)


def test_compiled_binary_has_text(minienc_builds):
    artifact = minienc_builds.artifact("S0")
    sections = extract_exec_sections(artifact.binary_path)
    by_name = {s.name: s for s in sections}
    assert ".text" in by_name
    assert len(by_name[".text"].data) > 0


@pytest.mark.skipif(shutil.which("readelf") is None, reason="readelf not installed")
def test_agrees_with_readelf(minienc_builds, tmp_path):
    """Cross-check section names/sizes against binutils on a real binary
    and on a crafted file."""
    crafted = write_text_elf(tmp_path / "c.elf", b"\x58\xc3" * 7)
    for path in (minienc_builds.artifact("S0").binary_path, crafted):
        out = subprocess.run(
            ["readelf", "-S", "-W", str(path)], capture_output=True, text=True,
            check=True,
        ).stdout
        expected = {}
        for line in out.splitlines():
            match = re.match(
                r"\s*\[\s*\d+\]\s+(\S+)\s+(\S+)\s+\S+\s+\S+\s+(\S+)\s+\S+"
                r"\s+([A-Z]+)\s", line,
            )
            if match:
                name, typ, size, flags = match.groups()
                if "X" in flags and typ != "NOBITS" and int(size, 16) > 0:
                    expected[name] = int(size, 16)
        got = {s.name: len(s.data) for s in extract_exec_sections(path)}
        assert got == expected
