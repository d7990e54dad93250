"""Minimal ELF64 reader: just enough to pull executable section bytes.

Supports 64-bit little-endian ELF files with section headers, which covers
everything a measured build on this pipeline produces. Anything else is
rejected loudly rather than mis-scanned.
"""

from __future__ import annotations

import struct
from pathlib import Path
from typing import NamedTuple

from .errors import MalformedElf, NotElf

ELF_MAGIC = b"\x7fELF"
ELFCLASS64 = 2
ELFDATA2LSB = 1
SHF_EXECINSTR = 0x4
SHT_NOBITS = 8
EM_X86_64 = 62

_EHDR = struct.Struct("<16sHHIQQQIHHHHHH")
_SHDR = struct.Struct("<IIQQQQIIQQ")


class ExecSection(NamedTuple):
    name: str
    file_offset: int
    data: bytes


class ElfInfo(NamedTuple):
    machine: int
    sections: list[ExecSection]


def _read(data: bytes, offset: int, size: int, what: str) -> bytes:
    chunk = data[offset : offset + size]
    if len(chunk) != size:
        raise MalformedElf(f"truncated {what} at offset {offset}")
    return chunk


def read_elf(path: str | Path) -> ElfInfo:
    """Parse headers and return the machine id plus executable sections."""
    data = Path(path).read_bytes()
    if len(data) < 4 or data[:4] != ELF_MAGIC:
        raise NotElf(f"{path}: not an ELF file")
    if len(data) < _EHDR.size:
        raise MalformedElf(f"{path}: truncated ELF header")
    (ident, _etype, machine, _version, _entry, _phoff, shoff,
     _flags, _ehsize, _phentsize, _phnum, shentsize, shnum, shstrndx,
     ) = _EHDR.unpack(data[: _EHDR.size])
    if ident[4] != ELFCLASS64:
        raise MalformedElf(f"{path}: only 64-bit ELF is supported")
    if ident[5] != ELFDATA2LSB:
        raise MalformedElf(f"{path}: only little-endian ELF is supported")
    if shoff == 0 or shnum == 0:
        raise MalformedElf(f"{path}: no section headers")
    if shentsize != _SHDR.size:
        raise MalformedElf(f"{path}: unexpected section header size {shentsize}")

    headers = []
    for i in range(shnum):
        raw = _read(data, shoff + i * shentsize, shentsize, f"section header {i}")
        headers.append(_SHDR.unpack(raw))

    if shstrndx >= shnum:
        raise MalformedElf(f"{path}: bad section name table index {shstrndx}")
    str_hdr = headers[shstrndx]
    strtab = _read(data, str_hdr[4], str_hdr[5], "section name table")

    def name_at(off: int) -> str:
        end = strtab.find(b"\0", off)
        if end < 0:
            end = len(strtab)
        return strtab[off:end].decode("latin-1")

    sections = []
    for hdr in headers:
        sh_name, sh_type, sh_flags, _addr, sh_offset, sh_size = hdr[:6]
        if not sh_flags & SHF_EXECINSTR:
            continue
        if sh_type == SHT_NOBITS or sh_size == 0:
            continue
        raw = _read(data, sh_offset, sh_size, f"section {name_at(sh_name)!r}")
        sections.append(ExecSection(name_at(sh_name), sh_offset, raw))
    return ElfInfo(machine=machine, sections=sections)


def extract_exec_sections(path: str | Path) -> list[ExecSection]:
    """Every section flagged executable, with its raw file bytes."""
    return read_elf(path).sections
