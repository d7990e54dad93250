"""Hand-packed minimal ELF64 files for parser and gadget tests.

Kept independent of the package's ELF reader: this writer lays out files
from the spec'd struct formats directly, so reader bugs cannot hide behind
a shared implementation.
"""

from __future__ import annotations

import struct
from pathlib import Path

EHDR = struct.Struct("<16sHHIQQQIHHHHHH")
SHDR = struct.Struct("<IIQQQQIIQQ")

SHT_PROGBITS = 1
SHT_STRTAB = 3
SHF_ALLOC = 0x2
SHF_EXECINSTR = 0x4
EM_X86_64 = 62


def build_elf(sections, machine=EM_X86_64) -> bytes:
    """sections: list of (name, data, sh_flags) triples."""
    shstrtab = b"\0"
    name_off = {}
    for name, _, _ in sections:
        name_off[name] = len(shstrtab)
        shstrtab += name.encode() + b"\0"
    name_off[".shstrtab"] = len(shstrtab)
    shstrtab += b".shstrtab\0"

    offset = EHDR.size
    placed = []
    for name, data, flags in sections:
        placed.append((name, offset, data, flags))
        offset += len(data)
    shstr_off = offset
    offset += len(shstrtab)
    shoff = offset
    shnum = len(sections) + 2  # NULL + sections + .shstrtab

    blob = bytearray(shoff + shnum * SHDR.size)
    ident = b"\x7fELF" + bytes([2, 1, 1, 0]) + b"\0" * 8
    EHDR.pack_into(
        blob, 0, ident, 2, machine, 1, 0x400000, 0, shoff, 0,
        EHDR.size, 0, 0, SHDR.size, shnum, shnum - 1,
    )
    for _, off, data, _ in placed:
        blob[off : off + len(data)] = data
    blob[shstr_off : shstr_off + len(shstrtab)] = shstrtab

    for i, (name, off, data, flags) in enumerate(placed, start=1):
        SHDR.pack_into(
            blob, shoff + i * SHDR.size, name_off[name], SHT_PROGBITS,
            flags, 0x400000 + off, off, len(data), 0, 0, 16, 0,
        )
    SHDR.pack_into(
        blob, shoff + (shnum - 1) * SHDR.size, name_off[".shstrtab"],
        SHT_STRTAB, 0, 0, shstr_off, len(shstrtab), 0, 0, 1, 0,
    )
    return bytes(blob)


def write_text_elf(path: Path, text_bytes: bytes, machine=EM_X86_64) -> Path:
    """One executable .text section holding the given bytes."""
    path.write_bytes(
        build_elf([(".text", text_bytes, SHF_ALLOC | SHF_EXECINSTR)], machine)
    )
    return path


def write_data_only_elf(path: Path) -> Path:
    """A well-formed ELF with no executable sections."""
    path.write_bytes(build_elf([(".data", b"\x01\x02\x03\x04", SHF_ALLOC)]))
    return path
