"""Linear-sweep x86-64 instruction length decoder.

This is not a disassembler: gadget scanning only needs instruction
boundaries and terminator classification. The decoder covers a documented
subset of 64-bit mode:

  * legacy prefixes (operand/address size, segment, lock, rep) and REX;
  * the one-byte ALU/mov/push/pop/test/xchg/shift/lea blocks;
  * immediate forms (imm8 / imm16 / imm32 / mov r64, imm64);
  * ModRM addressing incl. SIB and RIP-relative displacements;
  * relative jumps and calls, ret/ret imm16, leave, int/int3/hlt, nop;
  * the two-byte 0F map entries needed in compiler output (syscall,
    endbr64, long nop, jcc, setcc, movzx/movsx, imul, cpuid, xadd).

Bytes outside the subset decode as invalid. Gadget candidates containing
them are discarded, so partial coverage can only undercount, never
fabricate a gadget.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

MAX_INSN_LEN = 15

LEGACY_PREFIXES = frozenset(
    [0x26, 0x2E, 0x36, 0x3E, 0x64, 0x65, 0x66, 0x67, 0xF0, 0xF2, 0xF3]
)


class Terminator(enum.Enum):
    RET = "ret"
    RET_IMM = "ret-imm"
    JMP_INDIRECT = "jmp-indirect"
    CALL_INDIRECT = "call-indirect"
    SYSCALL = "syscall"
    INT80 = "int80"


@dataclass(frozen=True)
class DecodedInstruction:
    offset: int
    length: int
    terminator: Terminator | None
    valid: bool

    @classmethod
    def invalid(cls, offset: int) -> "DecodedInstruction":
        return cls(offset=offset, length=0, terminator=None, valid=False)


# One-byte opcode table: opcode -> (has_modrm, imm_kind)
# imm kinds: None, "ib" (8), "iw" (16), "iz" (16/32 by operand size),
# "iv" (mov imm: 16/32/64), "rel8", "rel32".
_ONE_BYTE: dict[int, tuple[bool, str | None]] = {}

for _base in (0x00, 0x08, 0x10, 0x18, 0x20, 0x28, 0x30, 0x38):
    for _op in range(4):  # ALU r/m,r and r,r/m forms
        _ONE_BYTE[_base + _op] = (True, None)
    _ONE_BYTE[_base + 4] = (False, "ib")  # ALU AL, imm8
    _ONE_BYTE[_base + 5] = (False, "iz")  # ALU eAX, immZ
for _op in range(0x50, 0x60):  # push/pop r64
    _ONE_BYTE[_op] = (False, None)
_ONE_BYTE[0x63] = (True, None)  # movsxd
_ONE_BYTE[0x68] = (False, "iz")  # push immZ
_ONE_BYTE[0x69] = (True, "iz")  # imul r, r/m, immZ
_ONE_BYTE[0x6A] = (False, "ib")  # push imm8
_ONE_BYTE[0x6B] = (True, "ib")  # imul r, r/m, imm8
for _op in range(0x70, 0x80):  # jcc rel8
    _ONE_BYTE[_op] = (False, "rel8")
_ONE_BYTE[0x80] = (True, "ib")
_ONE_BYTE[0x81] = (True, "iz")
_ONE_BYTE[0x83] = (True, "ib")
_ONE_BYTE[0x84] = (True, None)  # test r/m8, r8
_ONE_BYTE[0x85] = (True, None)
_ONE_BYTE[0x86] = (True, None)  # xchg
_ONE_BYTE[0x87] = (True, None)
for _op in range(0x88, 0x8C):  # mov
    _ONE_BYTE[_op] = (True, None)
_ONE_BYTE[0x8D] = (True, None)  # lea
_ONE_BYTE[0x8F] = (True, None)  # pop r/m
for _op in range(0x90, 0x98):  # nop / xchg eAX, r
    _ONE_BYTE[_op] = (False, None)
_ONE_BYTE[0x98] = (False, None)  # cwde
_ONE_BYTE[0x99] = (False, None)  # cdq
_ONE_BYTE[0x9C] = (False, None)  # pushf
_ONE_BYTE[0x9D] = (False, None)  # popf
_ONE_BYTE[0xA8] = (False, "ib")  # test AL, imm8
_ONE_BYTE[0xA9] = (False, "iz")
for _op in range(0xB0, 0xB8):  # mov r8, imm8
    _ONE_BYTE[_op] = (False, "ib")
for _op in range(0xB8, 0xC0):  # mov r, imm (16/32/64)
    _ONE_BYTE[_op] = (False, "iv")
_ONE_BYTE[0xC0] = (True, "ib")  # shift r/m8, imm8
_ONE_BYTE[0xC1] = (True, "ib")
_ONE_BYTE[0xC2] = (False, "iw")  # ret imm16
_ONE_BYTE[0xC3] = (False, None)  # ret
_ONE_BYTE[0xC6] = (True, "ib")  # mov r/m8, imm8
_ONE_BYTE[0xC7] = (True, "iz")
_ONE_BYTE[0xC9] = (False, None)  # leave
_ONE_BYTE[0xCB] = (False, None)  # retf (not a configured terminator kind)
_ONE_BYTE[0xCC] = (False, None)  # int3
_ONE_BYTE[0xCD] = (False, "ib")  # int imm8
for _op in range(0xD0, 0xD4):  # shift groups
    _ONE_BYTE[_op] = (True, None)
_ONE_BYTE[0xE8] = (False, "rel32")  # call rel32
_ONE_BYTE[0xE9] = (False, "rel32")  # jmp rel32
_ONE_BYTE[0xEB] = (False, "rel8")  # jmp rel8
_ONE_BYTE[0xF4] = (False, None)  # hlt
_ONE_BYTE[0xF6] = (True, None)  # test/not/neg group, imm handled below
_ONE_BYTE[0xF7] = (True, None)
_ONE_BYTE[0xFE] = (True, None)  # inc/dec r/m8
_ONE_BYTE[0xFF] = (True, None)  # inc/dec/call/jmp/push group

# Two-byte opcode (0F xx) table: opcode -> (has_modrm, imm_kind)
_TWO_BYTE: dict[int, tuple[bool, str | None]] = {
    0x05: (False, None),  # syscall
    0x0B: (False, None),  # ud2
    0x1E: (True, None),   # endbr64 et al (F3 0F 1E /r)
    0x1F: (True, None),   # long nop
    0xA2: (False, None),  # cpuid
    0xAF: (True, None),   # imul r, r/m
    0xB6: (True, None),   # movzx r, r/m8
    0xB7: (True, None),   # movzx r, r/m16
    0xBE: (True, None),   # movsx r, r/m8
    0xBF: (True, None),   # movsx r, r/m16
    0xC0: (True, None),   # xadd r/m8, r8
    0xC1: (True, None),   # xadd
}
for _op in range(0x80, 0x90):  # jcc rel32
    _TWO_BYTE[_op] = (False, "rel32")
for _op in range(0x90, 0xA0):  # setcc r/m8
    _TWO_BYTE[_op] = (True, None)


def _modrm_tail_len(data: bytes, pos: int) -> int | None:
    """Bytes consumed by ModRM + SIB + displacement, or None if truncated."""
    if pos >= len(data):
        return None
    modrm = data[pos]
    mod = modrm >> 6
    rm = modrm & 0x07
    length = 1
    if mod == 0b11:
        return length
    has_sib = rm == 0b100
    if has_sib:
        if pos + length >= len(data):
            return None
        sib = data[pos + length]
        length += 1
    if mod == 0b00:
        if rm == 0b101:
            length += 4  # RIP-relative disp32
        elif has_sib and (sib & 0x07) == 0b101:
            length += 4  # SIB with no base: disp32
    elif mod == 0b01:
        length += 1
    elif mod == 0b10:
        length += 4
    return length


class SubsetDecoder:
    """Instruction-length decoder for the documented x86-64 subset.

    Any object with a ``machines`` set and a ``decode(data, offset)``
    method can stand in for it, so other architectures can be plugged into
    the gadget counter without touching it.
    """

    machines = frozenset([62])  # EM_X86_64

    def decode(self, data: bytes, offset: int) -> DecodedInstruction:
        pos = offset
        end = min(len(data), offset + MAX_INSN_LEN)
        operand_16 = False

        while pos < end and data[pos] in LEGACY_PREFIXES:
            if data[pos] == 0x66:
                operand_16 = True
            pos += 1
        rex = 0
        if pos < end and 0x40 <= data[pos] <= 0x4F:
            rex = data[pos]
            pos += 1
        if pos >= end:
            return DecodedInstruction.invalid(offset)

        opcode = data[pos]
        pos += 1
        terminator: Terminator | None = None

        if opcode == 0x0F:
            if pos >= end:
                return DecodedInstruction.invalid(offset)
            opcode2 = data[pos]
            pos += 1
            entry = _TWO_BYTE.get(opcode2)
            if entry is None:
                return DecodedInstruction.invalid(offset)
            has_modrm, imm = entry
            if opcode2 == 0x05:
                terminator = Terminator.SYSCALL
        else:
            entry = _ONE_BYTE.get(opcode)
            if entry is None:
                return DecodedInstruction.invalid(offset)
            has_modrm, imm = entry
            if opcode == 0xC3:
                terminator = Terminator.RET
            elif opcode == 0xC2:
                terminator = Terminator.RET_IMM

        reg_field = None
        if has_modrm:
            if pos >= end:
                return DecodedInstruction.invalid(offset)
            reg_field = (data[pos] >> 3) & 0x07
            tail = _modrm_tail_len(data, pos)
            if tail is None or pos + tail > end:
                return DecodedInstruction.invalid(offset)
            pos += tail

        if opcode != 0x0F:
            if opcode == 0xFF:
                if reg_field == 0b111:
                    return DecodedInstruction.invalid(offset)
                if reg_field == 0b010:
                    terminator = Terminator.CALL_INDIRECT
                elif reg_field == 0b100:
                    terminator = Terminator.JMP_INDIRECT
            elif opcode == 0xFE and reg_field not in (0b000, 0b001):
                return DecodedInstruction.invalid(offset)
            elif opcode in (0xF6, 0xF7) and reg_field in (0b000, 0b001):
                imm = "ib" if opcode == 0xF6 else "iz"

        if imm is not None:
            if imm in ("ib", "rel8"):
                size = 1
            elif imm == "iw":
                size = 2
            elif imm == "rel32":
                size = 4
            elif imm == "iz":
                size = 2 if operand_16 else 4
            else:  # iv: mov r, imm
                size = 8 if rex & 0x08 else (2 if operand_16 else 4)
            if pos + size > end:
                return DecodedInstruction.invalid(offset)
            if opcode == 0xCD and data[pos] == 0x80:
                terminator = Terminator.INT80
            pos += size

        return DecodedInstruction(
            offset=offset, length=pos - offset, terminator=terminator, valid=True
        )
