import pytest

from optprune.x86 import DecodedInstruction, SubsetDecoder, Terminator

DEC = SubsetDecoder()


def decode(hexstr, offset=0):
    return DEC.decode(bytes.fromhex(hexstr), offset)


@pytest.mark.parametrize("hexstr,length", [
    ("90", 1),            # nop
    ("c3", 1),            # ret
    ("c9", 1),            # leave
    ("58", 1),            # pop rax
    ("50", 1),            # push rax
    ("6a2a", 2),          # push 0x2a
    ("682a000000", 5),    # push 0x2a (imm32)
    ("b82a000000", 5),    # mov eax, 0x2a
    ("48b80102030405060708", 10),  # mov rax, imm64 (REX.W)
    ("66b83412", 4),      # mov ax, imm16 (operand-size prefix)
    ("4889e5", 3),        # mov rbp, rsp (REX.W + modrm reg-reg)
    ("8b45fc", 3),        # mov eax, [rbp-4] (modrm disp8)
    ("8b8424a0000000", 7),  # mov eax, [rsp+0xa0] (SIB + disp32)
    ("8b0425a0000000", 7),  # mov eax, [abs disp32] (SIB base=101)
    ("8b05a0000000", 6),  # mov eax, [rip+0xa0]
    ("83c401", 3),        # add esp, 1 (group 0x83 imm8)
    ("81c478563412", 6),  # add esp, imm32
    ("c20800", 3),        # ret 8
    ("cd80", 2),          # int 0x80
    ("0f05", 2),          # syscall
    ("f30f1efa", 4),      # endbr64
    ("0f1f440000", 5),    # nopl (long nop, SIB + disp8)
    ("0f84deadbeef", 6),  # jz rel32
    ("74fe", 2),          # jz rel8
    ("e8deadbeef", 5),    # call rel32
    ("ffd0", 2),          # call rax
    ("ffe0", 2),          # jmp rax
    ("ff2514000000", 6),  # jmp [rip+0x14]
    ("f7d8", 2),          # neg eax (F7 /3, no imm)
    ("f7c078563412", 6),  # test eax, imm32 (F7 /0)
    ("f6c101", 3),        # test cl, 1 (F6 /0 imm8)
    ("0fb6c0", 3),        # movzx eax, al
    ("0fafc3", 3),        # imul eax, ebx
    ("31c0", 2),          # xor eax, eax
    ("4831c0", 3),        # xor rax, rax
    ("a82a", 2),          # test al, 0x2a
    ("d1e8", 2),          # shr eax, 1
    ("c1e805", 3),        # shr eax, 5
    ("f3c3", 2),          # rep ret
])
def test_lengths(hexstr, length):
    insn = decode(hexstr)
    assert insn.valid, hexstr
    assert insn.length == length


@pytest.mark.parametrize("hexstr,kind", [
    ("c3", Terminator.RET),
    ("f3c3", Terminator.RET),            # prefixed ret is still a ret
    ("c20800", Terminator.RET_IMM),
    ("ffe0", Terminator.JMP_INDIRECT),
    ("ff2500000000", Terminator.JMP_INDIRECT),
    ("ffd0", Terminator.CALL_INDIRECT),
    ("ff1500000000", Terminator.CALL_INDIRECT),
    ("41ffe4", Terminator.JMP_INDIRECT),  # REX-prefixed jmp r12
    ("0f05", Terminator.SYSCALL),
    ("cd80", Terminator.INT80),
])
def test_terminators(hexstr, kind):
    insn = decode(hexstr)
    assert insn.valid
    assert insn.terminator is kind


@pytest.mark.parametrize("hexstr", [
    "cd13",   # int 0x13 is not int80
    "90",
    "e8deadbeef",  # direct call: not an indirect terminator
    "eb05",
    "fff0",   # FF /6 = push rax
])
def test_non_terminators(hexstr):
    insn = decode(hexstr)
    assert insn.valid
    assert insn.terminator is None


@pytest.mark.parametrize("hexstr", [
    "0f",        # truncated two-byte opcode
    "ff",        # missing modrm
    "b8",        # truncated imm32
    "48b801",    # truncated imm64
    "0fffc0",    # unknown 0F opcode
    "fff8",      # FF /7 is undefined
    "fec9ff",    # valid FE /1... first two bytes valid; test bare "fe"
    "06",        # push es: invalid in 64-bit mode, not in table
    "666666666666666666666666666690",  # 15-byte budget blown by prefixes+nop? 14 prefixes + opcode = 15: valid
])
def test_invalid_or_edge(hexstr):
    insn = decode(hexstr)
    if hexstr == "fec9ff":
        assert insn.valid and insn.length == 2
    elif hexstr == "666666666666666666666666666690":
        assert insn.valid and insn.length == 15
    else:
        assert not insn.valid
        assert insn.length == 0


def test_sixteen_byte_instruction_rejected():
    # 15 legacy prefixes + nop exceeds the architectural 15-byte limit.
    data = bytes([0x66] * 15 + [0x90])
    insn = DEC.decode(data, 0)
    assert not insn.valid


def test_decode_at_offset():
    data = bytes.fromhex("9058c3")
    assert DEC.decode(data, 1).length == 1
    assert DEC.decode(data, 2).terminator is Terminator.RET
    assert DEC.decode(data, 3).valid is False  # past the end


def test_invalid_constructor():
    insn = DecodedInstruction.invalid(7)
    assert insn.offset == 7 and not insn.valid and insn.length == 0


def test_machines_attribute():
    assert 62 in SubsetDecoder.machines
