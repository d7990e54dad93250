"""Exception types shared across the pipeline."""


class OptPruneError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(OptPruneError):
    """A manifest or tool output could not be parsed."""


class ValidationError(OptPruneError):
    """A catalog or manifest violates a structural invariant."""


class UnknownOption(OptPruneError):
    """Referenced run-time option is not in the catalog."""


class UnknownPreset(OptPruneError):
    """Referenced preset is not in the catalog."""


class UnknownMetric(OptPruneError):
    """Referenced metric was never measured in this campaign."""


class GroupViolation(OptPruneError):
    """A removal set would empty an alternative group."""


class InputError(OptPruneError):
    """Caller handed inconsistent inputs (e.g. duplicate plan ids)."""


class UnbalancedDirective(OptPruneError):
    """A guard-referencing #if has no matching #endif."""


class BuildFailure(OptPruneError):
    """Build command exited non-zero. Carries the failed artifact."""

    def __init__(self, message, artifact=None):
        super().__init__(message)
        self.artifact = artifact


class MissingBinary(BuildFailure):
    """Build succeeded but the expected output binary is absent."""


class ExecutionError(OptPruneError):
    """A measured or validated binary failed to run."""


class NotElf(OptPruneError):
    """Input file does not carry an ELF magic number."""


class MalformedElf(OptPruneError):
    """ELF file is truncated or outside the supported 64-bit LE contract."""


class DecoderUnsupported(OptPruneError):
    """The instruction decoder does not support the binary's architecture."""


class ToolNotFound(OptPruneError):
    """External gadget tool is not installed or not executable."""


class LengthMismatch(OptPruneError):
    """Paired samples have different lengths."""


class AllZeroDifferences(OptPruneError):
    """Every paired difference is zero; the signed-rank test is undefined."""


class ZeroBaseline(OptPruneError):
    """Percent change against a zero baseline is undefined."""
