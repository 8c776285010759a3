"""Exception types shared across the package."""


class ChoquetlikeError(Exception):
    """Base class for all library errors."""


class KindMismatch(ChoquetlikeError):
    """Operands belong to different carriers or dimensions."""


class ScaleOutOfRange(ChoquetlikeError):
    """Scaling coefficient outside [0, 1]."""


class NotMonotone(ChoquetlikeError):
    """Capacity table violates monotonicity; carries the witness pair."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BadBoundary(ChoquetlikeError):
    """Capacity boundary values differ from 0 at the empty set or 1 at the full set."""


class MissingSubset(ChoquetlikeError):
    """Capacity table does not assign every subset."""


class BadParameter(ChoquetlikeError):
    """Constructor argument outside its admissible range."""


class NotAdmissiblePermutation(ChoquetlikeError):
    """Permutation does not sort the inputs into a non-decreasing chain."""


class TooManyTies(ChoquetlikeError):
    """Admissible-permutation set too large to materialize."""


class UnknownKernel(ChoquetlikeError):
    """Kernel specification names no catalog family or registered kernel."""


class KernelRangeError(ChoquetlikeError):
    """Kernel produced a value outside the bounded carrier set."""


class AlphaOutOfRange(ChoquetlikeError):
    """Width normalization requires alpha strictly inside (0, 1)."""


class ReconstructionOutOfK(ChoquetlikeError):
    """Reconstructed interval leaves [0, 1] beyond numeric noise."""


class NoWitnessFound(ChoquetlikeError):
    """Counterexample search exhausted its grid without a violation."""


class HypothesisViolated(ChoquetlikeError):
    """A premise of the requested check failed its grid pre-check, so the
    characterization does not apply and the check refuses to run."""


class OracleDisagreement(ChoquetlikeError):
    """Condition-level verdict and brute-force verdict disagree; indicates a bug."""


class DatasetFormatError(ChoquetlikeError):
    """Dataset file failed to parse or validate."""
