"""Exception types shared across the package."""


class RamificationError(ValueError):
    """Base class for all errors raised by this package."""


class DimensionError(RamificationError):
    pass


class RankError(RamificationError):
    pass


class NotSubgroup(RamificationError):
    pass


class NotSubtower(RamificationError):
    pass


class BaseMismatch(RamificationError):
    pass


class ResidueDegreeError(RamificationError):
    """Residue degrees of a tower pair are not compatible (``f_sub`` does not divide ``f_big``)."""


class AmbiguousResidue(RamificationError):
    """The residue of a radical unit depends on which root was chosen."""


class NotAUnit(RamificationError):
    pass


class PreconditionError(RamificationError):
    """Inputs violate a hypothesis of the check being run."""


class TameRequired(PreconditionError):
    pass


class ParseError(RamificationError):
    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class GuardExceeded(RamificationError):
    """An oracle or sweep would exceed its hard size limit."""


class InvariantViolation(Exception):
    """The main path and an independent check disagree; always a bug."""
