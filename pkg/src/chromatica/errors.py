"""Exception hierarchy shared by every module of the package."""


class ChromaticaError(Exception):
    """Base class for all library errors."""


class ContractError(ChromaticaError, ValueError):
    """An operation was called with arguments violating its precondition."""


class UnsupportedBasisError(ChromaticaError):
    pass


class UnsupportedSizeError(ChromaticaError):
    """Input exceeds a configured enumeration cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} = {size} exceeds the configured cap of {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class InvalidFamilyError(ChromaticaError, ValueError):
    """Parameters do not describe a member of the requested graph family."""


class NotSymmetricError(ChromaticaError):
    """A quasisymmetric computation turned out not to be symmetric."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InconsistentInputError(ChromaticaError):
    pass


class InvalidInputError(ChromaticaError, ValueError):
    pass


class IncompleteCaseError(ChromaticaError):
    """A case analysis found no branch applicable to its input."""
