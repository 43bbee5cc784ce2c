class Sp4Error(ValueError):
    """Base class for invalid inputs to sp4squeeze routines."""


class NotSymplecticError(Sp4Error):
    """Raised when a matrix fails S beta S^T = beta.

    The max-norm residual is kept in ``residual`` so callers (the CLI in
    particular) can report it.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotUnitaryError(Sp4Error):
    pass


class InvalidLabelError(Sp4Error):
    pass
