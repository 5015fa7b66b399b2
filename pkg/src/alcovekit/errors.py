"""Exception types shared by the alcovekit modules."""


class LabelError(ValueError):
    """Malformed or unsupported affine Cartan label."""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class UnsupportedError(NotImplementedError):
    """The requested computation is not available for this label."""


class InvalidElementError(ValueError):
    """An affine Weyl group element whose translation is not in M."""
