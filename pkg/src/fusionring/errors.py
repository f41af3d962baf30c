"""Exception hierarchy; each class maps to one CLI exit code."""


class FusionRingError(Exception):
    exit_code = 1
    kind = "error"


class InputError(FusionRingError, ValueError):
    """Malformed or out-of-range input (bad group spec, bad weight, bad level)."""

    exit_code = 2
    kind = "input"


class UnsupportedError(FusionRingError):
    """A well-formed request outside what can be computed here."""

    exit_code = 3
    kind = "unsupported"


class ResourceError(FusionRingError):
    """A configured size cap would be exceeded."""

    exit_code = 4
    kind = "resource"


class NotPrequantizableError(InputError):
    pass
