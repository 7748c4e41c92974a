"""Exception types shared across the package.

Each carries the CLI exit code it maps to.
"""


class AntiRamseyError(Exception):
    exit_code = 1


class InputError(AntiRamseyError, ValueError):
    """Malformed input: bad sizes, inconsistent counts, unparsable files."""

    exit_code = 2


class DomainError(AntiRamseyError, ValueError):
    """Well-formed input outside an operation's domain (k = 1, q out of range, ...)."""

    exit_code = 2


class ResourceError(AntiRamseyError, RuntimeError):
    """A search cap or node budget was exceeded; no answer is returned."""

    exit_code = 4
