"""Exception hierarchy shared by the whole toolkit.

DomainError marks a well-formed request that violates an operation's
precondition (unknown vertex, non-reduced input, containment failure, ...).
InputError marks syntactically broken input (bad word text, malformed JSON,
missing file).  The command-line driver maps them to exit codes 1 and 2.
"""


class RaagError(Exception):
    pass


class DomainError(RaagError):
    """A valid-looking request that an operation cannot legally perform."""


class InputError(RaagError):
    """Input that could not even be parsed into domain objects."""
