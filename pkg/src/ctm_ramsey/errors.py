"""Exception types shared by the library and the CLI."""


class PreconditionError(ValueError):
    """An input violates a documented threshold or parameter range."""


class StructuralContradiction(RuntimeError):
    """A guarantee of the underlying combinatorial argument failed to hold.

    On valid input this never happens; seeing it means either a bug in the
    extraction code or an input that was not what the caller claimed.
    The message names the inequality that broke.
    """
