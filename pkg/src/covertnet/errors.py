"""Exception types shared across the package.

The CLI maps these onto exit codes: file/format problems exit 1,
violated preconditions and failed computations exit 2, and
unsatisfiable synthesis targets exit 3.
"""


class GraphError(ValueError):
    """A graph invariant would be violated, or a label is unknown."""


class FileFormatError(ValueError):
    """An input file or stream does not follow its documented format."""


class PreconditionError(ValueError):
    """An operation's precondition is not met by the given arguments."""


class ConvergenceError(RuntimeError):
    """An iterative solver hit its iteration cap before converging."""


class DismantlingError(RuntimeError):
    """A dismantling run cannot make progress or never met its target."""


class InfeasibleTargetError(ValueError):
    """A synthesis target's hard constraints cannot all be satisfied."""
