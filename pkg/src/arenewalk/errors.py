"""Error types shared across the package.

Bad arguments and malformed input raise plain ValueError. ComputationError
marks runs that were configured correctly but failed numerically (for
example an ill-conditioned mode-coupling matrix). The CLI maps the two
families to distinct exit codes.
"""


class ComputationError(RuntimeError):
    """A numerically impossible or unreliable computation was requested."""
