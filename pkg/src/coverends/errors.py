"""Exception hierarchy; the CLI maps these onto distinct exit codes."""


class CoverEndsError(Exception):
    """Base class for all package errors."""


class WordSyntaxError(CoverEndsError):
    """A word string does not parse over the model's alphabet."""


class UnsupportedSubgroupError(CoverEndsError):
    """Subgroup shape outside the supported families (e.g. a non
    product-form subgroup of a direct product)."""


class BudgetExceededError(CoverEndsError):
    """A ball construction exceeded its vertex budget."""

    def __init__(self, budget: int, context: str = ""):
        self.budget = budget
        msg = f"vertex budget of {budget} exceeded"
        if context:
            msg += f" while building {context}"
        super().__init__(msg)


class ProjectionError(CoverEndsError):
    """A covering projection could not match a coset (inconsistent pair)."""


class ChainError(CoverEndsError):
    """A claimed subgroup chain fails its membership validation."""


class JobError(CoverEndsError):
    """A job file fails to parse or validate."""
