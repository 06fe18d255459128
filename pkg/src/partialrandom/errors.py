"""Exception hierarchy shared by every module."""


class PartialRandomError(Exception):
    pass


class MissingHError(PartialRandomError, KeyError):
    """A table-backed weight function has no entry for a string."""

    def __init__(self, sigma: str):
        super().__init__(sigma)
        self.sigma = sigma

    def __str__(self) -> str:
        return f"h is not defined on {sigma_repr(self.sigma)}"


class ResourceLimitError(PartialRandomError):
    """A desk-scale bound (universe size, partition size, exponent cap) was exceeded."""


class BoundedUniverseError(ResourceLimitError, ValueError):
    pass


class PartitionLimitError(ResourceLimitError, ValueError):
    pass


class CapExceededError(ResourceLimitError):
    pass


class SearchBoundError(ResourceLimitError):
    """A witness search failed, but only because of the description-length bound."""


class ExpressionSyntaxError(PartialRandomError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class FormatError(PartialRandomError, ValueError):
    pass


def sigma_repr(sigma: str) -> str:
    return sigma if sigma else "@"
