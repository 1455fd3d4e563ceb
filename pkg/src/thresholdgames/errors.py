"""Exceptions shared across the package."""


class InvalidInputError(ValueError):
    """Malformed data: bad indices, broken antichains, length mismatches."""


class PreconditionError(ValueError):
    """Structurally valid input that a particular operation cannot accept."""
