"""Shared exception types."""


class ContractViolation(ValueError):
    """An argument violates a documented precondition of the operation."""
