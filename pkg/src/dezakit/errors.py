"""Shared exception types."""


class ContradictionError(RuntimeError):
    """A concrete instance falsified a statement the toolkit verifies.

    Raised only when arithmetic on an actual graph contradicts a verified
    relationship, which indicates a bug (or an input outside the stated
    preconditions), never for ordinary negative answers.
    """


class InfeasibleError(ValueError):
    """Parameter or multiplicity arithmetic has no feasible solution."""


class SpectrumShapeError(ValueError):
    """A spectrum does not match the eigenvalue pattern an operation needs."""
