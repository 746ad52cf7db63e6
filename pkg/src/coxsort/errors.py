"""Shared exception types."""

__all__ = ["BudgetExceededError", "VoidComplexError"]


class BudgetExceededError(RuntimeError):
    """A configured enumeration or search budget was exceeded.

    Raised instead of silently truncating, so a partial computation can
    never masquerade as an exact one.
    """


class VoidComplexError(ValueError):
    """The requested subword complex has no faces at all.

    This is distinct from the empty complex ``{frozenset()}``, whose only
    face is the empty face and which behaves like a (-1)-sphere.
    """
