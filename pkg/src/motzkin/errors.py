"""Exception types raised by the motzkin package."""


class MotzkinError(ValueError):
    """Base class for every domain error raised by this package."""


class EmptyInputError(MotzkinError):
    pass


class IllegalCharacterError(MotzkinError):
    def __init__(self, position: int, char: str):
        super().__init__(f"illegal character {char!r} at position {position}")
        self.position = position
        self.char = char


class UnbalancedError(MotzkinError):
    """Parentheses do not balance.

    ``position`` is the 1-based index of the first ')' that has no open
    partner, or ``None`` when the word ends with unclosed '('.
    """

    def __init__(self, position: "int | None"):
        if position is None:
            super().__init__("unbalanced word: unclosed '('")
        else:
            super().__init__(f"unbalanced word: unmatched ')' at position {position}")
        self.position = position


class NotCanonicalError(MotzkinError):
    """A word with leading zeros where a canonical one is required."""


class DomainViolationError(MotzkinError):
    """Arguments outside the defining domain of an operation."""


class RangeTooLargeError(MotzkinError):
    """Exhaustive enumeration requested beyond the safety guard."""


class IntersectsError(MotzkinError):
    """Partial addition hit two non-zero symbols in the same position."""

    def __init__(self, position: int):
        super().__init__(f"operands intersect at position {position}")
        self.position = position


class NestedOperandsError(MotzkinError):
    """Partial addition of operands whose block intervals nest or cross."""


class NotSubwordError(MotzkinError):
    """Subtraction of a symbol the left operand does not carry."""

    def __init__(self, position: int):
        super().__init__(f"right operand is not a subword: mismatch at position {position}")
        self.position = position


class NotTopLevelError(MotzkinError):
    """Subtraction of blocks that are not top-level blocks of the left operand."""


class OverlapError(MotzkinError):
    """Pair spans that cross each other."""


class PositionConflictError(MotzkinError):
    """The same position claimed by more than one bracket."""
