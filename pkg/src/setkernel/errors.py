"""Exception types shared across the kernel."""


class KernelError(Exception):
    """Base class for all errors raised by this package."""


class BudgetError(KernelError):
    """A computation would exceed a configured resource budget."""


class PreconditionError(KernelError, ValueError):
    """An operation was called on arguments outside its domain."""


class NotWellFoundedError(KernelError):
    """The relation has a nonempty subset without a minimal element."""


class NotWellOrderError(KernelError):
    """The relation is not a strict linear order.

    `axiom` names the violated requirement (irreflexivity, transitivity,
    totality), `witness` is a concrete offending node tuple.
    """

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"not a strict linear order: {axiom} fails at {witness!r}")


class WitnessError(KernelError):
    """A density/endlessness witness callback failed to produce an element."""

    def __init__(self, side, left, right, reason=""):
        self.side = side
        self.left = left
        self.right = right
        msg = f"side {side!r} produced no witness between {sorted(map(str, left))!r} and {sorted(map(str, right))!r}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class ParseError(KernelError):
    """Syntax error, with position and the expected-token set."""

    def __init__(self, message, line=1, column=0, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        full = f"{line}:{column}: {message}"
        if expected:
            full += " (expected " + " | ".join(sorted(self.expected)) + ")"
        super().__init__(full)


class EvalError(KernelError):
    """Evaluation of a parsed expression failed."""


class SortMismatchError(EvalError):
    """An expression mixes ordinal, rational, and set operands."""
