"""Exception types shared across the package."""


class RamondError(Exception):
    """Base class for domain errors raised by this package."""

    kind = "error"

    def __init__(self, detail, witness=None):
        super().__init__(detail)
        self.detail = detail
        self.witness = witness


class ParseError(RamondError):
    """Syntax error in an expression, vector or module-spec string."""

    kind = "parse"

    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(f"syntax error at offset {position}: expected {expected}")


class PhiValidationError(RamondError):
    """Character data does not extend to a homomorphism of its domain."""

    kind = "phi"


class SplitError(RamondError):
    """Monomial cannot be factored across the requested boundary."""

    kind = "split"


class WeightBudgetError(RamondError):
    """A module computation would exceed the configured weight budget."""

    kind = "weight-budget"


class HypothesisViolation(RamondError):
    """The degree-reduction loop met a state its preconditions forbid."""

    kind = "hypothesis-violation"
