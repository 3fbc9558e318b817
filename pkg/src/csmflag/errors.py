"""Exception types shared across the package."""


class CsmflagError(Exception):
    pass


class NotDivisibleError(CsmflagError):
    """Exact division failed; carries the nonzero remainder."""

    def __init__(self, remainder, divisor=None):
        self.remainder = remainder
        self.divisor = divisor
        msg = f"not divisible, remainder {remainder}"
        if divisor is not None:
            msg += f" (divisor {divisor})"
        super().__init__(msg)


class NotPolynomialError(CsmflagError):
    """A factored rational failed to clear its denominator."""

    def __init__(self, value):
        self.value = value
        super().__init__(f"denominator does not clear: {value}")


class DistinctnessViolation(CsmflagError):
    """An index tuple has overlapping or out-of-range blocks."""


class BudgetExceeded(CsmflagError):
    """The symmetrization term count exceeds the configured budget."""

    def __init__(self, terms, budget):
        self.terms = terms
        self.budget = budget
        super().__init__(
            f"shape needs {terms} symmetrization terms, over the budget of {budget}; "
            f"raise --term-budget to attempt it anyway"
        )


class ParseError(CsmflagError):
    pass
