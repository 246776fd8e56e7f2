"""Exception hierarchy shared by all mthull modules."""


class MthullError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(MthullError):
    pass


class NotIrreducible(MthullError):
    pass


class BadDegree(MthullError):
    pass


class DivisionByZero(MthullError):
    pass


class ZeroElement(MthullError):
    pass


class BothZero(MthullError):
    pass


class DegreeTooLarge(MthullError):
    pass


class ShapeMismatch(MthullError):
    pass


class NotSquare(MthullError):
    pass


class RankDeficient(MthullError):
    pass


class SingularDivisor(MthullError):
    pass


class NotAGpm(MthullError):
    pass


class IncompatibleCodes(MthullError):
    pass


class AssumptionViolated(MthullError):
    pass


class BudgetExceeded(MthullError):
    def __init__(self, required, budget):
        super().__init__(
            f"exhaustive enumeration needs {required} codewords, budget is {budget}"
        )
        self.required = required
        self.budget = budget


class ZeroCodeError(MthullError):
    pass


class SpecParseError(MthullError):
    pass
