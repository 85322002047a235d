"""Exception hierarchy.

Every error carries an ``invariant`` name so the command line front end can
report which precondition or invariant was violated.
"""


class MukaiError(ValueError):
    invariant = "domain"


class DimensionError(MukaiError):
    invariant = "dimension"


class ParityError(MukaiError):
    invariant = "parity"


class SymmetryError(MukaiError):
    invariant = "symmetric_gram"


class NotDivisibleError(MukaiError):
    invariant = "divisibility"


class ZeroClassError(MukaiError):
    invariant = "nonzero_class"


class NegativeSquareError(MukaiError):
    invariant = "nonnegative_square"


class HypothesisError(MukaiError):
    """A geometric hypothesis the caller must assert was not asserted."""

    invariant = "geometric_hypothesis"


class EvenRankError(MukaiError):
    invariant = "odd_rank"


class NotExceptionalError(MukaiError):
    invariant = "exceptional"


class NotAmpleError(MukaiError):
    invariant = "ample_seed"


class NotGloballyPresentableError(MukaiError):
    invariant = "positive_euler_characteristic"


class BudgetExceededError(MukaiError):
    invariant = "k_budget"


class NotFoundError(MukaiError):
    invariant = "search_bound"


class TestSetError(MukaiError):
    invariant = "curve_test_set"

    __test__ = False
