class PreprankError(Exception):
    """Base class for every error raised by this package."""


class BudgetExceededError(PreprankError):
    """An exhaustive enumeration would visit more than ``budget`` items."""

    def __init__(self, count: int, budget: int):
        self.count = count
        self.budget = budget
        super().__init__(f"enumeration needs {count} items, budget is {budget}; use sampled mode")


class QuiverParseError(PreprankError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class CycleError(PreprankError):
    def __init__(self, cycle: list[str]):
        self.cycle = cycle
        super().__init__("quiver has an oriented cycle: " + " -> ".join(cycle))


class ZeroWeightError(PreprankError):
    def __init__(self, label: str, which: str):
        self.label = label
        self.which = which
        super().__init__(f"weight {which}({label}) vanishes in the chosen field")


class ZeroComponentError(PreprankError):
    """A construction needs a nonzero graded component."""


class NotSurjectiveError(PreprankError):
    pass


class NotInjectiveError(PreprankError):
    pass


class ProfileError(PreprankError):
    """Dimension profile violates the stated inequalities."""
