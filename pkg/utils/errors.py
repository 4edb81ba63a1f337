"""Exception hierarchy shared by the services, the CLI and the JSON API.

Every error carries the process exit code the CLI uses for it:
2 for bad input, 3 when a generation or closure budget runs out.
"""


class QuasiwordsError(Exception):
    """Base class for every error raised by the library."""

    exit_code = 2
    http_status = 400


class InputError(QuasiwordsError, ValueError):
    """The caller supplied something malformed."""


class BudgetError(QuasiwordsError):
    """A configured resource limit was reached before an answer was found."""

    exit_code = 3
    http_status = 422


class InvalidCharacter(InputError):
    def __init__(self, position: int, char: str = ''):
        self.position = position
        self.char = char
        super().__init__(f"Invalid character {char!r} at position {position} (expected 'a' or 'b')")


class EmptyPattern(InputError):
    def __init__(self):
        super().__init__("Pattern must be nonempty")


class EmptyInput(InputError):
    def __init__(self, what: str = 'word'):
        super().__init__(f"Expected a nonempty {what}")


class NotProlongable(InputError):
    def __init__(self, seed: str, image: str):
        self.seed = seed
        self.image = image
        super().__init__(
            f"Morphism is not prolongable on {seed!r}: image {image!r} must start with "
            f"{seed!r} and be longer than one letter"
        )


class DirectiveViolation(InputError):
    def __init__(self, violation):
        self.violation = violation
        super().__init__(f"Invalid directive sequence at block {violation.block_index}: {violation.message}")


class TooFewBs(InputError):
    def __init__(self, count: int):
        self.count = count
        super().__init__(f"Shape analysis needs at least two b's in the prefix, found {count}")


class StreamSpecError(InputError):
    def __init__(self, text: str, reason: str):
        self.text = text
        self.reason = reason
        super().__init__(f"Cannot parse stream spec {text!r}: {reason}")


class DirectiveSyntaxError(InputError):
    def __init__(self, text: str, reason: str):
        self.text = text
        self.reason = reason
        super().__init__(f"Cannot parse directive {text!r}: {reason}")


class GeneratorParseError(InputError):
    def __init__(self, token: str):
        self.token = token
        super().__init__(f"Unknown generator {token!r} (expected one of E, La, Lb, Ra, Rb)")


class UnknownSuite(InputError):
    def __init__(self, name: str, known):
        self.name = name
        super().__init__(f"Unknown verify suite {name!r}; choose from: {', '.join(known)}, all")


class GenerationStalled(BudgetError):
    def __init__(self, budget: int, reached: int, wanted: int):
        self.budget = budget
        self.reached = reached
        self.wanted = wanted
        super().__init__(
            f"Stable prefix reached length {reached} of {wanted} within the budget of {budget} block pairs"
        )


class ClosureCapExceeded(BudgetError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"Relation closure exceeded the cap of {cap} generator words")
