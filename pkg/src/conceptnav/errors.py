"""Shared exception types. In-world failures are StepOutcome values, not
exceptions; these signal misuse, bad configuration, or impossible requests."""


class ConceptNavError(Exception):
    pass


class ConfigurationError(ConceptNavError):
    pass


class PlacementError(ConceptNavError):
    """Scene generation could not place an object after bounded retries."""

    def __init__(self, class_name: str, message: str = ""):
        self.class_name = class_name
        super().__init__(message or f"cannot place instance of {class_name!r}")


class UnknownTargetError(ConceptNavError):
    """An action referenced an object id that does not exist."""


class UnknownConceptError(ConceptNavError):
    """An instruction used a word that is not a catalog class."""


class AmbiguousInstructionError(ConceptNavError):
    def __init__(self, text: str, candidates: list[str]):
        self.candidates = candidates
        super().__init__(
            f"instruction {text!r} matches multiple productions: {candidates}"
        )


class UnreachableGoalError(ConceptNavError):
    """Path extraction was asked for a goal with infinite arrival time."""


class UnachievableProgramError(ConceptNavError):
    """The privileged expert could not complete the program in this world."""
