from typing import Optional


class LadderLabError(ValueError):
    """Base class for all library errors."""


class ModelError(LadderLabError):
    pass


class ParseError(ModelError):
    """Syntax error in a line-oriented model or ladder file."""

    def __init__(self, message: str, line: Optional[int] = None, source: str = "<input>"):
        self.message = message
        self.line = line
        self.source = source
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is None:
            return f"{self.source}: {self.message}"
        return f"{self.source}:{self.line}: {self.message}"


class LadderError(LadderLabError):
    pass


class FamilyError(LadderLabError):
    pass
