"""Exception hierarchy.

``DomainError`` subclasses signal mathematically invalid input (CLI exit code 1);
``ModelFormatError`` signals unreadable or schema-invalid files (exit code 2).
"""


class ResconicError(Exception):
    code = "ResconicError"

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class DomainError(ResconicError):
    code = "DomainError"


class ModelFormatError(ResconicError):
    code = "ModelFormatError"


class NotAFiberGraph(DomainError):
    code = "NotAFiberGraph"


class NegativeRank(DomainError):
    code = "NegativeRank"


class InvalidConfiguration(DomainError):
    code = "InvalidConfiguration"


class InconsistentProximity(DomainError):
    code = "InconsistentProximity"


class NegativeEdge(DomainError):
    code = "NegativeEdge"


class NotSquareZero(DomainError):
    code = "NotSquareZero"


class WrongAnticanonicalDegree(DomainError):
    code = "WrongAnticanonicalDegree"


class NotNefAgainstInventory(DomainError):
    code = "NotNefAgainstInventory"

    def __init__(self, message: str, curve: str | None = None):
        super().__init__(message)
        self.curve = curve

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["curve"] = self.curve
        return d


class NotAConicFiber(DomainError):
    code = "NotAConicFiber"


class BaseLocusNotContained(DomainError):
    code = "BaseLocusNotContained"
