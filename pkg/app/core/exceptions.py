class AlgebraError(Exception):
    """Base class for every failure raised by the algebra engines."""


class GroupOrderOverflow(AlgebraError):
    """Element enumeration exceeded the configured order cap."""

    def __init__(self, cap: int):
        super().__init__(f"group enumeration exceeded {cap} elements")
        self.cap = cap


class CosetLimitExceeded(AlgebraError):
    """Coset enumeration hit its cap; the index question stays open."""

    def __init__(self, cap: int):
        super().__init__(f"coset enumeration exceeded {cap} cosets (inconclusive)")
        self.cap = cap


class PresentationSyntaxError(AlgebraError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownGeneratorError(AlgebraError):
    def __init__(self, name: str):
        super().__init__(f"unknown generator {name!r}")
        self.name = name


class PreconditionError(AlgebraError):
    pass


class NormalityError(AlgebraError):
    pass


class MembershipError(AlgebraError):
    pass


class ConsistencyError(AlgebraError):
    """An internal cross-check failed: this points at an engine bug."""


class TheoremViolation(AlgebraError):
    pass


class DatumInvalid(AlgebraError):
    def __init__(self, axioms: list[str]):
        super().__init__("Mackey datum violates: " + ", ".join(axioms))
        self.axioms = axioms


class LatticeDecompositionError(AlgebraError):
    pass


class SpecFileError(AlgebraError):
    pass


class UnknownCatalogError(AlgebraError):
    def __init__(self, name: str):
        super().__init__(f"unknown catalog {name!r}")
        self.name = name
