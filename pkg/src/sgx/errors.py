"""Exception types shared across the toolkit."""


class SgxError(Exception):
    """Base class for all toolkit errors."""


class OutOfRange(SgxError):
    """A table entry, index or size is outside its allowed range."""


class AssociativityViolation(SgxError):
    def __init__(self, x: int, y: int, z: int):
        super().__init__(f"associativity fails at triple ({x}, {y}, {z})")
        self.triple = (x, y, z)


class EmptyGenerators(SgxError):
    """Subsemigroup closure needs at least one generator."""


class CompatibilityViolation(SgxError):
    def __init__(self, a: int, s: int, s2: int, side: str):
        super().__init__(f"{side} act compatibility fails at (a={a}, s={s}, s'={s2})")
        self.witness = (a, s, s2)


class EquivarianceViolation(SgxError):
    def __init__(self, a: int, s: int):
        super().__init__(f"act morphism is not equivariant at (a={a}, s={s})")
        self.witness = (a, s)


class MultiplicativityViolation(SgxError):
    def __init__(self, x: int, y: int):
        super().__init__(f"map is not multiplicative at (x={x}, y={y})")
        self.witness = (x, y)


class SearchSpaceTooLarge(SgxError):
    """An exhaustive enumeration would exceed the candidate guard."""


class SemigroupMismatch(SgxError):
    """Two structures that must share a semigroup do not."""


class NotBalanced(SgxError):
    def __init__(self, a: int, s: int, b: int):
        super().__init__(f"map is not balanced at (a={a}, s={s}, b={b})")
        self.witness = (a, s, b)


class BiactLawViolation(SgxError):
    """A pairing table fails one of the biact morphism laws."""


class WellDefinednessViolation(SgxError):
    """A quotient-level operation depends on the chosen representative."""


class PreconditionFailed(SgxError):
    """A stated hypothesis of the requested check does not hold."""


class WitnessNotFound(SgxError):
    """A required witness element does not exist."""


class ContextInvalid(SgxError):
    """The supplied Morita context fails verification."""


class NotFactorizable(SgxError):
    """The construction requires a factorizable base semigroup."""


class CoverMissing(SgxError):
    """The operation needs a previously built Rees cover."""


class OrderTooLarge(SgxError):
    """Requested order exceeds the enumeration cap."""


class TheoremViolation(SgxError):
    """A property that is guaranteed to hold was found false (carries a witness)."""


class ParseError(SgxError):
    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line
