from typing import Optional


class ProvcloseError(Exception):
    def __init__(self, message):
        # Call the base class constructor with the parameters it needs
        super().__init__(message)
        self.message = message


class WordSyntaxError(ProvcloseError):
    """Raised when a word does not conform to the word grammar."""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f'{message} (at position {position})'
        super().__init__(message)
        self.position = position


class RankError(ProvcloseError):
    pass


class NoRootError(ProvcloseError):
    pass


class PrimeSetError(ProvcloseError):
    pass


class DescriptorSyntaxError(ProvcloseError):
    pass


class NotInKError(ProvcloseError):
    """Raised when a word is not in the verbal subgroup K_n for the given prime."""

    def __init__(self, message: str, coordinate: int, value: int):
        super().__init__(message)
        self.coordinate = coordinate
        self.value = value


class VarietyError(ProvcloseError):
    pass


class UnsupportedCheckError(ProvcloseError):
    pass


class NoClosureFormulaError(ProvcloseError):
    pass


class EnumerationCapError(ProvcloseError):
    pass


class CatalogError(ProvcloseError):
    pass


class GroupLawError(ProvcloseError):
    pass


# Errors caused by malformed input rather than by the mathematics
SYNTAX_ERRORS = (WordSyntaxError, RankError, PrimeSetError, DescriptorSyntaxError, CatalogError)
