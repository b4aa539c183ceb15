"""Exception hierarchy shared by every module of the package."""


class PLMorseError(Exception):
    """Base class for all errors raised by plmorse."""


class MalformedSimplexError(PLMorseError, ValueError):
    pass


class MissingSimplexError(PLMorseError, KeyError):
    pass


class InvalidLevelError(PLMorseError, ValueError):
    pass


class DimensionError(PLMorseError, ValueError):
    """The complex is not pure or has the wrong dimension for the request."""


class UnsupportedDimensionError(DimensionError):
    pass


class DegenerateConeError(PLMorseError, ValueError):
    pass


class SubcomplexError(PLMorseError, ValueError):
    pass


class NotAManifoldError(PLMorseError, ValueError):
    """A vertex link is not a sphere of the expected dimension."""


class NotASphereSubcomplexError(PLMorseError, ValueError):
    pass


class ParseError(PLMorseError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
