# User-defined exceptions


class Error(Exception):
    """Base class for other exceptions"""
    pass


class ScalarParseError(Error, ValueError):
    """Raised when a scalar expression in `z` cannot be parsed"""

    def __init__(self, text: str, column: int, message: str = 'invalid scalar expression'):
        self.text = text
        self.column = column
        super().__init__(f'{message} at column {column}: {text!r}')


class ScalarDivisionError(Error, ZeroDivisionError):
    """Raised on division by (or inversion of) the zero scalar"""
    pass


class NotRootOfUnityError(Error, ValueError):
    """Raised when an operation needs a root of unity and gets something else"""
    pass


class SpaceMismatchError(Error, ValueError):
    """Raised when elements over different braided spaces are combined"""
    pass


class NotLyndonError(Error, ValueError):
    """Raised when a Lyndon word is required"""
    pass


class CutoffExceededError(Error):
    """Raised when a computation needs a degree above the basis cutoff"""

    def __init__(self, degree, cutoff: int):
        self.degree = degree
        self.cutoff = cutoff
        super().__init__(f'degree {degree} is beyond cutoff {cutoff}')


class ResourceLimitError(Error):
    """Raised when a degree block is too large to compute"""

    def __init__(self, degree, size: int, limit: int):
        self.degree = degree
        self.size = size
        self.limit = limit
        super().__init__(f'block {degree} has {size} candidate words, limit is {limit}')


class KernelMismatchError(Error):
    """Raised when the symmetrizer kernel and the pairing radical disagree"""

    def __init__(self, degree, word):
        self.degree = degree
        self.word = word
        super().__init__(f'symmetrizer and pairing kernels disagree in block {degree} at word {word}')


class NotFiniteTypeError(Error, ValueError):
    """Raised when a Cartan matrix is not of finite type"""
    pass


class UnknownHeightError(Error):
    """Raised when a census or bound needs a height that is unknown at cutoff"""
    pass


class ConfigError(Error, ValueError):
    """Raised for malformed job configs, with the position in the file"""

    def __init__(self, message: str, line: int = None, column: int = None):
        self.line = line
        self.column = column
        location = f' (line {line}, column {column})' if line is not None else ''
        super().__init__(message + location)


class CacheChecksumError(Error):
    """Raised when a cached snapshot does not match its checksum"""
    pass
