"""Exception hierarchy shared by every nucalc module."""


class NuError(Exception):
    """Base class for all nucalc errors."""


class ParseError(NuError):
    def __init__(self, message, line, column):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class NameClash(NuError):
    """Disjoint union of two name sets that share a name."""


# Typing errors: user errors, surfaced by the CLI with exit code 2.

class NuTypeError(NuError):
    pass


class UnboundVariable(NuTypeError):
    def __init__(self, ident):
        super().__init__(f"unbound variable {ident!r}")
        self.ident = ident


class UnknownName(NuTypeError):
    def __init__(self, name):
        super().__init__(f"name {name} is not in scope")
        self.name = name


class TypeMismatch(NuTypeError):
    def __init__(self, expected, found, location):
        super().__init__(f"expected {expected}, found {found} in `{location}`")
        self.expected = expected
        self.found = found
        self.location = location


class NotAFunction(NuTypeError):
    def __init__(self, found, location):
        super().__init__(f"applying a term of type {found} in `{location}`")
        self.found = found
        self.location = location


class HoleTypeMismatch(NuTypeError):
    pass


# Internal errors: the calculus is terminating, so these indicate bugs.

class InternalError(NuError):
    pass


class FuelExhausted(InternalError):
    pass


class Stuck(InternalError):
    pass


# Decision-procedure errors.

class NotFirstOrder(NuError):
    def __init__(self, ty):
        super().__init__(f"type {ty} is not first-order")
        self.type = ty


class NotSafe(NuError):
    """Normalization requested for a term that leaks names relative to its public set."""


class ExponentialBlowup(NuError):
    pass
