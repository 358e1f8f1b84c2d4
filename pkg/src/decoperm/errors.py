"""Exception hierarchy shared by every module of the package."""


class DecoError(ValueError):
    """Base class for all input and validation errors."""


class EmptyInput(DecoError):
    def __init__(self, what: str = "sequence"):
        super().__init__(f"empty {what}")


class DuplicateValue(DecoError):
    def __init__(self, value: int, position: int):
        self.value = value
        self.position = position
        super().__init__(f"duplicate value {value} at position {position}")


class ValueOutOfRange(DecoError):
    def __init__(self, value: int, position: int, n: int):
        self.value = value
        self.position = position
        super().__init__(f"value {value} at position {position} is outside 1..{n}")


class EntryTooLarge(DecoError):
    def __init__(self, index: int, entry: int, bound: int):
        self.index = index
        self.entry = entry
        super().__init__(f"entry c_{index} = {entry} exceeds bound {bound}")


class InvalidCode(DecoError):
    def __init__(self, j: int, entry: int):
        self.j = j
        self.entry = entry
        super().__init__(f"code entry a_{j} = {entry} must lie in 0..{j - 1}")


class InvalidPolyomino(DecoError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid deco polyomino: " + "; ".join(self.violations))


class CapExceeded(DecoError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"n = {n} exceeds the exhaustive cap {cap}")


class ParseError(DecoError):
    def __init__(self, token: str, reason: str):
        self.token = token
        super().__init__(f"cannot parse {token!r}: {reason}")


class UnknownBijection(DecoError):
    def __init__(self, ident):
        self.ident = ident
        super().__init__(f"unknown bijection {ident!r}; expected 1..6")
