"""Exception types shared across the package.

DataError covers malformed inputs and violated preconditions (CLI exit 2);
NumericalError covers solver and linear-algebra failures (CLI exit 3).
"""


class HdmError(Exception):
    pass


class DataError(HdmError, ValueError):
    pass


class NumericalError(HdmError, RuntimeError):
    pass
