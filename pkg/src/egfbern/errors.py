"""Exception hierarchy shared by every module of the package."""


class SeriesError(Exception):
    """Base class for precondition violations.

    ``code`` is the stable identifier printed by the command line tool.
    """

    code = "series-error"


class ZeroConstantTerm(SeriesError):
    code = "zero-constant-term"


class NonzeroConstantInner(SeriesError):
    code = "nonzero-constant-inner"


class NonzeroConstant(SeriesError):
    code = "nonzero-constant"


class NotInvertible(SeriesError):
    code = "not-invertible"


class OrderTooSmall(SeriesError):
    code = "order-too-small"


class ZeroPivot(SeriesError):
    code = "zero-pivot"


class PivotNotOne(SeriesError):
    code = "pivot-not-one"


class PochhammerZeroDenominator(SeriesError):
    code = "pochhammer-zero-denominator"

    def __init__(self, n, msg=None):
        self.n = n
        super().__init__(msg or f"Pochhammer denominator vanishes at n={n}")


class SizeExplosion(SeriesError):
    code = "size-explosion"


class ParseError(SeriesError):
    code = "parse-error"
