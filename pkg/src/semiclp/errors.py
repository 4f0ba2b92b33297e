"""Exception hierarchy shared by all engine modules.

Every error that can surface through the CLI or the HTTP service carries a
stable ``code`` so callers can dispatch without string matching.
"""


class SemiclpError(Exception):
    code = "error"


class ParseError(SemiclpError):
    code = "parse-error"

    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"{line}:{column}: {message}")


class ValueNotInCarrier(SemiclpError):
    code = "value-not-in-carrier"

    def __init__(self, literal, semiring=None):
        self.literal = literal
        self.semiring = semiring
        where = f" of semiring '{semiring}'" if semiring else ""
        super().__init__(f"value {literal!r} is not in the carrier{where}")


class TableFormatError(SemiclpError):
    """Malformed or mathematically invalid table-semiring file."""

    code = "table-format-error"


class NotEnumerable(SemiclpError):
    code = "not-enumerable"


class NoGlb(SemiclpError):
    code = "no-glb"


class UniverseMismatch(SemiclpError):
    code = "universe-mismatch"


class NotPositiveProgram(SemiclpError):
    code = "not-positive-program"


class NotCompleteLattice(SemiclpError):
    code = "not-complete-lattice"


class NotPositivelyOrdered(SemiclpError):
    code = "not-positively-ordered"


class InconsistentPair(SemiclpError):
    code = "inconsistent-pair"


class IntervalTooLarge(SemiclpError):
    code = "interval-too-large"

    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f"interval holds {count} interpretations, cap is {cap}")


class SearchSpaceTooLarge(SemiclpError):
    code = "search-space-too-large"


class IterationCapExceeded(SemiclpError):
    code = "iteration-cap-exceeded"

    def __init__(self, cap, divergence_suspected=False):
        self.cap = cap
        self.divergence_suspected = divergence_suspected
        msg = f"no fixpoint within {cap} iterations"
        if divergence_suspected:
            msg += " (divergence suspected: a value increased strictly for 50 consecutive steps)"
        super().__init__(msg)


class NonAscendingChain(SemiclpError):
    """The Kleene chain dropped; the iterated operator is not monotone here."""

    code = "non-ascending-chain"
