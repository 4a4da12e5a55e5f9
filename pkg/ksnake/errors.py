# -*- coding: utf-8 -*-
"""Exceptions raised while building, splicing and reading snakes."""


class SnakeError(Exception):
    """Base class for every error raised by the package."""

    def __init__(self, message: str):
        self.message = message
        super(SnakeError, self).__init__(self.message)


class TransitionBoundsError(SnakeError, IndexError):
    def __init__(self, index: int, length: int):
        super(TransitionBoundsError, self).__init__(
            "Transition t_{} is out of range for permutations of length {} (expected 2 <= i <= {}).".format(
                index, length, length
            )
        )


class InvalidPermutationError(SnakeError, ValueError):
    def __init__(self, entries):
        super(InvalidPermutationError, self).__init__(
            "{} is not a permutation of 1..{}.".format(list(entries), len(entries))
        )


class LengthMismatchError(SnakeError, ValueError):
    def __init__(self, first: int, second: int):
        super(LengthMismatchError, self).__init__(
            "Permutations have different lengths ({} and {}).".format(first, second)
        )


class ParityError(SnakeError, ValueError):
    def __init__(self, entries):
        super(ParityError, self).__init__("{} is an odd permutation.".format(list(entries)))


class InvalidLabelError(SnakeError, ValueError):
    def __init__(self, label, length: int):
        super(InvalidLabelError, self).__init__(
            "{} is not a class label of permutations of length {}.".format(label, length)
        )


class InvalidLengthError(SnakeError, ValueError):
    def __init__(self, length: int):
        super(InvalidLengthError, self).__init__(
            "Snake codewords need an odd length of at least 5, got {}.".format(length)
        )


class ConstructionOrderError(SnakeError):
    def __init__(self, edge, present: int):
        super(ConstructionOrderError, self).__init__(
            "Edge {} meets {} classes already merged into the chain, expected exactly 1.".format(edge, present)
        )


class SplicePointError(SnakeError):
    def __init__(self, tail, expected, found):
        super(SplicePointError, self).__init__(
            "Cannot splice after {}: expected successor {}, found {}.".format(list(tail), list(expected), found)
        )


class NotInAnyChainError(SnakeError, KeyError):
    def __init__(self, entries):
        super(NotInAnyChainError, self).__init__("{} does not belong to any chain.".format(list(entries)))

    def __str__(self):
        return self.message


class SignRangeError(SnakeError, ValueError):
    def __init__(self, sign: int, length: int):
        super(SignRangeError, self).__init__(
            "Connection sign M[{}] is out of range for length {} (expected 3 <= x <= {}).".format(
                sign, length, length
            )
        )


class ConnectionFormulaError(SnakeError):
    def __init__(self, mismatches: list[str]):
        shown = "; ".join(mismatches[:5])
        super(ConnectionFormulaError, self).__init__(
            "{} connection endpoints disagree with chain tracing: {}".format(len(mismatches), shown)
        )


class SpanningSelectionError(SnakeError):
    pass


class AssemblyError(SnakeError):
    pass


class InvalidEmbeddingError(SnakeError, ValueError):
    pass


class InapplicableRewriteError(SnakeError):
    def __init__(self, pivot, reason: str):
        super(InapplicableRewriteError, self).__init__(
            "Sew rewrite at {} is not applicable: {}.".format(list(pivot), reason)
        )


class InvalidSiteError(SnakeError):
    pass


class ConjectureUnresolvedError(SnakeError):
    """Raised when the extended search ends without a snake; carries the search report."""

    def __init__(self, report):
        self.report = report
        super(ConjectureUnresolvedError, self).__init__(
            "No extended snake found for S_{}: {}.".format(report.length, report.reason)
        )


class SnakeFileError(SnakeError, ValueError):
    def __init__(self, path, reason: str):
        super(SnakeFileError, self).__init__("Cannot read snake file {}: {}.".format(path, reason))
