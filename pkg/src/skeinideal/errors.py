"""Exception types shared across the library.

Every error raised deliberately by this package derives from
:class:`SkeinError`, so callers can catch the library's failures without
swallowing genuine bugs (``TypeError`` and friends stay uncaught).
"""

from __future__ import annotations

__all__ = [
    "SkeinError",
    "NotDivisible",
    "NotInvertible",
    "ZeroPolynomial",
    "WidthMismatch",
    "NotClosed",
    "EmptyLink",
    "Inadmissible",
    "TruncationViolation",
    "SingularSystem",
    "WrongArity",
    "MultiComponent",
    "TooFewStrands",
    "ParseError",
    "JonesMismatch",
    "AllZero",
]


class SkeinError(Exception):
    """Base class for all library errors."""


class NotDivisible(SkeinError):
    """Exact division was requested but the divisor does not divide."""


class NotInvertible(SkeinError):
    """A residue has no modular inverse (gcd with the modulus exceeds 1)."""


class ZeroPolynomial(SkeinError):
    """The zero polynomial was passed where a nonzero one is required."""


class WidthMismatch(SkeinError):
    """Two diagram elements were composed along boundaries of unequal size."""


class NotClosed(SkeinError):
    """A slice word does not start and end on zero strands."""


class EmptyLink(SkeinError):
    """The empty diagram has no reduced bracket (nothing to divide by delta)."""


class Inadmissible(SkeinError):
    """A color triple violates the triangle inequality or parity condition."""


class TruncationViolation(SkeinError):
    """A generator beyond the meridian-width bound came out nonzero.

    This never happens for a correctly constructed presentation; seeing it
    means the width bookkeeping or a diagram convention is wrong.
    """


class SingularSystem(SkeinError):
    """The graph-coefficient linear system was singular or inconsistent."""


class WrongArity(SkeinError):
    """A tangle operation needs a specific endpoint count (e.g. 4)."""


class MultiComponent(SkeinError):
    """A theorem hypothesis requires a single-component partial closure."""


class TooFewStrands(SkeinError):
    """The census search excludes braids on fewer than three strands."""


class ParseError(SkeinError):
    """Malformed textual input.

    Carries ``line`` (1-based) when the input is line-oriented.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class JonesMismatch(SkeinError):
    """A census entry's computed Jones polynomial disagrees with its
    expected-value column."""


class AllZero(SkeinError):
    """Every supplied ideal generator is zero."""
