"""Structured exceptions raised by constructors and operations.

Validation is eager throughout the package: a constructor either returns a
fully checked value or raises one of these.
"""

from __future__ import annotations


class LatsqError(Exception):
    """Base class for every validation and domain error in this package."""


class SymbolOutOfRange(LatsqError):
    """An entry is not in the symbol range 0..n-1."""

    def __init__(self, value: int, order: int, where: str = ""):
        at = f" at {where}" if where else ""
        super().__init__(f"symbol {value}{at} is outside 0..{order - 1}")
        self.value = value
        self.order = order


class RowViolation(LatsqError):
    """A symbol occurs twice in one row."""

    def __init__(self, row: int, symbol: int):
        super().__init__(f"symbol {symbol} occurs twice in row {row}")
        self.row = row
        self.symbol = symbol


class ColumnViolation(LatsqError):
    """A symbol occurs twice in one column."""

    def __init__(self, col: int, symbol: int):
        super().__init__(f"symbol {symbol} occurs twice in column {col}")
        self.col = col
        self.symbol = symbol


class SizeMismatch(LatsqError):
    """A grid is not square, or a subsquare request is dimensionally wrong."""


class BadOrder(LatsqError):
    """The order is outside the domain of the operation."""


class BadTriple(LatsqError):
    """A Steiner triple is not a 3-element subset."""


class PairUncovered(LatsqError):
    """A point pair is covered by no triple."""

    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"pair {pair} is covered by no triple")
        self.pair = pair


class PairDoubled(LatsqError):
    """A point pair is covered by more than one triple."""

    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"pair {pair} is covered by more than one triple")
        self.pair = pair


class LengthMismatch(LatsqError):
    """A diagonal's length differs from the square's order."""


class NotADiagonal(LatsqError):
    """A column selection is not a permutation of 0..n-1."""


class EvenOrder(LatsqError):
    """The construction requires an odd order."""


class NotIdempotent(LatsqError):
    """The square is not idempotent (some cell (x, x) != x)."""


class NotCommutative(LatsqError):
    """The square is not commutative (some cell (x, y) != (y, x))."""


class NotATransversal(LatsqError):
    """A claimed transversal fails against the given square."""


class NotDisjoint(LatsqError):
    """Two family members share a cell."""


class BadSubsquareOrder(LatsqError):
    """The prolongation subsquare does not have order k."""


class BadSubsquareAlphabet(LatsqError):
    """The prolongation subsquare is not on the alphabet {n, ..., n+k-1}."""


class OrderTooLarge(LatsqError):
    """The order exceeds the engine's configured guard."""


class OrderTwo(LatsqError):
    """No latin square of order 2 has a transversal."""


class POutOfRange(LatsqError):
    """The class size p is outside 0 <= 3p <= n."""


class PTooLarge(LatsqError):
    """No partial parallel class of the requested size was found."""
