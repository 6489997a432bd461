"""Core domain types: latin squares, transversals, Steiner triple systems.

Symbols, row indices, and column indices are all 0-based integers.  Values
are immutable after construction and safe to share between threads.
Constructors validate eagerly, so downstream code may assume every invariant
holds: each row and column of a :class:`LatinSquare` is a permutation of
``0..n-1``, a :class:`Transversal` is a genuine diagonal, and a
:class:`SteinerTripleSystem` covers every point pair exactly once.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import (
    BadOrder,
    BadTriple,
    ColumnViolation,
    LengthMismatch,
    NotADiagonal,
    NotDisjoint,
    PairDoubled,
    PairUncovered,
    RowViolation,
    SizeMismatch,
    SymbolOutOfRange,
)

Cell = tuple[int, int]


class OrderedTriple(NamedTuple):
    """One cell of a latin square, written as (row, column, symbol)."""

    row: int
    col: int
    sym: int


def _check_latin(grid: tuple[tuple[int, ...], ...]) -> None:
    n = len(grid)
    if n == 0:
        raise SizeMismatch("a latin square needs at least one row")
    for r, row in enumerate(grid):
        if len(row) != n:
            raise SizeMismatch(f"row {r} has {len(row)} entries, expected {n}")
    for r, row in enumerate(grid):
        seen = set()
        for c, v in enumerate(row):
            if not 0 <= v < n:
                raise SymbolOutOfRange(v, n, where=f"({r}, {c})")
            if v in seen:
                raise RowViolation(r, v)
            seen.add(v)
    for c in range(n):
        seen = set()
        for r in range(n):
            v = grid[r][c]
            if v in seen:
                raise ColumnViolation(c, v)
            seen.add(v)


@dataclass(frozen=True)
class LatinSquare:
    """An order-n array over symbols 0..n-1, each once per row and column.

    ``grid[r][c]`` is the symbol in row ``r``, column ``c``.  The grid is
    normalized to nested tuples and fully validated on construction.
    """

    grid: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        grid = tuple(tuple(operator.index(v) for v in row) for row in self.grid)
        object.__setattr__(self, "grid", grid)
        _check_latin(grid)

    @property
    def order(self) -> int:
        return len(self.grid)

    def __getitem__(self, cell: Cell) -> int:
        r, c = cell
        return self.grid[r][c]

    def row(self, r: int) -> tuple[int, ...]:
        return self.grid[r]

    def transpose(self) -> "LatinSquare":
        return LatinSquare(tuple(zip(*self.grid)))

    def relabel(self, perm: Sequence[int]) -> "LatinSquare":
        """Map every symbol s to perm[s]."""
        return LatinSquare(tuple(tuple(perm[v] for v in row) for row in self.grid))

    def triples(self) -> Iterator[OrderedTriple]:
        """The square as its set of ordered (row, column, symbol) triples."""
        for r, row in enumerate(self.grid):
            for c, s in enumerate(row):
                yield OrderedTriple(r, c, s)

    def is_idempotent(self) -> bool:
        return all(row[r] == r for r, row in enumerate(self.grid))

    def is_commutative(self) -> bool:
        g = self.grid
        n = len(g)
        return all(g[r][c] == g[c][r] for r in range(n) for c in range(r + 1, n))


def validate_latin_square(grid: Iterable[Iterable[int]]) -> LatinSquare:
    """Check a grid and wrap it as a :class:`LatinSquare`.

    Raises :class:`SymbolOutOfRange`, :class:`RowViolation`, or
    :class:`ColumnViolation` with the offending index; :class:`SizeMismatch`
    if the grid is not square.  The input is not modified.
    """
    return LatinSquare(tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class Transversal:
    """A diagonal stored as its row-to-column map.

    ``cols[r]`` is the column selected in row ``r``; construction checks that
    ``cols`` is a permutation.  Symbols are derived from a square on demand,
    so there is no redundant state to desynchronize; distinctness against a
    particular square is the job of :func:`is_transversal`.
    """

    cols: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(operator.index(c) for c in self.cols)
        object.__setattr__(self, "cols", cols)
        if sorted(cols) != list(range(len(cols))):
            raise NotADiagonal(f"cols {cols} is not a permutation of 0..{len(cols) - 1}")

    def __len__(self) -> int:
        return len(self.cols)

    def cells(self) -> tuple[Cell, ...]:
        return tuple(enumerate(self.cols))

    def symbols_on(self, square: LatinSquare) -> tuple[int, ...]:
        """The symbols this diagonal selects in ``square``, row by row."""
        if len(self.cols) != square.order:
            raise LengthMismatch(
                f"diagonal has {len(self.cols)} cells, square has order {square.order}"
            )
        return tuple(square.grid[r][c] for r, c in enumerate(self.cols))


DiagonalLike = Union[Transversal, Sequence[int]]


def is_transversal(square: LatinSquare, diag: DiagonalLike) -> bool:
    """True iff the diagonal selects n pairwise distinct symbols in ``square``.

    Accepts a :class:`Transversal` or a raw column sequence; a sequence that
    is not a permutation raises :class:`NotADiagonal`, and a length other
    than the square's order raises :class:`LengthMismatch`.
    """
    if not isinstance(diag, Transversal):
        diag = Transversal(tuple(diag))
    return len(set(diag.symbols_on(square))) == square.order


@dataclass(frozen=True)
class TransversalFamily:
    """An ordered list of transversals, optionally certified cell-disjoint.

    With ``disjoint=True`` the constructor verifies that no cell appears in
    two members and raises :class:`NotDisjoint` otherwise.
    """

    transversals: tuple[Transversal, ...]
    disjoint: bool = False

    def __post_init__(self):
        members = tuple(
            t if isinstance(t, Transversal) else Transversal(tuple(t))
            for t in self.transversals
        )
        object.__setattr__(self, "transversals", members)
        if self.disjoint:
            seen: set[Cell] = set()
            for i, t in enumerate(members):
                for cell in t.cells():
                    if cell in seen:
                        raise NotDisjoint(f"cell {cell} reappears in member {i}")
                    seen.add(cell)

    def __len__(self) -> int:
        return len(self.transversals)

    def __iter__(self) -> Iterator[Transversal]:
        return iter(self.transversals)

    def __getitem__(self, i: int) -> Transversal:
        return self.transversals[i]

    def cells(self) -> set[Cell]:
        """Union of the cells covered by all members."""
        return {cell for t in self.transversals for cell in t.cells()}


def _check_sts(n: int, triples: tuple[tuple[int, int, int], ...]) -> None:
    if n < 1:
        raise BadOrder("point count must be positive")
    if n % 6 not in (1, 3):
        raise BadOrder(f"no Steiner triple system on {n} points (need n = 1 or 3 mod 6)")
    covered: set[tuple[int, int]] = set()
    for t in triples:
        if len(t) != 3 or len(set(t)) != 3:
            raise BadTriple(f"{t} is not a 3-element subset")
        for x in t:
            if not 0 <= x < n:
                raise SymbolOutOfRange(x, n, where=f"triple {t}")
        for pair in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            if pair in covered:
                raise PairDoubled(pair)
            covered.add(pair)
    for a in range(n):
        for b in range(a + 1, n):
            if (a, b) not in covered:
                raise PairUncovered((a, b))


@dataclass(frozen=True)
class SteinerTripleSystem:
    """A point count plus triples covering every point pair exactly once.

    Triples are canonicalized (sorted within each triple, then sorted
    lexicographically across triples), so equality of systems is structural
    equality.  A valid system has exactly n(n-1)/6 triples.
    """

    points: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        n = operator.index(self.points)
        object.__setattr__(self, "points", n)
        canon = tuple(
            sorted(tuple(sorted(operator.index(x) for x in t)) for t in self.triples)
        )
        object.__setattr__(self, "triples", canon)
        _check_sts(n, canon)

    def __len__(self) -> int:
        return len(self.triples)


def validate_sts(points: int, triples: Iterable[Iterable[int]]) -> SteinerTripleSystem:
    """Canonicalize and check a triple list as a Steiner triple system.

    Raises :class:`BadOrder` unless points = 1 or 3 (mod 6), and
    :class:`PairUncovered` / :class:`PairDoubled` with the offending pair.
    """
    return SteinerTripleSystem(points, tuple(tuple(t) for t in triples))


def extract_subsquare(
    square: LatinSquare, rows: Iterable[int], cols: Iterable[int]
) -> tuple[tuple[tuple[int, ...], ...], bool]:
    """Extract the m x m sub-grid at the given row and column sets.

    Rows and columns are visited in ascending order.  Returns the sub-grid
    together with a flag telling whether it is a latin square on its own
    symbol set (m distinct symbols, each once per sub-row and sub-column).
    Requires 1 < m < order and equally many rows and columns.
    """
    rset = sorted(set(rows))
    cset = sorted(set(cols))
    m = len(rset)
    if len(cset) != m:
        raise SizeMismatch(f"{m} rows but {len(cset)} columns")
    if not 1 < m < square.order:
        raise SizeMismatch(
            f"subsquare order must be strictly between 1 and {square.order}, got {m}"
        )
    n = square.order
    for idx in (*rset, *cset):
        if not 0 <= idx < n:
            raise SymbolOutOfRange(idx, n, where="subsquare index set")
    sub = tuple(tuple(square.grid[r][c] for c in cset) for r in rset)
    symbols = {v for row in sub for v in row}
    is_latin = (
        len(symbols) == m
        and all(set(row) == symbols for row in sub)
        and all({sub[i][j] for i in range(m)} == symbols for j in range(m))
    )
    return sub, is_latin
