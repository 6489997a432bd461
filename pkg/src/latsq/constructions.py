"""Explicit constructions: cyclic and half-sum squares, Bose triple systems,
Steiner squares, transversal lifting, and prolongation.

The chain half_sum_square -> bose_sts -> steiner_square -> lift_transversal
turns one idempotent commutative square of odd order n into a Steiner square
of order 3n together with lifted transversals, and :func:`prolongation`
extends any square with k disjoint transversals to order n+k.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence, Union

from . import engine
from .core import (
    LatinSquare,
    SteinerTripleSystem,
    Transversal,
    TransversalFamily,
    is_transversal,
)
from .errors import (
    BadOrder,
    BadSubsquareAlphabet,
    BadSubsquareOrder,
    EvenOrder,
    LatsqError,
    NotATransversal,
    NotCommutative,
    NotDisjoint,
    NotIdempotent,
    OrderTwo,
)


class BosePoint(NamedTuple):
    """A point (x, i) of a Bose system: base symbol x in a layer i in {0,1,2}.

    Points are encoded layer-major, so the three layers are contiguous index
    blocks and decoding is a div/mod pair.
    """

    base: int
    layer: int

    def encode(self, n: int) -> int:
        return self.base + n * self.layer

    @classmethod
    def decode(cls, index: int, n: int) -> "BosePoint":
        return cls(index % n, index // n)


def cyclic_square(n: int) -> LatinSquare:
    """Cayley table of the cyclic group of order n: cell (i, j) holds (i+j) mod n."""
    if n < 1:
        raise BadOrder(f"order must be positive, got {n}")
    return LatinSquare(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def half_sum_square(n: int) -> LatinSquare:
    """Idempotent commutative square of odd order n.

    Cell (x, y) holds the half of x+y mod n, i.e. (x+y)(n+1)/2 mod n; the
    result is the unique quasigroup with q(x,y) + q(x,y) = x + y mod n.
    """
    if n < 1:
        raise BadOrder(f"order must be positive, got {n}")
    if n % 2 == 0:
        raise EvenOrder(f"half-sum square requires odd order, got {n}")
    h = (n + 1) // 2  # the inverse of 2 mod n
    return LatinSquare(
        tuple(tuple(((x + y) * h) % n for y in range(n)) for x in range(n))
    )


def shifted_diagonal_family(n: int) -> TransversalFamily:
    """The n disjoint transversals of half_sum_square(n).

    Member c selects column (x + c) mod n in row x; the n members are
    pairwise cell-disjoint and cover all n^2 cells.
    """
    if n < 1:
        raise BadOrder(f"order must be positive, got {n}")
    if n % 2 == 0:
        raise EvenOrder(f"shifted diagonals require odd order, got {n}")
    members = tuple(
        Transversal(tuple((x + c) % n for x in range(n))) for c in range(n)
    )
    return TransversalFamily(members, disjoint=True)


def bose_sts(square: LatinSquare) -> SteinerTripleSystem:
    """Steiner triple system of order 3n from an idempotent commutative square.

    Takes three copies of the symbol set as layers.  Each unordered pair
    x < y inside a layer i forms a triple with square[x][y] in layer i+1
    (mod 3); each base symbol additionally spans the three layers as a spine
    triple.  Pairs x = y are excluded: they would produce degenerate triples.
    """
    if not square.is_idempotent():
        raise NotIdempotent("Bose construction needs an idempotent square")
    if not square.is_commutative():
        raise NotCommutative("Bose construction needs a commutative square")
    n = square.order
    triples: list[tuple[int, int, int]] = [(x, x + n, x + 2 * n) for x in range(n)]
    for i in range(3):
        j = ((i + 1) % 3) * n
        for x in range(n):
            for y in range(x + 1, n):
                triples.append((x + i * n, y + i * n, square.grid[x][y] + j))
    return SteinerTripleSystem(3 * n, tuple(triples))


def steiner_square(sts: SteinerTripleSystem) -> LatinSquare:
    """The latin square of the Steiner quasigroup of ``sts``.

    Cell (a, a) holds a; cell (a, b) for a != b holds the third point of the
    unique triple through {a, b}.  STS validity guarantees every cell is
    filled exactly once, and the result is idempotent and commutative.
    """
    n = sts.points
    grid = [[-1] * n for _ in range(n)]
    for a in range(n):
        grid[a][a] = a
    for a, b, c in sts.triples:
        grid[a][b] = grid[b][a] = c
        grid[a][c] = grid[c][a] = b
        grid[b][c] = grid[c][b] = a
    return LatinSquare(tuple(tuple(row) for row in grid))


def lift_transversal(square: LatinSquare, t: Transversal) -> Transversal:
    """Lift a transversal of ``square`` to one of steiner_square(bose_sts(square)).

    A non-idempotent cell (a, b) with symbol c contributes the three cells
    ((a,i), (b,i)) holding (c, i+1 mod 3); an idempotent cell (a, a)
    contributes ((a,0),(a,1)), ((a,1),(a,2)), ((a,2),(a,0)).  Layers are
    taken in order 0, 1, 2 so the output is deterministic.
    """
    if not square.is_idempotent():
        raise NotIdempotent("lifting is defined over an idempotent square")
    if not square.is_commutative():
        raise NotCommutative("lifting is defined over a commutative square")
    if not is_transversal(square, t):
        raise NotATransversal("input diagonal is not a transversal of the square")
    n = square.order
    cols3 = [0] * (3 * n)
    for a in range(n):
        b = t.cols[a]
        if a == b:
            cols3[a] = a + n
            cols3[a + n] = a + 2 * n
            cols3[a + 2 * n] = a
        else:
            for i in range(3):
                cols3[a + i * n] = b + i * n
    return Transversal(tuple(cols3))


GridLike = Sequence[Sequence[int]]


def _subsquare_grid(
    subsquare: Union[LatinSquare, GridLike], n: int, k: int
) -> tuple[tuple[int, ...], ...]:
    """Normalize the corner square onto the alphabet {n, ..., n+k-1}.

    Accepts a standard LatinSquare (symbols 0..k-1), which is shifted up by
    n, or a raw grid written on either alphabet; the two alphabets never
    overlap for n >= 1, so there is no ambiguity.
    """
    if isinstance(subsquare, LatinSquare):
        if subsquare.order != k:
            raise BadSubsquareOrder(f"subsquare has order {subsquare.order}, need {k}")
        return tuple(tuple(v + n for v in row) for row in subsquare.grid)
    rows = tuple(tuple(v for v in row) for row in subsquare)
    if len(rows) != k or any(len(row) != k for row in rows):
        raise BadSubsquareOrder(f"subsquare grid is not {k} x {k}")
    symbols = {v for row in rows for v in row}
    if symbols == set(range(k)):
        return tuple(tuple(LatinSquare(rows).grid[r][c] + n for c in range(k)) for r in range(k))
    if symbols != set(range(n, n + k)):
        raise BadSubsquareAlphabet(
            f"subsquare symbols must be exactly {{{n}..{n + k - 1}}} (or 0..{k - 1})"
        )
    # Shift down to validate latin-ness, keep the shifted-up original.
    LatinSquare(tuple(tuple(v - n for v in row) for row in rows))
    return rows


def prolongation(
    square: LatinSquare,
    family: TransversalFamily,
    subsquare: Optional[Union[LatinSquare, GridLike]] = None,
) -> LatinSquare:
    """Extend a square with k disjoint transversals to order n+k.

    Cells off the family are copied.  A cell (a, b) holding c on member i is
    replaced by the new symbol n+i, and the displaced symbol c reappears at
    (a, n+i) and (n+i, b).  The k x k corner block holds ``subsquare`` on the
    alphabet {n, ..., n+k-1}.  With an empty family the square is returned
    unchanged.
    """
    if not family.disjoint:
        raise NotDisjoint("family must be certified pairwise disjoint")
    n = square.order
    k = len(family)
    for i, t in enumerate(family):
        if len(t.cols) != n or not is_transversal(square, t):
            raise NotATransversal(f"family member {i} is not a transversal of the square")
    if k == 0:
        if subsquare is not None:
            raise BadSubsquareOrder("family is empty, no subsquare belongs here")
        return square
    if subsquare is None:
        raise BadSubsquareOrder(f"an order-{k} subsquare is required")
    corner = _subsquare_grid(subsquare, n, k)

    m = n + k
    grid = [[-1] * m for _ in range(m)]
    for r in range(n):
        for c in range(n):
            grid[r][c] = square.grid[r][c]
    for i, t in enumerate(family):
        for a, b in t.cells():
            c = square.grid[a][b]
            grid[a][b] = n + i
            grid[a][n + i] = c
            grid[n + i][b] = c
    for r in range(k):
        for c in range(k):
            grid[n + r][n + c] = corner[r][c]
    return LatinSquare(tuple(tuple(row) for row in grid))


def square_with_transversal(k: int) -> LatinSquare:
    """An order-k latin square with at least one transversal, for k != 2.

    Odd k uses the cyclic square (its main diagonal is a transversal).  Even
    k >= 4 prolongs half_sum_square(k-1) along one shifted diagonal with the
    1 x 1 corner [[k-1]].  The result is certified by the engine before it
    is returned.
    """
    if k < 1:
        raise BadOrder(f"order must be positive, got {k}")
    if k == 2:
        raise OrderTwo("no latin square of order 2 has a transversal")
    if k % 2 == 1:
        result = cyclic_square(k)
    else:
        base = half_sum_square(k - 1)
        first = shifted_diagonal_family(k - 1)[0]
        result = prolongation(
            base, TransversalFamily((first,), disjoint=True), ((k - 1,),)
        )
    witness = next(engine.enumerate_transversals(result, limit=1), None)
    if witness is None:  # unreachable for a correct construction
        raise LatsqError(f"no transversal found in the order-{k} construction")
    return result


# Reference systems for the orders the verification commands work at.  Orders
# 7 and 13 come from classical cyclic difference families; every order 3m
# with m odd comes out of the Bose construction.
_DIFFERENCE_FAMILIES = {
    7: ((0, 1, 3),),
    13: ((0, 1, 4), (0, 2, 7)),
}


def known_sts(n: int) -> SteinerTripleSystem:
    """A fixed, validated Steiner triple system of order n.

    Supports n = 1, 7, 13, and every n = 3m with m odd.  Other valid STS
    orders (19, 25, ...) have no reference system here and raise BadOrder.
    """
    if n == 1:
        return SteinerTripleSystem(1, ())
    if n in _DIFFERENCE_FAMILIES:
        triples = tuple(
            tuple((x + shift) % n for x in base)
            for base in _DIFFERENCE_FAMILIES[n]
            for shift in range(n)
        )
        return SteinerTripleSystem(n, triples)
    if n % 3 == 0 and (n // 3) % 2 == 1:
        return bose_sts(half_sum_square(n // 3))
    raise BadOrder(f"no reference Steiner triple system of order {n} is built in")
