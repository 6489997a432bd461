"""Prolongation: growing a square along its disjoint transversals.

Given k pairwise disjoint transversals of an order-n square, each cell on
transversal i is overwritten with a new symbol n+i and its displaced symbol
moves out to the new row and column i; an order-k square on the new symbols
fills the corner.  The walkthrough below grows the 3x3 cyclic square to
order 5 and checks the count inequality that makes prolongation useful:
t(extended) >= t(corner) * t(base avoiding the family).
"""

from latsq import (
    LatinSquare,
    TransversalFamily,
    count_avoiding,
    count_transversals,
    enumerate_transversals,
    prolongation,
    square_with_transversal,
)
from latsq.serialize import square_to_text


def main() -> None:
    base = LatinSquare(((0, 1, 2), (1, 2, 0), (2, 0, 1)))
    family = TransversalFamily(((1, 2, 0), (2, 0, 1)), disjoint=True)
    corner = ((3, 4), (4, 3))

    print("base square:")
    print(square_to_text(base))
    for i, t in enumerate(family):
        cells = ", ".join(f"({r},{c})->{base[r, c]}" for r, c in t.cells())
        print(f"transversal {i}: {cells}")
    print()

    extended = prolongation(base, family, corner)
    print("order-5 prolongation (new symbols 3 and 4 replace the two transversals):")
    print(square_to_text(extended))

    lhs = count_transversals(extended).count
    t_corner = count_transversals(LatinSquare(((0, 1), (1, 0)))).count  # corner, relabeled down
    t_avoiding = count_avoiding(base, family).count
    print(f"t(extended) = {lhs} >= t(corner) * t(base; family) = {t_corner} * {t_avoiding}")
    print()

    print("an order-k square with a transversal exists for every k except 2:")
    for k in (1, 3, 4, 5, 6, 7, 8):
        sq = square_with_transversal(k)
        witness = next(enumerate_transversals(sq, limit=1))
        print(f"  k={k}: first transversal cols={witness.cols}")


if __name__ == "__main__":
    main()
