"""Squares, diagonals, transversals: the basic vocabulary.

A latin square of order n holds each of n symbols once per row and column.
A diagonal picks one cell per row and per column; it is a transversal when
the n selected symbols are pairwise distinct.  This script validates a few
squares, tests diagonals against them, and counts transversals two ways:
with the search engine and with the brute-force oracle that simply tries
all n! diagonals.
"""

from latsq import (
    Transversal,
    brute_force_count,
    count_transversals,
    cyclic_square,
    enumerate_transversals,
    extract_subsquare,
    is_transversal,
    validate_latin_square,
)
from latsq.serialize import square_to_text


def main() -> None:
    square = validate_latin_square([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    print("A validated order-3 square (the cyclic group table):")
    print(square_to_text(square))

    main_diag = Transversal((0, 1, 2))
    broken = Transversal((1, 2, 0))
    print(f"main diagonal symbols:  {main_diag.symbols_on(square)}"
          f"  -> transversal? {is_transversal(square, main_diag)}")
    print(f"broken diagonal symbols: {broken.symbols_on(square)}"
          f"  -> transversal? {is_transversal(square, broken)}")
    print()

    print("All transversals of the order-3 square, lexicographically:")
    for t in enumerate_transversals(square):
        print(f"  cols={t.cols}  symbols={t.symbols_on(square)}")
    print()

    print("Count vs. brute force over cyclic squares (even orders have none):")
    for n in range(1, 8):
        sq = cyclic_square(n)
        fast = count_transversals(sq)
        slow = brute_force_count(sq)
        marker = "ok" if fast.count == slow.count else "MISMATCH"
        print(f"  order {n}: engine={fast.count:>4}  oracle={slow.count:>4}  [{marker}]")
    print()

    sub, is_latin = extract_subsquare(cyclic_square(4), {0, 2}, {0, 2})
    print(f"rows/cols {{0, 2}} of the order-4 cyclic square: {sub}")
    print(f"an intercalate (2x2 latin subsquare on its own symbols)? {is_latin}")


if __name__ == "__main__":
    main()
