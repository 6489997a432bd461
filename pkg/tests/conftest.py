"""Shared fixtures: the worked 5x5 prolongation instance, reference triple
systems built independently of the library constructors, and a seeded random
latin square generator used by the oracle-equivalence suites."""

from __future__ import annotations

import random

import pytest

from latsq import LatinSquare, Transversal, TransversalFamily, validate_latin_square

# The 3x3 cyclic square with two of its transversals and the order-5 square
# they prolong to.  This instance is the fixed test vector for prolongation;
# tests compare against it bit-exact.
EXAMPLE_SQUARE = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
EXAMPLE_T0 = (1, 2, 0)
EXAMPLE_T1 = (2, 0, 1)
EXAMPLE_CORNER = ((3, 4), (4, 3))
EXAMPLE_PROLONGED = (
    (0, 3, 4, 1, 2),
    (4, 2, 3, 0, 1),
    (3, 4, 1, 2, 0),
    (2, 1, 0, 3, 4),
    (1, 0, 2, 4, 3),
)

# Fano plane as difference-set shifts of {0, 1, 3} mod 7.
FANO_TRIPLES = (
    (0, 1, 3),
    (1, 2, 4),
    (2, 3, 5),
    (3, 4, 6),
    (4, 5, 0),
    (5, 6, 1),
    (6, 0, 2),
)


def random_latin_square(n: int, rng: random.Random) -> LatinSquare:
    """A uniformly seeded (not uniformly distributed) random latin square.

    Cell-by-cell backtracking with shuffled candidate symbols; deterministic
    for a given rng state.
    """
    grid = [[-1] * n for _ in range(n)]
    row_used = [set() for _ in range(n)]
    col_used = [set() for _ in range(n)]

    def fill(idx: int) -> bool:
        if idx == n * n:
            return True
        r, c = divmod(idx, n)
        cands = [s for s in range(n) if s not in row_used[r] and s not in col_used[c]]
        rng.shuffle(cands)
        for s in cands:
            grid[r][c] = s
            row_used[r].add(s)
            col_used[c].add(s)
            if fill(idx + 1):
                return True
            row_used[r].remove(s)
            col_used[c].remove(s)
        grid[r][c] = -1
        return False

    assert fill(0)
    return validate_latin_square(grid)


@pytest.fixture
def example_square() -> LatinSquare:
    return LatinSquare(EXAMPLE_SQUARE)


@pytest.fixture
def example_family() -> TransversalFamily:
    return TransversalFamily(
        (Transversal(EXAMPLE_T0), Transversal(EXAMPLE_T1)), disjoint=True
    )
