"""Exact transversal counting, enumeration, avoidance, and family search.

Counting is a deterministic depth-first search (see :mod:`latsq._dfs`); the
count is always exact, never an estimate.  ``workers > 1`` fans the search
out over the first row's column choices and sums the per-branch results, so
the total is identical for any worker count.  :func:`brute_force_count` is a
deliberately independent oracle that tries all n! diagonals and shares no
code with the search kernel.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import _dfs
from .core import LatinSquare, Transversal, TransversalFamily, is_transversal
from .errors import LengthMismatch, NotATransversal, OrderTooLarge

DEFAULT_MAX_ORDER = 24
_ORACLE_MAX_ORDER = 8


@dataclass(frozen=True)
class CountResult:
    """An exact count plus search diagnostics.

    ``count`` is exact (Python integers are arbitrary precision, which is
    what the bounds module compares against).  ``nodes_visited`` is the
    number of cell assignments explored and ``elapsed`` is wall time in
    seconds; both are diagnostics, not part of the counting contract.
    """

    count: int
    nodes_visited: int
    elapsed: float


@dataclass(frozen=True)
class AvoidanceMask:
    """Forbidden cells as per-row column bitmasks.

    Derived exactly from a family: bit c of ``row_masks[r]`` is set iff cell
    (r, c) lies on some member.
    """

    row_masks: tuple[int, ...]

    @classmethod
    def from_family(cls, order: int, family: TransversalFamily) -> "AvoidanceMask":
        masks = [0] * order
        for t in family:
            if len(t.cols) != order:
                raise LengthMismatch(
                    f"family member has {len(t.cols)} cells, square has order {order}"
                )
            for r, c in enumerate(t.cols):
                masks[r] |= 1 << c
        return cls(tuple(masks))


def _check_order(square: LatinSquare, max_order: int) -> None:
    if square.order > max_order:
        raise OrderTooLarge(
            f"order {square.order} exceeds the limit {max_order}; "
            "raise max_order explicitly to go further"
        )


def _run_count(square: LatinSquare, mask: Optional[AvoidanceMask], workers: int) -> CountResult:
    start = time.perf_counter()
    sym_bits, allowed = _dfs.prepare(
        square.grid, mask.row_masks if mask is not None else None
    )
    n = square.order
    if workers <= 1 or n <= 1:
        count, nodes = _dfs.count_fixed(sym_bits, allowed)
    else:
        # Fan out on the first row's column choices; exactness of the summed
        # total does not depend on scheduling.
        branches = []
        for c in range(n):
            if (allowed[0] >> c) & 1:
                branch = allowed.copy()
                branch[0] = 1 << c
                branches.append(branch)
        count = 0
        nodes = 0
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_dfs.count_fixed, sym_bits, b) for b in branches]
            for fut in futures:
                c_part, n_part = fut.result()
                count += c_part
                nodes += n_part
    return CountResult(count, nodes, time.perf_counter() - start)


def count_transversals(
    square: LatinSquare, *, workers: int = 1, max_order: int = DEFAULT_MAX_ORDER
) -> CountResult:
    """Count the transversals of ``square`` exactly."""
    _check_order(square, max_order)
    return _run_count(square, None, workers)


def count_avoiding(
    square: LatinSquare,
    family: TransversalFamily,
    *,
    workers: int = 1,
    max_order: int = DEFAULT_MAX_ORDER,
) -> CountResult:
    """Count transversals sharing no cell with any family member.

    With an empty family this equals :func:`count_transversals`.  Every
    member must be a valid transversal of ``square``.
    """
    _check_order(square, max_order)
    for i, t in enumerate(family):
        if len(t.cols) != square.order or not is_transversal(square, t):
            raise NotATransversal(f"family member {i} is not a transversal of the square")
    mask = AvoidanceMask.from_family(square.order, family)
    return _run_count(square, mask, workers)


def enumerate_transversals(
    square: LatinSquare,
    limit: Optional[int] = None,
    visitor: Optional[Callable[[Transversal], None]] = None,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
) -> Iterator[Transversal]:
    """Yield every transversal once, in lexicographic order of ``cols``.

    Stops after ``limit`` emissions if given.  ``visitor`` is called with
    each transversal as it is produced.
    """
    _check_order(square, max_order)
    if limit is not None and limit <= 0:
        return
    n = square.order
    sym_bits = [[1 << s for s in row] for row in square.grid]
    cols = [0] * n
    emitted = 0

    def descend(level: int, used_cols: int, used_syms: int) -> Iterator[Transversal]:
        nonlocal emitted
        if level == n:
            t = Transversal(tuple(cols))
            if visitor is not None:
                visitor(t)
            emitted += 1
            yield t
            return
        row_bits = sym_bits[level]
        for c in range(n):
            if (used_cols >> c) & 1:
                continue
            sb = row_bits[c]
            if used_syms & sb:
                continue
            cols[level] = c
            yield from descend(level + 1, used_cols | (1 << c), used_syms | sb)
            if limit is not None and emitted >= limit:
                return

    yield from descend(0, 0, 0)


def find_disjoint_family(
    square: LatinSquare, k: int, *, max_order: int = DEFAULT_MAX_ORDER
) -> Optional[TransversalFamily]:
    """First family of k pairwise cell-disjoint transversals, or None.

    Candidates are materialized in lexicographic cols order and combined by
    backtracking over ascending indices, so the result is the
    lexicographically first such family and is fully deterministic.
    """
    n = square.order
    if not 0 <= k <= n:
        raise ValueError(f"k must be in 0..{n}, got {k}")
    if k == 0:
        return TransversalFamily((), disjoint=True)
    candidates = list(enumerate_transversals(square, max_order=max_order))
    # Cell (r, c) becomes bit r*n + c of an n^2-bit mask.
    masks = [
        sum(1 << (r * n + c) for r, c in enumerate(t.cols)) for t in candidates
    ]
    chosen: list[int] = []

    def extend(start: int, used: int) -> bool:
        if len(chosen) == k:
            return True
        for i in range(start, len(candidates) - (k - len(chosen)) + 1):
            if used & masks[i]:
                continue
            chosen.append(i)
            if extend(i + 1, used | masks[i]):
                return True
            chosen.pop()
        return False

    if extend(0, 0):
        return TransversalFamily(tuple(candidates[i] for i in chosen), disjoint=True)
    return None


def brute_force_count(square: LatinSquare) -> CountResult:
    """Independent oracle: try all n! diagonals directly.

    Hard-limited to order 8.  Kept free of any code shared with the search
    kernel so the two can certify each other.
    """
    n = square.order
    if n > _ORACLE_MAX_ORDER:
        raise OrderTooLarge(f"oracle is hard-limited to order {_ORACLE_MAX_ORDER}, got {n}")
    grid = square.grid
    start = time.perf_counter()
    count = 0
    examined = 0
    for perm in itertools.permutations(range(n)):
        examined += 1
        if len({grid[r][perm[r]] for r in range(n)}) == n:
            count += 1
    return CountResult(count, examined, time.perf_counter() - start)
