"""Search kernel behind the transversal counter.

Depth-first over rows in ascending index; within a row, candidate columns
come off a per-level bitmask lowest-bit-first, which is ascending column
order.  Pruning is a used-column mask (folded into the candidate masks at
push time) plus a used-symbol mask.  The kernel is written so it compiles
under numba when available and still runs unchanged as plain Python when it
is not.  ``nodes`` counts every feasible cell assignment, which makes the
statistic independent of how the first row is split across workers.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(func):
            return func

        return wrap


def _count_impl(sym_bits, allowed):
    # sym_bits[r, c] = 1 << grid[r][c]; allowed[r] = bitmask of usable columns.
    n = sym_bits.shape[0]
    # Trailing-zero table: 2 is a primitive root mod 37, so (1 << k) % 37 is
    # distinct for all k < 36, comfortably covering the order guard.
    ctz = np.full(37, -1, dtype=np.int64)
    for k in range(36):
        ctz[(1 << k) % 37] = k
    pending = np.zeros(n, dtype=np.int64)  # untried candidate columns per level
    col_bit = np.zeros(n, dtype=np.int64)
    sym_bit = np.zeros(n, dtype=np.int64)
    used_cols = 0
    used_syms = 0
    count = 0
    nodes = 0
    level = 0
    last = n - 1
    pending[0] = allowed[0]
    while level >= 0:
        m = pending[level]
        if m == 0:
            level -= 1
            if level >= 0:
                used_cols ^= col_bit[level]
                used_syms ^= sym_bit[level]
            continue
        b = m & (-m)
        pending[level] = m ^ b
        sb = sym_bits[level, ctz[b % 37]]
        if used_syms & sb:
            continue
        nodes += 1
        if level == last:
            count += 1
            continue
        col_bit[level] = b
        sym_bit[level] = sb
        used_cols |= b
        used_syms |= sb
        level += 1
        pending[level] = allowed[level] & ~used_cols
    return count, nodes


_count_jit = njit(cache=True, nogil=True)(_count_impl) if HAVE_NUMBA else _count_impl


def count_fixed(sym_bits: np.ndarray, allowed: np.ndarray, force_pure: bool = False):
    """Exact (count, nodes) for the masked square; jitted unless force_pure."""
    kernel = _count_impl if force_pure else _count_jit
    count, nodes = kernel(sym_bits, allowed)
    return int(count), int(nodes)


def prepare(grid, avoid_masks=None):
    """Build the (sym_bits, allowed) pair the kernel consumes."""
    n = len(grid)
    sym_bits = np.zeros((n, n), dtype=np.int64)
    for r in range(n):
        for c in range(n):
            sym_bits[r, c] = 1 << grid[r][c]
    full = (1 << n) - 1
    allowed = np.full(n, full, dtype=np.int64)
    if avoid_masks is not None:
        for r in range(n):
            allowed[r] = full & ~avoid_masks[r]
    return sym_bits, allowed
