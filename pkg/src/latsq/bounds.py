"""Counting bounds for Steiner squares, certified by explicit computation.

For a Steiner triple system on n points, the union of p disjoint triples
meets at most s(p) = 3p(n-1)/2 - p(3p-1) triples, so a greedy recursion can
keep picking disjoint triples for p0 = ceil((n-1)/6) steps.  Turning each
chosen triple into one of two off-diagonal 3-cell patterns and finishing
with idempotent cells yields distinct transversals of the Steiner square,
at least floor(6^(p0-1) * floor(n/3)! / (p0! * p0)) of them in total.

Everything here is exact integer arithmetic except the report's log-scale
fields, which carry explicit notes about the asymptotic terms they omit.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import SteinerTripleSystem, Transversal
from .errors import BadOrder, POutOfRange, PTooLarge

TARANENKO_NOTE = "o(n) term omitted; not a valid comparison at small n"
COROLLARY_NOTE = "O(1) term omitted; shape only, constant unverified"


def _check_sts_order(n: int) -> None:
    if n < 1 or n % 6 not in (1, 3):
        raise BadOrder(f"{n} is not a Steiner triple system order (need 1 or 3 mod 6)")


def s_p(n: int, p: int) -> int:
    """Max number of STS triples meeting the union of p disjoint triples.

    Integer-cleared form 3p(n-1)/2 - p(3p-1); exact because n is odd.
    """
    _check_sts_order(n)
    if p < 0 or 3 * p > n:
        raise POutOfRange(f"need 0 <= 3p <= n, got p={p} at order {n}")
    return 3 * p * (n - 1) // 2 - p * (3 * p - 1)


def p0(n: int) -> int:
    """Number of greedy steps, ceil((n-1)/6), after which s(p) covers all triples."""
    _check_sts_order(n)
    return (n + 4) // 6


def theorem1_bound(n: int) -> int:
    """Guaranteed number of transversals of any Steiner square of order n.

    Exact evaluation of 6^(p0-1) * floor(n/3)! / (p0! * p0), floored: a
    transversal count is an integer, so flooring keeps a valid lower bound.
    At n = 1 there are no greedy steps and the idempotent diagonal is the
    single guaranteed transversal.
    """
    _check_sts_order(n)
    steps = p0(n)
    if steps == 0:
        return 1
    numerator = 6 ** (steps - 1) * math.factorial(n // 3)
    return numerator // (math.factorial(steps) * steps)


def greedy_step_counts(n: int) -> list[tuple[int, int, int]]:
    """(p, available, step_formula) for each greedy step p < p0.

    ``available`` is the number of triples disjoint from the current union,
    n(n-1)/6 - s(p); ``step_formula`` is its closed form
    (n-3p)(n-6p-1)/6.  Checks available >= step_formula >= 1 at every step
    and s(p0) >= n(n-1)/6, i.e. the recursion runs out of room exactly when
    the bound says it may.
    """
    _check_sts_order(n)
    total = n * (n - 1) // 6
    steps = p0(n)
    rows: list[tuple[int, int, int]] = []
    for p in range(steps):
        available = total - s_p(n, p)
        formula = (n - 3 * p) * (n - 6 * p - 1) // 6
        assert available >= formula >= 1, (n, p, available, formula)
        rows.append((p, available, formula))
    assert s_p(n, steps) >= total, (n, steps)
    return rows


@dataclass(frozen=True)
class PartialParallelClass:
    """p pairwise point-disjoint triples plus the union of their points."""

    triples: tuple[tuple[int, int, int], ...]
    covered: frozenset[int]


def partial_parallel_classes(
    sts: SteinerTripleSystem, size: int
) -> Iterator[PartialParallelClass]:
    """All partial parallel classes of exactly ``size`` triples.

    Triples are chosen by increasing index into the canonical triple list,
    so each class appears exactly once and the stream order is deterministic.
    """
    if size < 0 or 3 * size > sts.points:
        raise POutOfRange(f"need 0 <= 3*size <= points, got size={size}")
    triples = sts.triples
    masks = [(1 << a) | (1 << b) | (1 << c) for a, b, c in triples]
    chosen: list[int] = []

    def extend(start: int, covered: int) -> Iterator[PartialParallelClass]:
        if len(chosen) == size:
            picked = tuple(triples[i] for i in chosen)
            yield PartialParallelClass(picked, frozenset(x for t in picked for x in t))
            return
        for i in range(start, len(triples)):
            if covered & masks[i]:
                continue
            chosen.append(i)
            yield from extend(i + 1, covered | masks[i])
            chosen.pop()

    return extend(0, 0)


@dataclass(frozen=True)
class Prop2Record:
    """Outcome of checking s(p) against actual intersection counts."""

    order: int
    p: int
    bound: int
    max_observed: int
    classes_checked: int
    exhaustive: bool
    passed: bool


def verify_prop2(
    sts: SteinerTripleSystem,
    p: int,
    exhaustive: bool = True,
    *,
    samples: int = 1000,
    seed: int = 0,
) -> Prop2Record:
    """Check that every (or a sampled) size-p class meets at most s(p) triples.

    A triple "meets" the class when it shares at least one point with the
    union of the chosen triples; the chosen triples themselves count.  The
    sampling mode is a fixed-seed random greedy walk, so reruns are
    reproducible.  Raises PTooLarge when no class of size p turns up.
    """
    n = sts.points
    bound = s_p(n, p)
    masks = [(1 << a) | (1 << b) | (1 << c) for a, b, c in sts.triples]
    max_observed = 0
    checked = 0

    def intersections(covered: int) -> int:
        return sum(1 for m in masks if m & covered)

    if exhaustive:
        for cls in partial_parallel_classes(sts, p):
            covered = 0
            for point in cls.covered:
                covered |= 1 << point
            max_observed = max(max_observed, intersections(covered))
            checked += 1
    else:
        rng = random.Random(seed)
        indices = list(range(len(sts.triples)))
        for _ in range(samples):
            covered = 0
            size = 0
            if p > 0:
                for i in rng.sample(indices, len(indices)):
                    if covered & masks[i]:
                        continue
                    covered |= masks[i]
                    size += 1
                    if size == p:
                        break
            if size == p:
                max_observed = max(max_observed, intersections(covered))
                checked += 1
    if checked == 0:
        raise PTooLarge(
            f"no partial parallel class of size {p} found at order {n}"
            + ("" if exhaustive else f" in {samples} samples")
        )
    return Prop2Record(n, p, bound, max_observed, checked, exhaustive, max_observed <= bound)


def steiner_transversal_family(
    sts: SteinerTripleSystem, p_min: int, p_max: int
) -> Iterator[Transversal]:
    """Transversals of steiner_square(sts) built from partial parallel classes.

    For every class of size p_min <= p <= p_max (in canonical lexicographic
    order) and each of its 2^p orientation assignments, emits the diagonal
    that takes one of the two off-diagonal 3-cell patterns on each chosen
    triple {a, b, c},

        orientation A: (a,c)->b, (b,a)->c, (c,b)->a
        orientation B: (a,b)->c, (b,c)->a, (c,a)->b,

    completed by the idempotent cell (e, e) on every uncovered point e.
    Distinct (class, orientation) pairs give distinct transversals.
    """
    if p_min < 0 or p_min > p_max:
        raise POutOfRange(f"need 0 <= p_min <= p_max, got [{p_min}, {p_max}]")
    n = sts.points
    for size in range(p_min, min(p_max, n // 3) + 1):
        for cls in partial_parallel_classes(sts, size):
            for orientation in range(1 << size):
                cols = list(range(n))
                for j, (a, b, c) in enumerate(cls.triples):
                    if (orientation >> j) & 1:
                        cols[a], cols[b], cols[c] = b, c, a
                    else:
                        cols[a], cols[b], cols[c] = c, a, b
                yield Transversal(tuple(cols))


@dataclass(frozen=True)
class BoundReport:
    """Exact and log-scale bound values for one order n.

    The theorem fields are populated only for STS orders (n = 1 or 3 mod 6);
    the two asymptotic reference lines are computed for every n and carry
    notes naming the omitted terms, since neither o(n) nor the O(1) constant
    is computable.
    """

    order: int
    applicable: bool
    p0: Optional[int]
    s_table: Optional[tuple[tuple[int, int], ...]]
    theorem1_bound: Optional[int]
    theorem1_log: Optional[float]
    taranenko_log: float
    taranenko_note: str
    corollary_lower_log: float
    corollary_note: str

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "applicable": self.applicable,
            "p0": self.p0,
            "s_table": None if self.s_table is None else [list(t) for t in self.s_table],
            "theorem1_bound": self.theorem1_bound,
            "theorem1_log": self.theorem1_log,
            "taranenko_log": self.taranenko_log,
            "taranenko_note": self.taranenko_note,
            "corollary_lower_log": self.corollary_lower_log,
            "corollary_note": self.corollary_note,
        }


def bound_report(n: int) -> BoundReport:
    """Assemble the bound report for one order."""
    if n < 1:
        raise BadOrder(f"order must be positive, got {n}")
    applicable = n % 6 in (1, 3)
    if applicable:
        steps = p0(n)
        table = tuple((p, s_p(n, p)) for p in range(steps + 1))
        bound = theorem1_bound(n)
        bound_log = math.log(bound)
    else:
        steps = None
        table = None
        bound = None
        bound_log = None
    return BoundReport(
        order=n,
        applicable=applicable,
        p0=steps,
        s_table=table,
        theorem1_bound=bound,
        theorem1_log=bound_log,
        taranenko_log=n * math.log(n) - 2 * n,
        taranenko_note=TARANENKO_NOTE,
        corollary_lower_log=n / 6 * math.log(n),
        corollary_note=COROLLARY_NOTE,
    )
