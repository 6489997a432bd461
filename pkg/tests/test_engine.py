import itertools
import os
import random

import pytest

from latsq import (
    Transversal,
    TransversalFamily,
    bose_sts,
    count_avoiding,
    count_transversals,
    brute_force_count,
    cyclic_square,
    enumerate_transversals,
    find_disjoint_family,
    half_sum_square,
    is_transversal,
    known_sts,
    steiner_square,
)
from latsq import _dfs
from latsq.engine import AvoidanceMask
from latsq.errors import NotATransversal, OrderTooLarge

from conftest import random_latin_square


def oracle_lex_transversals(square):
    """In-test oracle: filter all n! diagonals, in lexicographic order."""
    n = square.order
    out = []
    for perm in itertools.permutations(range(n)):
        if len({square.grid[r][perm[r]] for r in range(n)}) == n:
            out.append(perm)
    return out


# Frozen counts, each computed by exhausting all n! diagonals.
CYCLIC_COUNTS = {1: 1, 2: 0, 3: 3, 4: 0, 5: 15, 6: 0, 7: 133}


class TestCountTransversals:
    @pytest.mark.parametrize("n,expected", sorted(CYCLIC_COUNTS.items()))
    def test_cyclic_counts(self, n, expected):
        square = cyclic_square(n)
        assert brute_force_count(square).count == expected
        assert count_transversals(square).count == expected

    def test_half_sum_matches_oracle(self):
        for n in (1, 3, 5, 7):
            square = half_sum_square(n)
            assert count_transversals(square).count == brute_force_count(square).count

    def test_even_cyclic_nullity(self):
        for n in (2, 4, 6, 8):
            assert count_transversals(cyclic_square(n)).count == 0

    def test_random_squares_match_oracle(self):
        rng = random.Random(20240901)
        for n in range(1, 7):
            for _ in range(20):
                square = random_latin_square(n, rng)
                assert count_transversals(square).count == brute_force_count(square).count

    def test_symbol_relabel_invariance(self):
        rng = random.Random(5)
        for n in (4, 5, 6):
            square = random_latin_square(n, rng)
            base = count_transversals(square).count
            for _ in range(5):
                perm = list(range(n))
                rng.shuffle(perm)
                assert count_transversals(square.relabel(perm)).count == base

    def test_workers_agree(self):
        square = steiner_square(known_sts(9))
        reference = count_transversals(square)
        for workers in (2, os.cpu_count() or 2):
            result = count_transversals(square, workers=workers)
            assert result.count == reference.count
            assert result.nodes_visited == reference.nodes_visited

    def test_order_guard(self):
        with pytest.raises(OrderTooLarge):
            count_transversals(cyclic_square(7), max_order=6)
        # the guard is configuration, not policy
        assert count_transversals(cyclic_square(7), max_order=7).count == 133

    def test_result_fields(self):
        result = count_transversals(cyclic_square(3))
        assert result.count == 3
        assert result.nodes_visited > 0
        assert result.elapsed >= 0.0


class TestKernelEquivalence:
    def test_pure_python_path_matches_jit(self):
        rng = random.Random(99)
        squares = [cyclic_square(n) for n in range(1, 7)]
        squares += [random_latin_square(5, rng) for _ in range(5)]
        for square in squares:
            sym_bits, allowed = _dfs.prepare(square.grid)
            assert _dfs.count_fixed(sym_bits, allowed, force_pure=True) == _dfs.count_fixed(
                sym_bits, allowed
            )


class TestEnumerate:
    def test_b3_exact(self):
        got = [t.cols for t in enumerate_transversals(cyclic_square(3))]
        assert got == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]

    def test_b2_empty(self):
        assert list(enumerate_transversals(cyclic_square(2))) == []

    def test_b5_limit(self):
        square = cyclic_square(5)
        expected = oracle_lex_transversals(square)
        assert len(expected) == 15
        got = [t.cols for t in enumerate_transversals(square, limit=3)]
        assert got == expected[:3]

    def test_lexicographic_and_complete(self):
        rng = random.Random(11)
        for n in (3, 4, 5, 6):
            square = random_latin_square(n, rng)
            got = [t.cols for t in enumerate_transversals(square)]
            assert got == oracle_lex_transversals(square)
            assert len(got) == count_transversals(square).count

    def test_emitted_values_are_transversals(self):
        square = half_sum_square(5)
        for t in enumerate_transversals(square):
            assert is_transversal(square, t)

    def test_visitor_called(self):
        seen = []
        list(enumerate_transversals(cyclic_square(3), visitor=seen.append))
        assert [t.cols for t in seen] == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]

    def test_limit_zero(self):
        assert list(enumerate_transversals(cyclic_square(3), limit=0)) == []


class TestCountAvoiding:
    def test_worked_example(self, example_square, example_family):
        # only the main diagonal misses both given transversals
        assert count_avoiding(example_square, example_family).count == 1

    def test_empty_family_equals_count(self):
        for square in (cyclic_square(3), half_sum_square(5)):
            empty = TransversalFamily(())
            assert count_avoiding(square, empty).count == count_transversals(square).count

    def test_b2_empty_family(self):
        assert count_avoiding(cyclic_square(2), TransversalFamily(())).count == 0

    def test_avoidance_by_exhaustion(self, example_square, example_family):
        forbidden = example_family.cells()
        expected = sum(
            1
            for perm in itertools.permutations(range(3))
            if len({example_square.grid[r][perm[r]] for r in range(3)}) == 3
            and not any((r, perm[r]) in forbidden for r in range(3))
        )
        assert count_avoiding(example_square, example_family).count == expected == 1

    def test_monotone_under_family_growth(self):
        square = half_sum_square(7)
        members = list(enumerate_transversals(square, limit=4))
        previous = count_transversals(square).count
        for k in range(1, len(members) + 1):
            fam = TransversalFamily(tuple(members[:k]))
            current = count_avoiding(square, fam).count
            assert current <= previous
            previous = current

    def test_rejects_non_transversal(self, example_square):
        fam = TransversalFamily((Transversal((0, 2, 1)),))  # symbols 0, 0, 0
        with pytest.raises(NotATransversal):
            count_avoiding(example_square, fam)

    def test_rejects_wrong_length(self, example_square):
        fam = TransversalFamily((Transversal((0, 1)),))
        with pytest.raises(NotATransversal):
            count_avoiding(example_square, fam)

    def test_mask_matches_family_cells(self, example_family):
        mask = AvoidanceMask.from_family(3, example_family)
        cells = {(r, c) for r in range(3) for c in range(3) if (mask.row_masks[r] >> c) & 1}
        assert cells == example_family.cells()


class TestFindDisjointFamily:
    def test_half_sum_full_family(self):
        family = find_disjoint_family(half_sum_square(5), 5)
        assert family is not None and family.disjoint
        assert len(family.cells()) == 25

    def test_b2_has_none(self):
        assert find_disjoint_family(cyclic_square(2), 1) is None

    def test_b3_broken_diagonals(self):
        family = find_disjoint_family(cyclic_square(3), 3)
        assert [t.cols for t in family] == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
        assert len(family.cells()) == 9

    def test_k_zero(self):
        family = find_disjoint_family(cyclic_square(2), 0)
        assert family.disjoint and len(family) == 0

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            find_disjoint_family(cyclic_square(3), 4)

    def test_members_are_valid(self):
        square = half_sum_square(7)
        family = find_disjoint_family(square, 3)
        assert all(is_transversal(square, t) for t in family)


class TestBruteForce:
    def test_order_one(self):
        assert brute_force_count(cyclic_square(1)).count == 1

    def test_b4_zero(self):
        result = brute_force_count(cyclic_square(4))
        assert result.count == 0
        assert result.nodes_visited == 24  # all 4! diagonals examined

    def test_hard_guard(self):
        with pytest.raises(OrderTooLarge):
            brute_force_count(steiner_square(bose_sts(half_sum_square(3))))
