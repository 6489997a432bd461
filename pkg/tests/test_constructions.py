import pytest

from latsq import (
    LatinSquare,
    SteinerTripleSystem,
    Transversal,
    TransversalFamily,
    bose_sts,
    count_transversals,
    cyclic_square,
    enumerate_transversals,
    half_sum_square,
    is_transversal,
    known_sts,
    lift_transversal,
    prolongation,
    shifted_diagonal_family,
    square_with_transversal,
    steiner_square,
    validate_sts,
)
from latsq.constructions import BosePoint
from latsq.errors import (
    BadOrder,
    BadSubsquareAlphabet,
    BadSubsquareOrder,
    EvenOrder,
    NotATransversal,
    NotCommutative,
    NotDisjoint,
    NotIdempotent,
    OrderTwo,
)

from conftest import (
    FANO_TRIPLES,
    EXAMPLE_CORNER,
    EXAMPLE_PROLONGED,
    EXAMPLE_SQUARE,
    EXAMPLE_T0,
    EXAMPLE_T1,
)

# Idempotent but not commutative: (2x + 4y) mod 5.
LOPSIDED_5 = LatinSquare(
    tuple(tuple((2 * x + 4 * y) % 5 for y in range(5)) for x in range(5))
)


class TestCyclicSquare:
    def test_order_three_matches_fixture(self):
        assert cyclic_square(3).grid == EXAMPLE_SQUARE

    def test_order_one(self):
        assert cyclic_square(1).grid == ((0,),)

    def test_rows_are_shifts(self):
        sq = cyclic_square(5)
        for i in range(5):
            assert sq.row(i) == tuple((i + j) % 5 for j in range(5))

    def test_bad_order(self):
        with pytest.raises(BadOrder):
            cyclic_square(0)


class TestHalfSumSquare:
    def test_order_three(self):
        assert half_sum_square(3).grid == ((0, 2, 1), (2, 1, 0), (1, 0, 2))

    def test_order_one(self):
        assert half_sum_square(1).grid == ((0,),)

    def test_order_five_cell(self):
        sq = half_sum_square(5)
        assert sq[1, 2] == 4  # 3 * 3 mod 5
        assert sq.is_idempotent() and sq.is_commutative()

    def test_even_order_rejected(self):
        with pytest.raises(EvenOrder):
            half_sum_square(4)

    def test_depends_only_on_sum(self):
        # structurally a relabeled cyclic square: cell value is a function of (x+y) mod n
        for n in (3, 5, 7, 9):
            sq = half_sum_square(n)
            by_sum = {}
            for x in range(n):
                for y in range(n):
                    key = (x + y) % n
                    assert by_sum.setdefault(key, sq[x, y]) == sq[x, y]

    def test_doubling_recovers_sum(self):
        sq = half_sum_square(7)
        for x in range(7):
            for y in range(7):
                assert (2 * sq[x, y]) % 7 == (x + y) % 7


class TestShiftedDiagonalFamily:
    def test_member_zero_is_idempotent_diagonal(self):
        family = shifted_diagonal_family(3)
        assert family[0].cols == (0, 1, 2)

    def test_order_five_properties(self):
        square = half_sum_square(5)
        family = shifted_diagonal_family(5)
        assert len(family) == 5 and family.disjoint
        assert all(is_transversal(square, t) for t in family)
        assert len(family.cells()) == 25

    def test_order_seven_disjoint(self):
        family = shifted_diagonal_family(7)
        assert len(family) == 7
        assert len(family.cells()) == 49

    def test_even_order_rejected(self):
        with pytest.raises(EvenOrder):
            shifted_diagonal_family(6)


class TestBoseSts:
    def test_order_one_gives_single_triple(self):
        assert bose_sts(LatinSquare(((0,),))).triples == ((0, 1, 2),)

    def test_order_three(self):
        sts = bose_sts(half_sum_square(3))
        assert sts.points == 9
        assert len(sts.triples) == 12

    def test_order_seven(self):
        sts = bose_sts(half_sum_square(7))
        assert sts.points == 21
        assert len(sts.triples) == 70  # 21 * 20 / 6

    @pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
    def test_triple_counts(self, n):
        sts = bose_sts(half_sum_square(n))
        assert len(sts.triples) == (3 * n) * (3 * n - 1) // 6
        # split: 3 * n(n-1)/2 layer triples plus n spine triples
        spine = sum(1 for t in sts.triples if t == (t[0], t[0] + n, t[0] + 2 * n))
        assert spine == n
        assert len(sts.triples) - spine == 3 * n * (n - 1) // 2

    def test_rejects_non_idempotent(self):
        with pytest.raises(NotIdempotent):
            bose_sts(cyclic_square(3))

    def test_rejects_non_commutative(self):
        with pytest.raises(NotCommutative):
            bose_sts(LOPSIDED_5)

    def test_point_encoding(self):
        n = 5
        for index in range(3 * n):
            point = BosePoint.decode(index, n)
            assert 0 <= point.base < n and point.layer in (0, 1, 2)
            assert point.encode(n) == index


class TestSteinerSquare:
    def test_sts3_pattern(self):
        sq = steiner_square(SteinerTripleSystem(3, ((0, 1, 2),)))
        assert sq.grid == ((0, 2, 1), (2, 1, 0), (1, 0, 2))

    def test_fano_square(self):
        sq = steiner_square(SteinerTripleSystem(7, FANO_TRIPLES))
        assert sq.order == 7
        assert sq.is_idempotent() and sq.is_commutative()

    def test_order_nine(self):
        sq = steiner_square(bose_sts(half_sum_square(3)))
        assert sq.order == 9
        assert sq.is_idempotent() and sq.is_commutative()

    def test_order_one(self):
        sq = steiner_square(SteinerTripleSystem(1, ()))
        assert sq.grid == ((0,),)


class TestLiftTransversal:
    def test_smallest_case(self):
        lifted = lift_transversal(LatinSquare(((0,),)), Transversal((0,)))
        assert lifted.cols == (1, 2, 0)
        s3 = steiner_square(bose_sts(LatinSquare(((0,),))))
        assert is_transversal(s3, lifted)

    def test_idempotent_diagonal_order_three(self):
        square = half_sum_square(3)
        s9 = steiner_square(bose_sts(square))
        lifted = lift_transversal(square, Transversal((0, 1, 2)))
        assert len(lifted) == 9
        assert is_transversal(s9, lifted)

    def test_all_transversals_order_five_distinct(self):
        square = half_sum_square(5)
        s15 = steiner_square(bose_sts(square))
        lifted = [lift_transversal(square, t) for t in shifted_diagonal_family(5)]
        assert all(is_transversal(s15, t) for t in lifted)
        assert len({t.cols for t in lifted}) == len(lifted)

    def test_rejects_non_transversal(self):
        square = half_sum_square(5)
        bad = Transversal((1, 0, 2, 3, 4))  # cells (0,1) and (1,0) repeat symbol 3
        assert not is_transversal(square, bad)
        with pytest.raises(NotATransversal):
            lift_transversal(square, bad)

    def test_rejects_non_idempotent_base(self):
        with pytest.raises(NotIdempotent):
            lift_transversal(cyclic_square(3), Transversal((0, 1, 2)))


class TestProlongation:
    def test_worked_example_bit_exact(self, example_square, example_family):
        built = prolongation(example_square, example_family, EXAMPLE_CORNER)
        assert built.grid == EXAMPLE_PROLONGED

    def test_three_cell_exchange(self, example_square, example_family):
        built = prolongation(example_square, example_family, EXAMPLE_CORNER)
        n = example_square.order
        for i, t in enumerate(example_family):
            for a, b in t.cells():
                c = example_square.grid[a][b]
                assert built[a, b] == n + i
                assert built[a, n + i] == c
                assert built[n + i, b] == c

    def test_k_zero_is_identity(self, example_square):
        assert prolongation(example_square, TransversalFamily((), disjoint=True)) is example_square

    def test_single_transversal_order_six(self):
        base = half_sum_square(5)
        member = shifted_diagonal_family(5)[0]
        built = prolongation(base, TransversalFamily((member,), disjoint=True), ((5,),))
        assert built.order == 6

    def test_corner_as_standard_square_is_relabeled(self, example_square, example_family):
        corner = LatinSquare(((0, 1), (1, 0)))
        built = prolongation(example_square, example_family, corner)
        assert built.grid == EXAMPLE_PROLONGED

    def test_requires_disjoint_flag(self, example_square):
        family = TransversalFamily((Transversal(EXAMPLE_T0), Transversal(EXAMPLE_T1)))
        with pytest.raises(NotDisjoint):
            prolongation(example_square, family, EXAMPLE_CORNER)

    def test_rejects_non_transversal_member(self):
        square = cyclic_square(4)  # no transversals at all
        family = TransversalFamily((Transversal((0, 1, 2, 3)),), disjoint=True)
        with pytest.raises(NotATransversal):
            prolongation(square, family, ((4,),))

    def test_wrong_corner_order(self, example_square, example_family):
        with pytest.raises(BadSubsquareOrder):
            prolongation(example_square, example_family, ((3,),))
        with pytest.raises(BadSubsquareOrder):
            prolongation(example_square, example_family, None)

    def test_wrong_corner_alphabet(self, example_square, example_family):
        with pytest.raises(BadSubsquareAlphabet):
            prolongation(example_square, example_family, ((7, 8), (8, 7)))


class TestSquareWithTransversal:
    def test_order_three_is_cyclic(self):
        assert square_with_transversal(3) == cyclic_square(3)

    def test_order_two_rejected(self):
        with pytest.raises(OrderTwo):
            square_with_transversal(2)

    def test_order_four_from_prolongation(self):
        sq = square_with_transversal(4)
        assert sq.order == 4
        assert next(enumerate_transversals(sq, limit=1), None) is not None

    @pytest.mark.parametrize("k", [1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12])
    def test_engine_confirms_transversal(self, k):
        sq = square_with_transversal(k)
        assert sq.order == k
        assert next(enumerate_transversals(sq, limit=1), None) is not None


class TestKnownSts:
    @pytest.mark.parametrize("n", [1, 3, 7, 9, 13, 15, 21])
    def test_validates(self, n):
        sts = known_sts(n)
        assert sts.points == n
        assert len(sts.triples) == n * (n - 1) // 6

    def test_fano_is_difference_set(self):
        assert known_sts(7) == validate_sts(7, FANO_TRIPLES)

    def test_unsupported_orders(self):
        for n in (19, 25, 8):
            with pytest.raises(BadOrder):
                known_sts(n)


def test_layer_restriction_reproduces_base():
    # layer-0 rows/columns of the Steiner square hold the base square's
    # triples with symbols moved to layer 1
    base = half_sum_square(5)
    s15 = steiner_square(bose_sts(base))
    n = 5
    for x in range(n):
        for y in range(n):
            if x != y:
                assert s15[x, y] == base[x, y] + n


def test_steiner_of_bose_has_many_transversals():
    base = half_sum_square(3)
    s9 = steiner_square(bose_sts(base))
    assert count_transversals(s9).count >= 9
