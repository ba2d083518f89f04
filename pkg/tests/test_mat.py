"""Dense matrix arithmetic, invariants, and potency predicates."""

import pytest
from hypothesis import given, settings, strategies as st

from weakper.errors import (
    BadDimension,
    DimensionMismatch,
    ExponentOverflow,
    FieldMismatch,
    InputError,
)
from weakper.gf import build_field
from weakper.mat import (
    Mat,
    char_poly,
    cycle_permutation_matrix,
    det,
    is_potent,
    is_potent_iterative,
    is_square_zero,
    linear_combination,
    min_poly,
    potency_exponent,
    universal_potency_exponent,
)
from weakper.poly import Poly
from weakper.companion import companion_of

from conftest import char_poly_laplace, min_poly_scan, poly_at_matrix, random_matrix


class TestConstruction:
    def test_from_rows_round_trip(self, gf3):
        m = Mat.from_rows(gf3, [[0, 1], [2, 0]])
        assert m.rows() == ((0, 1), (2, 0))
        assert m.entries == (0, 1, 2, 0)
        assert m.entry(1, 0) == 2

    def test_identity_and_zeros(self, gf5):
        assert Mat.identity(gf5, 3).rows() == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert Mat.zeros(gf5, 2).is_zero()
        assert Mat.identity(gf5, 2).is_identity()

    def test_ragged_rows_rejected(self, gf3):
        with pytest.raises(DimensionMismatch):
            Mat.from_rows(gf3, [[0, 1], [2]])

    def test_entry_count_checked(self, gf3):
        with pytest.raises(DimensionMismatch):
            Mat(gf3, 2, (0, 1, 2))

    def test_entries_must_lie_in_field(self, gf3):
        with pytest.raises(FieldMismatch):
            Mat(gf3, 2, (0, 1, 2, 5))

    def test_dimension_must_be_positive(self, gf3):
        with pytest.raises(BadDimension):
            Mat.zeros(gf3, 0)
        with pytest.raises(BadDimension):
            Mat.identity(gf3, -1)

    def test_entry_index_range(self, gf3):
        with pytest.raises(BadDimension):
            Mat.identity(gf3, 2).entry(0, 2)


class TestArithmetic:
    def test_add_sub_scale(self, gf5):
        a = Mat.from_rows(gf5, [[1, 2], [3, 4]])
        b = Mat.from_rows(gf5, [[4, 3], [2, 1]])
        assert (a + b).rows() == ((0, 0), (0, 0))
        assert (a - a).is_zero()
        assert a.scale(2).rows() == ((2, 4), (1, 3))
        assert (-a + a).is_zero()

    def test_matrix_product(self, gf3):
        # swap * swap = identity
        s = Mat.from_rows(gf3, [[0, 1], [1, 0]])
        assert (s * s).is_identity()
        a = Mat.from_rows(gf3, [[1, 2], [0, 1]])
        assert (a * s).rows() == ((2, 1), (1, 0))

    def test_mixed_fields_rejected(self, gf2, gf3):
        with pytest.raises(FieldMismatch):
            Mat.identity(gf2, 2) + Mat.identity(gf3, 2)

    def test_mixed_sizes_rejected(self, gf3):
        with pytest.raises(DimensionMismatch):
            Mat.identity(gf3, 2) * Mat.identity(gf3, 3)

    def test_pow(self, gf3):
        s = Mat.from_rows(gf3, [[0, 1], [1, 0]])
        assert (s ** 0).is_identity()
        assert s ** 1 == s
        assert (s ** 2).is_identity()
        assert s ** 5 == s

    def test_negative_exponent_rejected(self, gf3):
        with pytest.raises(InputError):
            Mat.identity(gf3, 2) ** -1

    def test_trace_and_transpose(self, gf5):
        a = Mat.from_rows(gf5, [[1, 2], [3, 4]])
        assert a.trace() == 0
        assert a.transpose().rows() == ((1, 3), (2, 4))


class TestCyclePermutation:
    def test_three_cycle_over_gf2(self, gf2):
        c = cycle_permutation_matrix(gf2, 3)
        assert c.rows() == ((0, 1, 0), (0, 0, 1), (1, 0, 0))
        assert char_poly(c).coeffs == (1, 0, 0, 1)
        assert (c ** 3).is_identity()
        assert not (c ** 2).is_identity()

    def test_short_cycle_rejected(self, gf2):
        with pytest.raises(BadDimension):
            cycle_permutation_matrix(gf2, 1)


class TestCharPoly:
    def test_companion_reproduces_its_polynomial(self, gf5):
        g = Poly(gf5, (3, 2, 1))
        assert char_poly(companion_of(g).matrix) == g

    @pytest.mark.parametrize("p", [2, 3])
    def test_agrees_with_cofactor_expansion_exhaustively(self, p):
        spec = build_field(p, 1)
        q = spec.order
        for code in range(q ** 4):
            e = [(code // q ** i) % q for i in range(4)]
            m = Mat(spec, 2, tuple(e))
            assert char_poly(m) == char_poly_laplace(m)

    def test_agrees_with_cofactor_expansion_sampled(self, gf4, gf5, seeded_rng):
        for spec in (gf4, gf5):
            for n in (3, 4):
                for _ in range(25):
                    m = random_matrix(seeded_rng, spec, n)
                    assert char_poly(m) == char_poly_laplace(m)

    def test_cayley_hamilton(self, gf4, seeded_rng):
        for _ in range(50):
            m = random_matrix(seeded_rng, gf4, 3)
            assert poly_at_matrix(char_poly(m), m).is_zero()


class TestDet:
    def test_frozen_values(self, gf3):
        assert det(Mat.identity(gf3, 3)) == 1
        assert det(Mat.zeros(gf3, 2)) == 0
        assert det(Mat.from_rows(gf3, [[0, 1], [1, 0]])) == 2
        assert det(Mat.from_rows(gf3, [[1, 2], [2, 1]])) == 0

    def test_matches_char_poly_constant_term(self, gf5, seeded_rng):
        # det(M) = (-1)^n * charpoly(0)
        for n in (2, 3, 4):
            sign = 1 if n % 2 == 0 else gf5._neg(1)
            for _ in range(25):
                m = random_matrix(seeded_rng, gf5, n)
                assert det(m) == gf5._mul(sign, char_poly(m).evaluate(0))

    def test_multiplicative(self, gf4, seeded_rng):
        for _ in range(25):
            a = random_matrix(seeded_rng, gf4, 3)
            b = random_matrix(seeded_rng, gf4, 3)
            assert det(a * b) == gf4._mul(det(a), det(b))


class TestMinPoly:
    def test_scalar_matrix(self, gf5):
        assert min_poly(Mat.identity(gf5, 3).scale(2)).coeffs == (3, 1)

    def test_companion_is_nonderogatory(self, gf3):
        for g in (Poly(gf3, (1, 0, 1)), Poly(gf3, (2, 2, 0, 1))):
            assert min_poly(companion_of(g).matrix) == g

    def test_agrees_with_scan_oracle(self, gf2, gf3, seeded_rng):
        for spec in (gf2, gf3):
            for _ in range(30):
                m = random_matrix(seeded_rng, spec, 2)
                assert min_poly(m) == min_poly_scan(m)

    def test_divides_char_poly(self, gf4, seeded_rng):
        for _ in range(30):
            m = random_matrix(seeded_rng, gf4, 3)
            assert char_poly(m) % min_poly(m) == Poly(gf4, (0,))

    def test_annihilates(self, gf5, seeded_rng):
        for _ in range(30):
            m = random_matrix(seeded_rng, gf5, 3)
            assert poly_at_matrix(min_poly(m), m).is_zero()


class TestPotency:
    def test_universal_exponent_frozen(self, gf2, gf3, gf4):
        assert universal_potency_exponent(1, gf2) == 1
        assert universal_potency_exponent(2, gf2) == 3
        assert universal_potency_exponent(2, gf3) == 8
        assert universal_potency_exponent(3, gf4) == 315

    def test_universal_exponent_overflow(self, gf2):
        with pytest.raises(ExponentOverflow):
            universal_potency_exponent(70, gf2)

    def test_is_potent_frozen(self, gf3):
        assert is_potent(Mat.identity(gf3, 2))
        assert is_potent(Mat.zeros(gf3, 2))
        assert is_potent(Mat.from_rows(gf3, [[0, 1], [1, 0]]))
        assert not is_potent(companion_of(Poly(gf3, (0, 0, 1))).matrix)

    def test_potency_means_squarefree_min_poly(self, gf2, gf3):
        # the swap matrix satisfies M^3 = M in characteristic 2, but its
        # minimal polynomial (X+1)^2 is not squarefree; both oracles use
        # the squarefree reading, so it is rejected there and accepted
        # over GF(3) where the minimal polynomial splits cleanly
        swap2 = Mat.from_rows(gf2, [[0, 1], [1, 0]])
        assert swap2 ** 3 == swap2
        assert not is_potent(swap2)
        assert not is_potent_iterative(swap2)
        assert potency_exponent(swap2) is None
        swap3 = Mat.from_rows(gf3, [[0, 1], [1, 0]])
        assert is_potent(swap3)
        assert is_potent_iterative(swap3)

    def test_iterative_check_agrees_exhaustively(self, gf2):
        for code in range(16):
            e = [(code >> i) & 1 for i in range(4)]
            m = Mat(gf2, 2, tuple(e))
            assert is_potent(m) == is_potent_iterative(m)

    def test_iterative_check_agrees_sampled(self, gf4, gf5, seeded_rng):
        for spec in (gf4, gf5):
            for _ in range(40):
                m = random_matrix(seeded_rng, spec, 2)
                assert is_potent(m) == is_potent_iterative(m)

    def test_potency_exponent_frozen(self, gf3, gf5):
        assert potency_exponent(Mat.identity(gf3, 2)) == 2
        assert potency_exponent(Mat.zeros(gf3, 2)) == 2
        assert potency_exponent(Mat.from_rows(gf3, [[0, 1], [1, 0]])) == 3
        assert potency_exponent(companion_of(Poly(gf3, (0, 1, 1))).matrix) == 3
        assert potency_exponent(companion_of(Poly(gf5, (0, 3, 1))).matrix) == 5
        assert potency_exponent(companion_of(Poly(gf3, (0, 0, 1))).matrix) is None

    def test_potency_exponent_replays(self, gf3, gf4, seeded_rng):
        # whenever an exponent comes back, M**k == M and k >= 2
        for spec in (gf3, gf4):
            for _ in range(60):
                m = random_matrix(seeded_rng, spec, 2)
                k = potency_exponent(m)
                if k is None:
                    assert not is_potent(m)
                else:
                    assert k >= 2
                    assert m ** k == m

    def test_square_zero(self, gf3):
        assert is_square_zero(Mat.zeros(gf3, 2))
        assert is_square_zero(Mat.from_rows(gf3, [[0, 0], [1, 0]]))
        assert not is_square_zero(Mat.identity(gf3, 2))
        assert not is_square_zero(Mat.from_rows(gf3, [[0, 1], [1, 0]]))


class TestLinearCombination:
    def test_unique_solution(self, gf3):
        assert linear_combination(((1, 0), (0, 1)), (2, 1), gf3) == (2, 1)

    def test_inconsistent(self, gf3):
        assert linear_combination(((1, 0),), (0, 1), gf3) is None

    def test_free_variables_forced_to_zero(self, gf3):
        # rank-deficient system; the deterministic answer drops vector 2
        assert linear_combination(((1, 0), (2, 0)), (2, 0), gf3) == (2, 0)

    def test_empty_basis(self, gf3):
        assert linear_combination((), (0, 0), gf3) == ()
        assert linear_combination((), (1, 0), gf3) is None

    def test_length_mismatch(self, gf3):
        with pytest.raises(DimensionMismatch):
            linear_combination(((1, 0), (1,)), (0, 0), gf3)

    def test_solution_replays(self, gf5, seeded_rng):
        for _ in range(40):
            vecs = tuple(tuple(seeded_rng.randrange(5) for _ in range(3))
                         for _ in range(seeded_rng.randrange(1, 4)))
            target = tuple(seeded_rng.randrange(5) for _ in range(3))
            sol = linear_combination(vecs, target, gf5)
            if sol is None:
                continue
            acc = [0, 0, 0]
            for c, v in zip(sol, vecs):
                for i in range(3):
                    acc[i] = gf5._add(acc[i], gf5._mul(c, v[i]))
            assert tuple(acc) == target


GF9 = build_field(3, 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=8), min_size=4, max_size=4),
       st.lists(st.integers(min_value=0, max_value=8), min_size=4, max_size=4))
def test_det_is_multiplicative_gf9(ea, eb):
    a = Mat(GF9, 2, tuple(ea))
    b = Mat(GF9, 2, tuple(eb))
    assert det(a * b) == GF9._mul(det(a), det(b))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=8), min_size=9, max_size=9))
def test_char_poly_matches_oracle_gf9(entries):
    m = Mat(GF9, 3, tuple(entries))
    assert char_poly(m) == char_poly_laplace(m)
