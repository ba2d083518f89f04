"""Companion matrices, trace-matched decompositions, and trace sets."""

import dataclasses

import pytest

from weakper.errors import (
    BadDimension,
    EnumerationTooLarge,
    FieldTooSmall,
    NotMonic,
    TraceNotRealizable,
    ZeroDegree,
)
from weakper.poly import Poly
from weakper.mat import Mat, char_poly, min_poly
from weakper.companion import (
    companion_of,
    enumerate_companions,
    potent_companion_with_trace,
    potent_trace_set,
    trace_matched_decomposition,
)


class TestCompanionOf:
    def test_frozen_layout(self, gf3):
        form = companion_of(Poly(gf3, (1, 0, 1)))
        assert form.matrix.rows() == ((0, 2), (1, 0))
        assert form.n == 2
        assert form.poly.coeffs == (1, 0, 1)

    def test_char_and_min_poly_recover_input(self, gf5):
        g = Poly(gf5, (2, 4, 0, 1))
        form = companion_of(g)
        assert char_poly(form.matrix) == g
        assert min_poly(form.matrix) == g

    def test_trace_is_negated_subleading_coefficient(self, gf7):
        for a in range(7):
            g = Poly(gf7, (3, a, 1))
            assert companion_of(g).matrix.trace() == gf7._neg(a)

    def test_rejects_non_monic(self, gf3):
        with pytest.raises(NotMonic):
            companion_of(Poly(gf3, (1, 2)))

    def test_rejects_constants(self, gf3):
        with pytest.raises(ZeroDegree):
            companion_of(Poly(gf3, (1,)))


class TestEnumerateCompanions:
    def test_count_and_order_gf2(self, gf2):
        forms = list(enumerate_companions(2, gf2))
        assert [f.poly.coeffs for f in forms] == [
            (0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]

    def test_count_matches_field_power(self, gf3, gf5):
        assert sum(1 for _ in enumerate_companions(2, gf3)) == 9
        assert sum(1 for _ in enumerate_companions(2, gf5)) == 25

    def test_bound_enforced(self, gf2):
        with pytest.raises(EnumerationTooLarge):
            list(enumerate_companions(30, gf2))

    def test_bad_dimension(self, gf2):
        with pytest.raises(BadDimension):
            list(enumerate_companions(0, gf2))


class TestPotentCompanionWithTrace:
    def test_frozen_gf3(self, gf3):
        form = potent_companion_with_trace(0, 2, gf3)
        # roots 1 and 2: X^2 - 1
        assert form.poly.coeffs == (2, 0, 1)
        assert form.matrix.trace() == 0

    def test_frozen_gf5_dim4(self, gf5):
        form = potent_companion_with_trace(0, 4, gf5)
        # all four units: X^4 - 1
        assert form.poly.coeffs == (4, 0, 0, 0, 1)

    def test_frozen_gf5_nonzero_trace(self, gf5):
        assert potent_companion_with_trace(2, 2, gf5).poly.coeffs == (0, 3, 1)

    def test_result_is_potent_with_distinct_roots(self, gf5):
        from weakper.mat import is_potent
        for t in range(5):
            form = potent_companion_with_trace(t, 2, gf5)
            assert is_potent(form.matrix)
            assert form.matrix.trace() == t

    def test_char_two_zero_trace_unrealizable(self, gf4):
        # distinct elements of a characteristic-2 field never cancel in pairs
        with pytest.raises(TraceNotRealizable):
            potent_companion_with_trace(0, 2, gf4)

    def test_needs_enough_elements(self, gf2, gf3):
        with pytest.raises(FieldTooSmall):
            potent_companion_with_trace(0, 2, gf2)
        with pytest.raises(FieldTooSmall):
            potent_companion_with_trace(1, 3, gf3)


class TestTraceMatchedDecomposition:
    def test_every_companion_splits_gf3(self, gf3):
        for form in enumerate_companions(2, gf3):
            w = trace_matched_decomposition(form)
            assert w.source == "constructive"
            assert w.verify(form.matrix)
            assert w.verify(form.matrix, check_iterative=True)

    def test_every_companion_splits_gf5(self, gf5):
        for form in enumerate_companions(2, gf5):
            assert trace_matched_decomposition(form).verify(form.matrix)

    def test_witness_parts(self, gf3):
        form = companion_of(Poly(gf3, (1, 0, 1)))
        w = trace_matched_decomposition(form)
        assert w.potent + w.nilpotent == form.matrix
        assert (w.nilpotent * w.nilpotent).is_zero()
        assert w.potent ** w.exponent == w.potent

    def test_tampered_witness_fails(self, gf3):
        form = companion_of(Poly(gf3, (1, 0, 1)))
        w = trace_matched_decomposition(form)
        bad = dataclasses.replace(w, exponent=w.exponent + 1)
        assert not bad.verify(form.matrix)
        bad = dataclasses.replace(w, nilpotent=Mat.identity(gf3, 2))
        assert not bad.verify(form.matrix)
        bad = dataclasses.replace(w, commuting=not w.commuting)
        assert not bad.verify(form.matrix)

    def test_wrong_matrix_fails(self, gf3):
        w = trace_matched_decomposition(companion_of(Poly(gf3, (1, 0, 1))))
        other = companion_of(Poly(gf3, (2, 0, 1))).matrix
        assert not w.verify(other)

    def test_serialize_round_trip_fields(self, gf3):
        form = companion_of(Poly(gf3, (1, 0, 1)))
        payload = trace_matched_decomposition(form).serialize(form)
        assert payload["field"] == "3^1/0,1"
        assert payload["n"] == 2
        assert payload["companion_coeffs"] == [1, 0]
        assert payload["source"] == "constructive"


class TestPotentTraceSet:
    def test_frozen_small_sets(self, gf2, gf3, gf4, gf5):
        assert potent_trace_set(1, gf2) == {0, 1}
        assert potent_trace_set(1, gf5) == {0, 1, 2, 3, 4}
        assert potent_trace_set(2, gf2) == {1}
        assert potent_trace_set(2, gf3) == {0, 1, 2}
        assert potent_trace_set(2, gf4) == {1, 2, 3}
        assert potent_trace_set(3, gf2) == {0, 1}
        assert potent_trace_set(3, gf3) == {0, 1, 2}

    def test_members_match_realizability(self, gf4):
        for t in range(4):
            realizable = True
            try:
                potent_companion_with_trace(t, 2, gf4)
            except TraceNotRealizable:
                realizable = False
            assert (t in potent_trace_set(2, gf4)) == realizable

    def test_bad_dimension(self, gf3):
        with pytest.raises(BadDimension):
            potent_trace_set(0, gf3)
