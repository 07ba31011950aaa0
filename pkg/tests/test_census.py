"""Counting self-inverse and invertible elements against the predictions."""

from __future__ import annotations

import pytest

from meadows import (
    Signature,
    build_from_signature,
    check_cube_characterization,
    count_invertibles,
    count_self_inverses,
    direct_product,
    enumerate_signatures,
    is_meadow,
    make_gf,
    make_zmod_ring,
    predict_counts,
    signature_of,
    take_census,
    totalize_inverse,
)


def z10():
    return totalize_inverse(make_zmod_ring(10))


class TestBruteForceCounts:
    def test_z10_self_inverses(self):
        count, elements = count_self_inverses(z10())
        assert count == 6
        assert elements == (0, 1, 4, 5, 6, 9)

    def test_z10_invertibles(self):
        count, elements = count_invertibles(z10())
        assert count == 4
        assert elements == (1, 3, 7, 9)

    def test_gf4(self):
        # 1 = -1 in characteristic 2, so only 0 and 1 are self-inverse
        count, elements = count_self_inverses(make_gf(2, 2))
        assert (count, elements) == (2, (0, 1))
        count, elements = count_invertibles(make_gf(2, 2))
        assert (count, elements) == (3, (1, 2, 3))

    def test_gf9_has_eight_invertibles(self):
        assert count_invertibles(make_gf(3, 2))[0] == 8

    def test_gf3(self):
        # 0, 1 and -1 = 2 are each their own inverse
        assert count_self_inverses(make_gf(3))[1] == (0, 1, 2)


class TestPredictions:
    @pytest.mark.parametrize("pairs,expected", [
        ([(2, 1), (5, 1)], (6, 4)),      # 2*3 self-inverse, 1*4 invertible
        ([(3, 1)], (3, 2)),
        ([(2, 1)], (2, 1)),
        ([(2, 2)], (2, 3)),              # characteristic 2: 1 = -1 in GF(4) too
        ([(2, 3)], (2, 7)),
        ([(3, 2)], (3, 8)),
        ([], (1, 1)),
        ([(2, 1), (2, 1), (3, 1)], (12, 2)),
    ])
    def test_closed_form(self, pairs, expected):
        assert predict_counts(Signature.of_pairs(pairs)) == expected

    def test_multiplicative_over_factors(self):
        a, b = Signature.of_pairs([(2, 2)]), Signature.of_pairs([(3, 1), (5, 1)])
        combined = Signature.of_pairs(list(a.entries) + list(b.entries))
        sa, ia = predict_counts(a)
        sb, ib = predict_counts(b)
        assert predict_counts(combined) == (sa * sb, ia * ib)


class TestCensusReport:
    def test_z10_report(self):
        report = take_census(z10())
        assert report.order == 10
        assert report.self_inverse_count == 6
        assert report.invertible_count == 4
        assert report.predicted_self_inverse == 6
        assert report.predicted_invertible == 4
        assert report.counts_match

    def test_counts_match_everywhere_small(self):
        for n in range(1, 33):
            for sig in enumerate_signatures(n):
                assert take_census(build_from_signature(sig)).counts_match


class TestCubeCharacterization:
    def test_holds_on_meadows(self):
        for m in (z10(), make_gf(2, 2), make_gf(3, 2), direct_product([])):
            assert check_cube_characterization(m)

    def test_z10_cube_set(self):
        m = z10()
        cubes = [x for x in range(10) if m.mul[m.mul[x, x], x] == x]
        assert cubes == [0, 1, 4, 5, 6, 9]  # same as the self-inverse set


class TestEnumerateSignatures:
    @pytest.mark.parametrize("n,count", [(10, 1), (4, 2), (12, 2), (16, 5), (1, 1), (64, 11)])
    def test_counts(self, n, count):
        assert len(enumerate_signatures(n)) == count

    def test_n4_signatures(self):
        sigs = enumerate_signatures(4)
        assert [s.entries for s in sigs] == [((2, 1), (2, 1)), ((2, 2),)]

    def test_n12_signatures(self):
        sigs = enumerate_signatures(12)
        # entries sort by (p, k), so the GF(4) factor prints before GF(3)
        assert [str(s) for s in sigs] == [
            "GF(2) x GF(2) x GF(3)",
            "GF(4) x GF(3)",
        ]

    def test_orders_match(self):
        for n in (1, 2, 6, 16, 36, 60):
            for sig in enumerate_signatures(n):
                assert sig.order == n

    def test_pairwise_non_isomorphic(self):
        meadows = [build_from_signature(s) for s in enumerate_signatures(16)]
        for i, a in enumerate(meadows):
            for b in meadows[i + 1:]:
                assert signature_of(a) != signature_of(b)

    def test_deterministic_order(self):
        assert enumerate_signatures(16) == enumerate_signatures(16)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            enumerate_signatures(0)


class TestBuildFromSignature:
    def test_round_trips_signature(self):
        sig = Signature.of_pairs([(2, 2), (3, 1), (3, 1)])
        m = build_from_signature(sig)
        assert is_meadow(m)
        assert signature_of(m) == sig

    def test_z10_twin(self):
        m = build_from_signature(Signature.of_pairs([(2, 1), (5, 1)]))
        assert m.order == 10
        assert take_census(m).self_inverse_count == 6

    def test_empty_signature(self):
        assert build_from_signature(Signature.of_pairs([])).order == 1
