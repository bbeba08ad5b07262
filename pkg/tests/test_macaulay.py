import pytest

from errors import InvalidDegree
from macaulay import (
    check_h_inequalities,
    expand,
    is_o_sequence,
    lex_growth,
    pseudopower,
    reconstruct,
)


class TestExpansion:
    def test_examples(self):
        assert expand(3, 1).terms == ((3, 1),)
        assert expand(4, 2).terms == ((3, 2), (1, 1))
        for i in range(1, 6):
            assert expand(1, i).terms == ((i, i),)

    @pytest.mark.parametrize("j,i", [(0, 1), (5, 0), (-1, 2)])
    def test_invalid(self, j, i):
        with pytest.raises(InvalidDegree):
            expand(j, i)

    def test_round_trip_and_shape(self):
        for i in range(1, 7):
            for j in range(1, 500):
                e = expand(j, i)
                assert reconstruct(e) == j
                tops = [a for a, _ in e.terms]
                degrees = [k for _, k in e.terms]
                assert tops == sorted(tops, reverse=True) and len(set(tops)) == len(tops)
                assert degrees == list(range(i, i - len(degrees), -1))
                assert tops[-1] >= degrees[-1] >= 1

    @pytest.mark.slow
    def test_round_trip_wide(self):
        for i in range(1, 7):
            for j in range(1, 10**4 + 1):
                assert reconstruct(expand(j, i)) == j


class TestPseudopower:
    def test_examples(self):
        assert pseudopower(3, 1) == 6
        assert pseudopower(10, 2) == 20
        assert pseudopower(4, 2) == 5
        assert pseudopower(0, 3) == 0
        for i in range(1, 6):
            assert pseudopower(1, i) == 1

    def test_invalid_degree(self):
        with pytest.raises(InvalidDegree):
            pseudopower(3, 0)

    def test_monotone_and_growing(self):
        for i in range(1, 5):
            values = [pseudopower(j, i) for j in range(0, 200)]
            assert values == sorted(values)
            assert all(v >= j for j, v in enumerate(values))

    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_matches_lex_segment_growth(self, i):
        for j in range(1, 21):
            assert pseudopower(j, i) == lex_growth(j, i), (j, i)


class TestOSequence:
    def test_examples(self):
        assert is_o_sequence((1, 2, 3)).ok
        verdict = is_o_sequence((1, 1, 5))
        assert not verdict.ok and verdict.violation == 1
        assert is_o_sequence((1,)).ok

    def test_flags_leading_entry(self):
        assert not is_o_sequence((2, 1)).starts_with_one

    def test_negative_entry(self):
        assert not is_o_sequence((1, -1)).ok


class TestInequalities:
    def test_uniform(self):
        verdict = check_h_inequalities((1, 2, 3), 2)
        assert verdict.ok
        assert verdict.violations == ()

    def test_circuit(self):
        assert check_h_inequalities((1, 1, 1, 1, 1), 4).ok

    def test_corrupted_vector(self):
        verdict = check_h_inequalities((1, 3, 2, 9), 3)
        assert verdict.monotone
        assert not verdict.symmetric_bound
        assert verdict.g_growth
        assert [(v["family"], v["i"]) for v in verdict.violations] == [("symmetric_bound", 1)]

    def test_decreasing_front(self):
        verdict = check_h_inequalities((1, 3, 2, 4, 5), 4)
        assert not verdict.monotone
        assert verdict.violations[0] == {"family": "monotone", "i": 2, "detail": "h_1 = 3 > h_2 = 2"}

    def test_broken_circuit_vector_of_m_s_5(self):
        assert check_h_inequalities((1, 4, 10, 10, 5, 1), 5).ok

    def test_g_growth_violation(self):
        # g = (1, 1, 3): 3 > 1^<1> = 1
        verdict = check_h_inequalities((1, 2, 5, 5, 5, 2, 1), 6)
        assert verdict.monotone and verdict.symmetric_bound
        assert not verdict.g_growth

    def test_zero_padding(self):
        verdict = check_h_inequalities((1, 2), 4)
        assert not verdict.symmetric_bound
        assert verdict.to_dict()["violations"]
