import numpy as np
import pytest

from complexes import broken_circuit_complex, g_vector, h_vector, independence_complex
from errors import HasColoops, InvalidDegree, WitnessNotFound
from facering import LinearForms
from gelement import (
    counterexample_m_s,
    draw_trial,
    g_element_search,
    g_element_verify,
    omega_quotient_dims,
    quotient_by_omega,
    strong_lefschetz_ranks,
    subdivision_pair,
)
from macaulay import is_o_sequence
from matroid import ElementOrder, circuit, direct_sum, from_bases, m_s, uniform

from .conftest import fixture_matroids, fixture_params, load

MATROIDS = fixture_matroids()


class TestVerify:
    def test_line_segment_pair(self):
        c = independence_complex(uniform(1, 2))
        ok, certificates = g_element_verify(c, LinearForms(2, ((1, 1),)), (1, 0))
        assert ok
        assert [cert.to_degree for cert in certificates] == [1]

    def test_triangle_boundary(self):
        c = independence_complex(circuit(3))
        forms, _, _ = draw_trial(c, 1, 0, 97)
        ok, certificates = g_element_verify(c, forms, forms.omega)
        assert ok
        assert len(certificates) == 2

    def test_empty_complex_is_vacuous(self):
        c = independence_complex(from_bases(2, [[]]))
        ok, certificates = g_element_verify(c, LinearForms(0, ()), ())
        assert ok
        assert certificates[0].arithmetic == "trivial"

    def test_broken_circuit_m_s_5_fails(self):
        c = broken_circuit_complex(m_s(5))
        forms, _, modulus = draw_trial(c, 4, 0, 97, exact=False)
        ok, certificates = g_element_verify(c, forms, forms.omega, modulus=modulus)
        assert not ok
        assert not certificates[2].injective


class TestSearch:
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_uniform(self, seed):
        m = uniform(2, 4)
        witness = g_element_search(m, trials=16, bound=97, seed=seed)
        assert witness.seed == seed
        assert all(cert.injective for cert in witness.certificates)
        c = independence_complex(m)
        assert g_element_verify(c, witness.forms, witness.omega)[0]

    def test_reproducible(self):
        a = g_element_search(load("m1"), seed=9)
        b = g_element_search(load("m1"), seed=9)
        assert a.to_dict() == b.to_dict()

    def test_witness_regenerates_from_seed(self):
        witness = g_element_search(uniform(3, 5), seed=4)
        c = independence_complex(uniform(3, 5))
        forms, _, _ = draw_trial(c, witness.seed, witness.trial, witness.bound, exact=False)
        assert forms == witness.forms

    def test_exact_mode(self):
        witness = g_element_search(uniform(2, 4), exact=True)
        assert witness.arithmetic == "exact"

    def test_modular_mode_names_the_prime(self):
        witness = g_element_search(load("m1"), exact=False)
        assert witness.arithmetic.startswith("mod ")

    def test_coloops_refused(self):
        with pytest.raises(HasColoops):
            g_element_search(load("coloop"))

    def test_zero_bound_exhausts_trials(self):
        with pytest.raises(WitnessNotFound) as info:
            g_element_search(uniform(2, 4), trials=2, bound=0)
        assert [f["trial"] for f in info.value.details["trials"]] == [0, 1]

    @pytest.mark.parametrize("name", fixture_params())
    def test_quotient_by_omega_is_the_g_vector(self, name):
        m = MATROIDS[name]
        c = independence_complex(m)
        h = h_vector(c)
        r = h.top_degree
        for seed in (1, 2, 3):
            witness = g_element_search(m, seed=seed)
            dims = omega_quotient_dims(c, witness.forms, witness.omega, (r - 1) // 2)
            assert dims == g_vector(h, r)[: (r - 1) // 2 + 1]
            assert is_o_sequence(dims).ok

    def test_quotient_by_omega_uniform_rank_three(self):
        m = uniform(3, 6)
        c = independence_complex(m)
        witness = g_element_search(m)
        assert omega_quotient_dims(c, witness.forms, witness.omega, 1) == (1, 2)
        with pytest.raises(InvalidDegree):
            quotient_by_omega(c, witness.forms, witness.omega, -1)

    def test_strong_lefschetz_ranks(self):
        m = uniform(2, 4)
        c = independence_complex(m)
        witness = g_element_search(m)
        rows = strong_lefschetz_ranks(c, witness.forms, witness.omega)
        assert rows == ({"degree": 0, "source_dim": 1, "target_dim": 3, "rank": 1}, {"degree": 1, "source_dim": 2, "target_dim": 2, "rank": 2})

    @pytest.mark.slow
    def test_direct_sum_of_circuits(self):
        assert g_element_search(direct_sum(circuit(3), circuit(4)))


class TestSubdivisionPair:
    def test_natural(self):
        assert subdivision_pair(ElementOrder.natural(10)) == (8, 9)

    def test_reversed(self):
        assert subdivision_pair(ElementOrder(tuple(range(9, -1, -1)))) == (0, 1)

    def test_interleaved(self):
        assert subdivision_pair(ElementOrder((1, 3, 5, 7, 9, 0, 2, 4, 6, 8))) == (8, 9)
        assert subdivision_pair(ElementOrder((9, 7, 5, 3, 1, 8, 6, 4, 2, 0))) == (0, 1)


class TestCounterexample:
    @classmethod
    def setup_class(cls):
        cls.result = counterexample_m_s(s=5, trials=3, seed=1)

    def test_h_vector_and_inequalities(self):
        assert self.result.h == (1, 4, 10, 10, 5, 1, 0)
        assert self.result.inequalities.ok
        assert self.result.minor_is_simplex
        assert self.result.pair == (8, 9)

    def test_every_trial_is_obstructed(self):
        for record in self.result.trials:
            assert record["class_nonzero"]
            assert record["annihilated"]
            assert not record["single_map_injective"]
            assert record["obstructed"]
        assert not self.result.alert
        assert self.result.unexpected == ()

    def test_witnesses(self):
        assert self.result.membership_witness
        assert self.result.kernel_vector
        body = self.result.to_dict()
        assert body["note"] is None
        assert body["obstruction_applies"]

    def test_small_s_is_informational(self):
        result = counterexample_m_s(s=2, trials=1)
        assert not result.obstruction_applies
        assert not result.alert
        assert result.note

    def test_s_must_be_at_least_two(self):
        with pytest.raises(InvalidDegree):
            counterexample_m_s(s=1)

    @pytest.mark.slow
    def test_twenty_trials_and_random_orders(self):
        orders = [ElementOrder.natural(10)] + [
            ElementOrder(tuple(int(e) for e in np.random.default_rng(k).permutation(10))) for k in range(3)
        ]
        for order in orders:
            result = counterexample_m_s(s=5, order=order, trials=20, seed=1)
            assert result.inequalities.ok
            assert all(t["obstructed"] for t in result.trials), order
            assert not result.alert

    @pytest.mark.slow
    def test_s_6_reports_both_maps(self):
        result = counterexample_m_s(s=6, trials=2)
        for record in result.trials:
            assert record["power_map"]["power"] == record["power_map"]["to_degree"] - 2
            assert not record["single_map_injective"]
