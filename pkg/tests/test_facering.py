import numpy as np
import pytest

from complexes import BROKEN_CIRCUIT, INDEPENDENCE, SimplicialComplex, complex_for, h_vector, independence_complex
from errors import DimensionMismatch, InvalidDegree, LsopNotFound
from facering import (
    LinearForms,
    QuotientRing,
    face_monomials,
    face_quotient_dim,
    graded_piece,
    hilbert_check,
    hilbert_table,
    lsop_random,
    lsop_verify,
    mult_injective,
    reduce_mod_ideal,
)
from gelement import draw_trial
from linalg import abs_determinant, random_prime
from matroid import ElementOrder, circuit, m_s, uniform

from .conftest import fixture_matroids, fixture_params, load

U24 = independence_complex(uniform(2, 4))
PATH = SimplicialComplex(3, ((0, 1), (1, 2)))
MATROIDS = fixture_matroids()
LIGHT = [name for name in MATROIDS if name not in ("m_s(4)", "m_s(5)")]


def lsop(c, seed=1, bound=97):
    forms, _ = lsop_random(c, bound, np.random.default_rng(seed))
    return forms


class TestMonomials:
    def test_counts(self):
        assert face_monomials(U24, 0) == [(0, 0, 0, 0)]
        assert len(face_monomials(U24, 1)) == 4
        assert len(face_monomials(U24, 2)) == 10

    def test_nonfaces_are_left_out(self):
        # x0 x2 is not a face monomial of the path 0-1-2
        assert (1, 0, 1) not in face_monomials(PATH, 2)
        assert len(face_monomials(PATH, 2)) == 5

    def test_grevlex_order(self):
        assert face_monomials(PATH, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def test_negative_degree(self):
        with pytest.raises(InvalidDegree):
            face_monomials(U24, -1)

    def test_reduce_mod_ideal(self):
        index = {m: k for k, m in enumerate(face_monomials(PATH, 2))}
        vector = reduce_mod_ideal({(1, 1, 0): 1, (1, 0, 1): 1}, PATH, 2)
        expected = [0] * len(index)
        expected[index[(1, 1, 0)]] = 1
        assert vector == expected
        assert reduce_mod_ideal({(1, 0, 1): 4}, PATH, 2) == [0] * len(index)


class TestLsop:
    def test_identity_on_a_simplex(self):
        simplex = SimplicialComplex(2, ((0, 1),))
        assert lsop_verify(simplex, LinearForms(2, ((1, 0), (0, 1))))

    def test_zero_column(self):
        assert not lsop_verify(U24, LinearForms(4, ((0, 1, 2, 3), (0, 3, 1, 2))))

    def test_wrong_shape(self):
        with pytest.raises(DimensionMismatch):
            lsop_verify(U24, LinearForms(4, ((1, 2, 3, 4),)))

    def test_random_is_seeded(self):
        assert lsop(U24, seed=5) == lsop(U24, seed=5)
        assert lsop_verify(U24, lsop(U24))

    def test_small_bound_on_a_simplex(self):
        simplex = SimplicialComplex(3, ((0, 1, 2),))
        forms, attempts = lsop_random(simplex, 1, np.random.default_rng(0))
        assert lsop_verify(simplex, forms)
        assert attempts >= 1

    def test_zero_bound(self):
        with pytest.raises(LsopNotFound):
            lsop_random(U24, 0, np.random.default_rng(0), attempts=3)


class TestGradedPieces:
    def test_degree_zero(self):
        assert graded_piece(U24, lsop(U24), 0).quotient_dim == 1

    def test_uniform_hilbert_function(self):
        ring = QuotientRing(U24, lsop(U24))
        assert ring.hilbert_function() == (1, 2, 3, 0)
        assert ring.top_degree() == 2

    @pytest.mark.parametrize("target", [INDEPENDENCE, BROKEN_CIRCUIT])
    @pytest.mark.parametrize("name", fixture_params(LIGHT))
    def test_literal_relations_agree(self, name, target):
        c = complex_for(MATROIDS[name], target)
        forms = lsop(c, seed=5)
        ring = QuotientRing(c, forms)
        for d in range(c.rank + 2):
            assert face_quotient_dim(c, forms, d) == ring.piece(d).quotient_dim, d

    @pytest.mark.slow
    @pytest.mark.parametrize("target", [INDEPENDENCE, BROKEN_CIRCUIT])
    @pytest.mark.parametrize("name", ["m_s(4)", "m_s(5)"])
    def test_literal_relations_agree_up_to_s(self, name, target):
        c = complex_for(MATROIDS[name], target)
        forms = lsop(c, seed=5)
        ring = QuotientRing(c, forms)
        for d in range(c.rank + 1):
            assert face_quotient_dim(c, forms, d) == ring.piece(d).quotient_dim, d

    def test_quotient_basis_has_the_right_size(self):
        ring = QuotientRing(U24, lsop(U24))
        for d in range(3):
            piece = ring.piece(d)
            assert len(piece.quotient_basis) == piece.exact_dim

    def test_broken_circuit_m_s_5(self):
        c = complex_for(m_s(5), BROKEN_CIRCUIT, ElementOrder.natural(10))
        forms, _, modulus = draw_trial(c, 1, 0, 97, exact=False)
        ring = QuotientRing(c, forms, modulus)
        assert ring.hilbert_function(6) == (1, 4, 10, 10, 5, 1, 0)
        assert all(ring.piece(d).certified for d in range(7))
        assert ring.top_degree() == 5

    def test_modular_pieces_are_certified_by_h(self):
        c = independence_complex(load("m1"))
        forms, _, modulus = draw_trial(c, 3, 0, 97, exact=False)
        modular = QuotientRing(c, forms, modulus)
        exact = QuotientRing(c, forms)
        for d in range(c.rank + 2):
            assert modular.piece(d).certified
            assert modular.piece(d).exact_dim == exact.piece(d).exact_dim
            assert len(modular.piece(d).quotient_basis) == modular.piece(d).exact_dim

    def test_pivot_facet_has_the_smallest_determinant(self):
        c = independence_complex(load("m1"))
        forms = lsop(c, seed=2)
        ring = QuotientRing(c, forms)
        chosen = abs_determinant(forms.columns(ring.pivot_facet))
        assert chosen > 0
        for facet in c.facets:
            det = abs_determinant(forms.columns(facet))
            assert det == 0 or chosen <= det

    def test_negative_degree(self):
        with pytest.raises(InvalidDegree):
            QuotientRing(U24, lsop(U24)).piece(-1)


class TestHilbertCheck:
    @pytest.mark.parametrize("name", ["u24", "m1", "m2", "c4", "triangle", pytest.param("m5", marks=pytest.mark.slow)])
    @pytest.mark.parametrize("target", [INDEPENDENCE, BROKEN_CIRCUIT])
    def test_quotient_dims_match_h(self, name, target):
        m = load(name)
        c = complex_for(m, target)
        for seed in (1, 2, 3):
            forms, _, _ = draw_trial(c, seed, 0, 97)
            table = hilbert_check(m, target, forms)
            assert table.ok, table.to_dict()
            assert table.rows[-1]["quotient_dim"] == 0

    @pytest.mark.parametrize("target", [INDEPENDENCE, BROKEN_CIRCUIT])
    def test_m_s_5_modular(self, target):
        m = m_s(5)
        c = complex_for(m, target)
        for seed in (1, 2, 3):
            forms, _, modulus = draw_trial(c, seed, 0, 97, exact=False)
            table = hilbert_check(m, target, forms, modulus=modulus)
            assert table.ok, table.to_dict()
            assert table.rows[-1]["quotient_dim"] == 0

    def test_circuit_of_four(self):
        c = independence_complex(circuit(4))
        table = hilbert_table(c, lsop(c))
        assert [row["quotient_dim"] for row in table.rows] == [1, 1, 1, 1, 0]

    def test_not_an_lsop(self):
        table = hilbert_table(U24, LinearForms(4, ((0, 1, 2, 3), (0, 3, 1, 2))))
        assert not table.lsop
        assert table.rows == ()
        assert not table.ok

    @pytest.mark.parametrize("target", [INDEPENDENCE, BROKEN_CIRCUIT])
    @pytest.mark.parametrize("name", fixture_params())
    def test_modular_dims_agree_with_exact(self, name, target):
        c = complex_for(MATROIDS[name], target)
        forms = lsop(c)
        exact = QuotientRing(c, forms)
        rng = np.random.default_rng([11, 0])
        for _ in range(3):
            modular = QuotientRing(c, forms, random_prime(rng))
            for d in range(c.rank + 2):
                assert modular.piece(d).quotient_dim == exact.piece(d).quotient_dim


class TestMultiplication:
    def test_identity_map(self):
        forms = lsop(U24)
        cert = mult_injective(U24, forms, (1, 2, 3, 4), 1, 1)
        assert cert.injective and cert.arithmetic == "trivial"

    def test_zero_source(self):
        forms = lsop(U24)
        cert = mult_injective(U24, forms, (1, 2, 3, 4), 3, 4)
        assert cert.injective and cert.source_dim == 0

    def test_line_segment_pair(self):
        # two points, theta = x0 + x1, omega = x0
        c = independence_complex(uniform(1, 2))
        forms = LinearForms(2, ((1, 1),))
        cert = mult_injective(c, forms, (1, 0), 0, 1)
        assert cert.injective
        assert cert.arithmetic == "exact"

    def test_zero_omega(self):
        forms = lsop(U24)
        assert not mult_injective(U24, forms, (0, 0, 0, 0), 0, 2).injective

    def test_degree_order(self):
        with pytest.raises(InvalidDegree):
            mult_injective(U24, lsop(U24), (1, 1, 1, 1), 2, 1)

    def test_omega_length(self):
        with pytest.raises(DimensionMismatch):
            mult_injective(U24, lsop(U24), (1, 1), 0, 1)

    def test_broken_circuit_m_s_5_has_a_kernel(self):
        c = complex_for(m_s(5), BROKEN_CIRCUIT)
        forms, _, _ = draw_trial(c, 1, 0, 97)
        cert = mult_injective(c, forms, forms.omega, 2, 3)
        assert not cert.injective
        assert cert.arithmetic == "exact"

    @pytest.mark.parametrize("name", fixture_params())
    def test_modular_injective_is_confirmed_exactly(self, name):
        c = independence_complex(MATROIDS[name])
        r = h_vector(c).top_degree
        for seed in (1, 2):
            forms, _, modulus = draw_trial(c, seed, 0, 97, exact=False)
            modular = QuotientRing(c, forms, modulus)
            exact = QuotientRing(c, forms)
            for i in range(r // 2 + 1):
                cert = mult_injective(c, forms, forms.omega, i, r - i, ring=modular)
                if cert.injective:
                    assert mult_injective(c, forms, forms.omega, i, r - i, ring=exact).injective, (seed, i)

    def test_h_vector_is_cached(self):
        ring = QuotientRing(U24, lsop(U24))
        assert ring.h == h_vector(U24)
