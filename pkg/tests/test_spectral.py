import random

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import constant_valency_instances, small_graphs
from helpers import (
    C3,
    C4,
    C6,
    K2,
    K4,
    P3,
    bijective_labeling,
    random_constant_valency_instance,
    worked_fixtures,
)
from zigzag.generators import cycle, path
from zigzag.graphs import Graph, VertexMap, identity_map
from zigzag.labeling import constant_labeling, image_valency
from zigzag.product import zigzag_product
from zigzag.spectral import (
    MATCH_TOL,
    RESIDUAL_TOL,
    EigenPair,
    ZeroCertificate,
    adjacency_eigenpairs,
    adjacency_matrix,
    adjacency_spectrum,
    cover_radius_check,
    descend_eigenvector,
    laplacian_containment_check,
    lift_eigenvector,
    multisets_match,
    nonzero_eigenvalues,
    normalized_laplacian_spectrum,
    normalized_radius,
    radius_comparison_check,
    spectrum_contained,
)


def mod_map(big, small, n):
    return VertexMap(big, small, {i: i % n for i in big.vertices})


def c4p3():
    return zigzag_product(C4, P3, constant_labeling(C4, P3, 1))


class TestAdjacencySpectrum:
    def test_k2(self):
        r = adjacency_spectrum(K2)
        assert np.allclose(r.eigenvalues, [1, -1], atol=MATCH_TOL)
        assert r.rho == pytest.approx(1)
        assert r.lambda2 is None
        assert r.gap is None

    def test_c4(self):
        r = adjacency_spectrum(C4)
        assert np.allclose(r.eigenvalues, [2, 0, 0, -2], atol=MATCH_TOL)
        assert r.lambda2 == pytest.approx(0, abs=MATCH_TOL)
        assert r.gap == pytest.approx(2, abs=MATCH_TOL)

    def test_c4_p3_product(self):
        r = adjacency_spectrum(c4p3().product)
        assert np.allclose(r.eigenvalues, [4, 0, 0, 0, 0, 0, 0, -4], atol=MATCH_TOL)

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            adjacency_spectrum(Graph())

    @given(small_graphs(min_vertices=1))
    @settings(max_examples=40)
    def test_trace_identities(self, g):
        vals = adjacency_spectrum(g).eigenvalues
        assert abs(sum(vals)) <= 1e-9 * max(1, len(vals))
        assert abs(sum(x * x for x in vals) - 2 * len(g.edges)) <= 1e-9 * max(1, 2 * len(g.edges))


class TestNormalizedLaplacian:
    def test_k2(self):
        r = normalized_laplacian_spectrum(K2)
        assert np.allclose(r.eigenvalues, [2, 0], atol=MATCH_TOL)

    def test_c4(self):
        r = normalized_laplacian_spectrum(C4)
        assert np.allclose(r.eigenvalues, [2, 1, 1, 0], atol=MATCH_TOL)

    def test_isolated_vertex_rejected(self):
        g = Graph((0, 1, 2), ((0, 1),))
        with pytest.raises(ValueError, match="isolated"):
            normalized_laplacian_spectrum(g)

    @pytest.mark.parametrize("g", [C3, C4, C6, K4, cycle(5)])
    def test_regular_identity(self, g):
        d = g.is_regular()
        adj = adjacency_spectrum(g).eigenvalues
        lap = normalized_laplacian_spectrum(g).eigenvalues
        expected = sorted((1 - x / d for x in adj), reverse=True)
        assert np.allclose(lap, expected, atol=MATCH_TOL)

    @given(small_graphs(min_vertices=2).filter(lambda g: g.edges and all(g.degree(v) > 0 for v in g.vertices)))
    @settings(max_examples=40)
    def test_range_and_kernel(self, g):
        vals = normalized_laplacian_spectrum(g).eigenvalues
        assert all(-MATCH_TOL <= x <= 2 + MATCH_TOL for x in vals)
        assert min(vals) == pytest.approx(0, abs=MATCH_TOL)


class TestEigenPairs:
    def test_bogus_pair_rejected(self):
        with pytest.raises(ValueError, match="residual"):
            EigenPair(C4, 1.5, np.ones(4))

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError, match="zero"):
            EigenPair(C4, 2.0, np.zeros(4))

    def test_full_decomposition_verified(self):
        pairs = adjacency_eigenpairs(C6)
        assert len(pairs) == 6
        values = [p.value for p in pairs]
        assert values == sorted(values, reverse=True)
        for p in pairs:
            assert np.linalg.norm(p.vector) == pytest.approx(1)

    def test_sign_convention(self):
        for p in adjacency_eigenpairs(K4):
            lead = next(x for x in p.vector if abs(x) > 1e-12)
            assert lead > 0


class TestLiftEigenvector:
    def test_k2_k2_value_preserved(self):
        z = zigzag_product(K2, K2, constant_labeling(K2, K2, 0))
        top = adjacency_eigenpairs(K2)[0]
        lifted = lift_eigenvector(top, z)
        assert lifted.value == pytest.approx(1)

    def test_c4_p3_doubles_values(self):
        z = c4p3()
        for ep in adjacency_eigenpairs(C4):
            lifted = lift_eigenvector(ep, z)
            assert lifted.value == pytest.approx(2 * ep.value, abs=RESIDUAL_TOL)

    def test_fiber_structure_of_lifted_vector(self):
        z = c4p3()
        ep = adjacency_eigenpairs(C4)[0]
        lifted = lift_eigenvector(ep, z)
        idx = {v: k for k, v in enumerate(z.product.vertices)}
        for (u, i) in z.product.vertices:
            for (w, j) in z.product.vertices:
                if u == w:
                    assert lifted.vector[idx[(u, i)]] == pytest.approx(lifted.vector[idx[(w, j)]])

    def test_wrong_graph_rejected(self):
        z = c4p3()
        ep = adjacency_eigenpairs(C6)[0]
        with pytest.raises(ValueError):
            lift_eigenvector(ep, z)

    def test_non_locally_constant_rejected(self):
        a = bijective_labeling(C3, K2)
        z = zigzag_product(C3, K2, a)
        ep = adjacency_eigenpairs(C3)[0]
        with pytest.raises(ValueError, match="locally constant"):
            lift_eigenvector(ep, z)


class TestDescendEigenvector:
    def test_round_trip_on_c4(self):
        z = c4p3()
        for ep in adjacency_eigenpairs(C4):
            if abs(ep.value) <= MATCH_TOL:
                continue
            back = descend_eigenvector(lift_eigenvector(ep, z), z)
            assert back.value == pytest.approx(ep.value, abs=RESIDUAL_TOL)
            assert np.allclose(back.vector, ep.vector, atol=RESIDUAL_TOL)

    def test_zero_certificate(self):
        z = c4p3()
        zero = next(p for p in adjacency_eigenpairs(z.product) if abs(p.value) < MATCH_TOL)
        out = descend_eigenvector(zero, z)
        assert isinstance(out, ZeroCertificate)

    def test_k2_k2_negative_value(self):
        z = zigzag_product(K2, K2, constant_labeling(K2, K2, 0))
        bottom = adjacency_eigenpairs(z.product)[-1]
        out = descend_eigenvector(bottom, z)
        assert out.value == pytest.approx(-1)

    def test_every_nonzero_product_eigenvalue_descends(self):
        z = zigzag_product(C6, P3, constant_labeling(C6, P3, 1))
        for ep in adjacency_eigenpairs(z.product):
            out = descend_eigenvector(ep, z)
            if isinstance(out, ZeroCertificate):
                continue
            assert out.value == pytest.approx(ep.value / 2, abs=RESIDUAL_TOL)


class TestNormalizedRadius:
    def test_values(self):
        assert normalized_radius(K2, 1) == pytest.approx(1)
        assert normalized_radius(C4, 2) == pytest.approx(1)
        assert normalized_radius(c4p3().product, 4) == pytest.approx(1)

    def test_regularity_checked(self):
        with pytest.raises(ValueError, match="regular"):
            normalized_radius(path(3), 2)


class TestRadiusComparison:
    def test_c3_with_k2(self):
        assert radius_comparison_check(C3, K2, bijective_labeling(C3, K2))

    def test_k4_with_c3(self):
        assert radius_comparison_check(K4, C3, bijective_labeling(K4, C3))

    def test_non_bijective_labeling_named(self):
        a = constant_labeling(C3, K2, 0)
        with pytest.raises(ValueError, match="bijection"):
            radius_comparison_check(C3, K2, a)

    def test_vertex_count_hypothesis_named(self):
        # C4 is 2-regular but the label triangle has 3 vertices, not 2.
        a = constant_labeling(C4, C3, 1)
        with pytest.raises(ValueError, match="vertices"):
            radius_comparison_check(C4, C3, a)


class TestCoverRadius:
    def test_identity_cover(self):
        assert cover_radius_check(identity_map(C4), c4p3())

    @pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (5, 3)])
    def test_cyclic_covers(self, n, k):
        base = cycle(n)
        z = zigzag_product(base, P3, constant_labeling(base, P3, 1))
        assert cover_radius_check(mod_map(cycle(k * n), base, n), z)

    def test_radii_agree_for_connected_regular_covers(self):
        z = zigzag_product(C4, P3, constant_labeling(C4, P3, 1))
        lifted = zigzag_product(cycle(8), P3, constant_labeling(cycle(8), P3, 1))
        assert adjacency_spectrum(z.product).rho == pytest.approx(
            adjacency_spectrum(lifted.product).rho
        )


class TestLaplacianContainment:
    def test_identity(self):
        assert laplacian_containment_check(identity_map(C4), c4p3())

    def test_c6_over_c3(self):
        z = zigzag_product(C3, P3, constant_labeling(C3, P3, 1))
        assert laplacian_containment_check(mod_map(C6, C3, 3), z)

    def test_expected_values_for_c3_c6(self):
        z3 = zigzag_product(C3, P3, constant_labeling(C3, P3, 1))
        z6 = zigzag_product(C6, P3, constant_labeling(C6, P3, 1))
        small = normalized_laplacian_spectrum(z3.product)
        big = normalized_laplacian_spectrum(z6.product)
        assert np.allclose(small.eigenvalues, [1.5, 1.5, 1, 1, 1, 0], atol=MATCH_TOL)
        assert spectrum_contained(small, big)

    def test_non_cover_rejected(self):
        z = zigzag_product(C3, P3, constant_labeling(C3, P3, 1))
        g = Graph((), ((0, 1), (1, 2), (0, 2), (3, 4)))
        m = VertexMap(g, C3, {0: 0, 1: 1, 2: 2, 3: 0, 4: 1})
        with pytest.raises(ValueError):
            laplacian_containment_check(m, z)


class TestSpectrumScaling:
    @pytest.mark.parametrize("seed", range(6))
    def test_nonzero_spectrum_scales_by_valency(self, seed):
        rng = random.Random(1000 + seed)
        g, h, a = random_constant_valency_instance(rng)
        z = zigzag_product(g, h, a)
        if len(z.product.vertices) > 40 or not z.product.vertices:
            return
        n = image_valency(a)
        base = nonzero_eigenvalues(adjacency_spectrum(g))
        prod = nonzero_eigenvalues(adjacency_spectrum(z.product))
        assert multisets_match([n * x for x in base], prod)

    def test_gap_scales_when_defined(self):
        z = zigzag_product(C6, P3, constant_labeling(C6, P3, 1))
        base = adjacency_spectrum(C6)
        prod = adjacency_spectrum(z.product)
        assert prod.gap == pytest.approx(2 * base.gap, abs=MATCH_TOL)

    def test_product_can_gain_a_gap(self):
        # K2 alone has no second modulus; the product acquires zeros.
        z = zigzag_product(K2, P3, constant_labeling(K2, P3, 1))
        assert adjacency_spectrum(K2).lambda2 is None
        assert adjacency_spectrum(z.product).lambda2 == pytest.approx(0, abs=MATCH_TOL)

    @given(constant_valency_instances(max_g=5))
    @settings(max_examples=25)
    def test_scaling_property(self, inst):
        g, h, a = inst
        z = zigzag_product(g, h, a)
        if len(z.product.vertices) > 40 or not z.product.vertices:
            return
        n = image_valency(a)
        base = nonzero_eigenvalues(adjacency_spectrum(g))
        prod = nonzero_eigenvalues(adjacency_spectrum(z.product))
        assert multisets_match([n * x for x in base], prod)


def test_spectra_of_worked_fixture_products_are_real_symmetric():
    for name, g, h, a in worked_fixtures():
        z = zigzag_product(g, h, a)
        if not z.product.vertices:
            continue
        mat = adjacency_matrix(z.product)
        assert np.array_equal(mat, mat.T)
        report = adjacency_spectrum(z.product)
        assert len(report.eigenvalues) == len(z.product.vertices)
        assert report.rho == pytest.approx(max(abs(x) for x in report.eigenvalues))
