from fractions import Fraction

import pytest

from helpers import C4, K2, P3, random_dart_labeling
from zigzag.generators import cycle
from zigzag.graphs import compose, identity_map, is_graph_morphism
from zigzag.labeling import constant_labeling, image_valency, is_locally_constant
from zigzag.spectral import RESIDUAL_TOL, adjacency_eigenpairs, lift_eigenvector
from zigzag.product import zigzag_product
from zigzag.tower import (
    TowerConfig,
    build_tower,
    folner_product_check,
    tower_spectrum_check,
)

import random


def c4_tower(depth, **kw):
    a = constant_labeling(C4, P3, 1)
    return build_tower(C4, P3, a, depth, TowerConfig(**kw) if kw else TowerConfig())


class TestBuildTower:
    def test_k2_tower_is_a_fixed_point(self):
        a = constant_labeling(K2, K2, 0)
        build = build_tower(K2, K2, a, 3)
        assert [len(lv.graph.vertices) for lv in build.levels] == [2, 2, 2]
        assert all(lv.spectrum.rho == pytest.approx(1) for lv in build.levels)
        assert build.valency == 1

    def test_c4_tower_sizes(self):
        build = c4_tower(3)
        assert [len(lv.graph.vertices) for lv in build.levels] == [4, 8, 16]
        assert [len(lv.graph.edges) for lv in build.levels] == [4, 16, 64]
        assert not build.truncated

    def test_depth_one(self):
        build = c4_tower(1)
        assert len(build.levels) == 1
        assert build.levels[0].pi is None
        assert build.levels[0].cover_index is None

    def test_level_invariants(self):
        build = c4_tower(3)
        for lv in build.levels:
            assert is_locally_constant(lv.labeling)
            assert image_valency(lv.labeling) == 2
        for lv in build.levels[1:]:
            assert lv.cover_index == 4
            assert lv.pi.domain == lv.graph

    def test_budget_truncation(self):
        build = c4_tower(5, budget=20)
        assert build.truncated
        assert len(build.levels) == 3
        assert build.requested_depth == 5

    def test_spectral_cap_skips_eigensolve(self):
        build = c4_tower(3, spectral_cap=10)
        assert build.levels[1].spectrum is not None
        assert build.levels[2].spectrum is None

    def test_rejects_bad_labelings(self):
        rng = random.Random(5)
        a = random_dart_labeling(rng, C4, P3)
        while is_locally_constant(a):
            a = random_dart_labeling(rng, C4, P3)
        with pytest.raises(ValueError, match="locally constant"):
            build_tower(C4, P3, a, 2)
        with pytest.raises(ValueError, match="depth"):
            c4_tower(0)

    def test_composed_projections_reach_level_one(self):
        build = c4_tower(4)
        down = identity_map(build.levels[0].graph)
        for lv in build.levels[1:]:
            down = compose(down, lv.pi)
            assert is_graph_morphism(lv.pi)
        assert down.domain == build.levels[-1].graph
        assert down.codomain == build.levels[0].graph
        assert is_graph_morphism(down)


class TestTowerSpectrumCheck:
    def test_c4_tower_report(self):
        build = c4_tower(4)
        report = tower_spectrum_check(build)
        assert report.all_ok
        assert [s.gap for s in report.levels] == pytest.approx([2, 4, 8, 16])
        for pair in report.pairs:
            assert pair.scaling == "pass"
            assert pair.containment == "pass"
            assert pair.gap == "pass"

    def test_k2_tower_constant_spectrum(self):
        a = constant_labeling(K2, K2, 0)
        report = tower_spectrum_check(build_tower(K2, K2, a, 3))
        assert report.all_ok
        for pair in report.pairs:
            assert pair.scaling == "pass"
            # K2 has no second eigenvalue modulus, so no gap to compare.
            assert pair.gap == "skipped"

    def test_skipped_verdicts_above_cap(self):
        build = c4_tower(3, spectral_cap=10)
        report = tower_spectrum_check(build)
        assert report.pairs[-1].scaling == "skipped"
        assert report.all_ok

    def test_needs_two_levels(self):
        with pytest.raises(ValueError):
            tower_spectrum_check(c4_tower(1))

    def test_eigenpair_chain_lift(self):
        build = c4_tower(4)
        for ep in adjacency_eigenpairs(C4):
            if abs(ep.value) < 1e-6:
                continue
            carried = ep
            for lv in build.levels[:-1]:
                z = zigzag_product(lv.graph, P3, lv.labeling)
                carried = lift_eigenvector(carried, z)
            assert carried.value == pytest.approx(8 * ep.value, abs=RESIDUAL_TOL)


class TestFolner:
    def test_whole_graph_has_no_boundary(self):
        a = constant_labeling(C4, P3, 1)
        report = folner_product_check(C4, P3, a, [list(C4.vertices)])
        step = report.steps[0]
        assert step.boundary_size == 0
        assert step.product_boundary_size == 0
        assert step.bound_ok

    def test_arcs_of_c12(self):
        g = cycle(12)
        a = constant_labeling(g, P3, 1)
        report = folner_product_check(g, P3, a, [range(3), range(6), range(9)])
        assert report.max_label_degree == 2
        ratios = [s.ratio for s in report.steps]
        assert ratios == [Fraction(2, 3), Fraction(2, 6), Fraction(2, 9)]
        for s in report.steps:
            assert s.product_boundary_size <= 4 * s.boundary_size
        product_ratios = [s.product_ratio for s in report.steps]
        assert product_ratios == sorted(product_ratios, reverse=True)

    def test_single_vertex_subset_is_vacuous(self):
        a = constant_labeling(C4, P3, 1)
        report = folner_product_check(C4, P3, a, [[0], [0, 1, 2, 3]])
        first = report.steps[0]
        assert first.product_size == 0
        assert first.product_ratio is None
        assert first.bound_ok

    def test_non_nested_chain_rejected(self):
        a = constant_labeling(C4, P3, 1)
        with pytest.raises(ValueError, match="nested"):
            folner_product_check(C4, P3, a, [[0, 1], [2, 3]])

    def test_empty_subset_rejected(self):
        a = constant_labeling(C4, P3, 1)
        with pytest.raises(ValueError, match="nonempty"):
            folner_product_check(C4, P3, a, [[]])

    def test_boundary_counts_live_in_the_full_product(self):
        g = cycle(6)
        a = constant_labeling(g, P3, 1)
        report = folner_product_check(g, P3, a, [range(3)])
        step = report.steps[0]
        # Two base boundary edges, each carrying 4 product edges.
        assert step.boundary_size == 2
        assert step.product_boundary_size == 8
        assert step.bound == 8
