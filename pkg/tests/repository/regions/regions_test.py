import math

import numpy as np
import pytest

from gg_cohomology.errors import InfeasibleEpsilon
from gg_cohomology.repository.regions import (
    build_regions,
    classify_type,
    feasible_bound,
    good_types,
    nearest_type,
)
from gg_cohomology.repository.regions.regions import torus_margin
from gg_cohomology.repository.surfaces import Configuration, SurfaceFactory


@pytest.fixture(params=["disc", "sphere", "torus"])
def surface(request):
    return SurfaceFactory.create_surface(request.param)


def uniform_uv(n, seed=0):
    return np.random.default_rng(seed).uniform(0.0, 1.0, size=(n, 2))


class TestBuildRegions:
    @pytest.mark.parametrize("epsilon", [0.5, 0.2, 0.05])
    def test_equal_areas(self, surface, epsilon):
        regions = build_regions(surface, epsilon)
        assert regions.m == surface.strands
        assert np.allclose(regions.u_areas(), (1 - epsilon) / surface.strands)

    def test_lambda_eps(self):
        disc = SurfaceFactory.create_surface("disc")
        regions = build_regions(disc, 0.3)
        assert regions.lambda_eps() == pytest.approx(6 * (0.7 / 3) ** 3)

    @pytest.mark.parametrize("epsilon", [0.0, 1.0, -0.1, 0.9999])
    def test_infeasible(self, epsilon):
        disc = SurfaceFactory.create_surface("disc")
        with pytest.raises(InfeasibleEpsilon, match="epsilon must lie in"):
            build_regions(disc, epsilon)

    def test_feasible_bound(self, surface):
        assert feasible_bound(surface) == pytest.approx(1 - surface.strands * 1e-4)
        build_regions(surface, feasible_bound(surface) - 1e-6)

    def test_torus_margin(self):
        for epsilon in (0.5, 0.1, 0.01):
            m = torus_margin(epsilon)
            assert (0.5 - 2 * m) * (1 - 2 * m) == pytest.approx((1 - epsilon) / 2)

    def test_to_dict(self, surface):
        data = build_regions(surface, 0.2).to_dict()
        assert data["surface"] == surface.name
        assert len(data["U"]) == surface.strands
        assert data["total_U_area"] == pytest.approx(0.8)


class TestRegionGeometry:
    def test_u_disjoint(self, surface):
        regions = build_regions(surface, 0.1)
        uv = uniform_uv(50000)
        inside = np.stack([u.contains(uv) for u in regions.U])
        assert inside.sum(axis=0).max() == 1

    def test_area_matches_sampling(self, surface):
        regions = build_regions(surface, 0.2)
        uv = uniform_uv(200000, seed=1)
        for region in list(regions.U) + list(regions.W.values()) + list(regions.V.values()):
            sigma = math.sqrt(region.area * (1 - region.area) / len(uv))
            assert abs(region.contains(uv).mean() - region.area) < 5 * sigma + 1e-9, region.name

    def test_w_inside_v(self, surface):
        regions = build_regions(surface, 0.2)
        uv = uniform_uv(50000, seed=2)
        for key, w in regions.W.items():
            assert not np.any(w.contains(uv) & ~regions.V[key].contains(uv))

    def test_sector_pairs(self):
        disc = SurfaceFactory.create_surface("disc")
        regions = build_regions(disc, 0.2)
        uv = uniform_uv(50000, seed=3)
        u1, u2, u3 = (u.contains(uv) for u in regions.U)
        w12, v12 = regions.W["a"].contains(uv), regions.V["a"].contains(uv)
        w23 = regions.W["b"].contains(uv)
        assert np.all(w12[u1 | u2])
        assert np.all(w23[u2 | u3])
        assert not np.any(v12[u3])

    def test_torus_w_regions(self):
        torus = SurfaceFactory.create_surface("torus")
        regions = build_regions(torus, 0.2)
        uv = uniform_uv(50000, seed=4)
        u1, u2 = (u.contains(uv) for u in regions.U)
        assert np.all(regions.W["a1"].contains(uv)[u1])
        assert not np.any(regions.V["a1"].contains(uv)[u2])
        assert np.all(regions.W["b1"].contains(uv)[u2])
        assert not np.any(regions.V["b1"].contains(uv)[u1])


class TestTypes:
    def test_base_configuration_is_main_type(self, surface):
        regions = build_regions(surface, 0.2)
        signature = classify_type(regions.base_configuration(), regions)
        assert signature.good
        assert signature.counts == (1,) * surface.strands

    def test_bad_point(self):
        disc = SurfaceFactory.create_surface("disc")
        regions = build_regions(disc, 0.2)
        # the centre of the disc lies in no U
        config = Configuration(disc, [[0.0, 0.0], [0.5, 0.3], [-0.4, -0.4]])
        signature = classify_type(config, regions)
        assert not signature.good
        assert signature.label.startswith("bad")
        assert nearest_type(config, regions).good

    def test_good_types(self):
        assert len(good_types(3)) == 10
        assert len(good_types(4)) == 35
        assert [t.counts for t in good_types(2)] == [(2, 0), (1, 1), (0, 2)]
        assert all(sum(t.counts) == 3 for t in good_types(3))

    def test_bad_fraction(self, surface):
        epsilon = 0.3
        regions = build_regions(surface, epsilon)
        rng = np.random.default_rng(5)
        n = 3000
        bad = sum(
            not classify_type(Configuration(surface, surface.sample_points(rng, surface.strands)), regions).good
            for _ in range(n)
        )
        p = 1 - (1 - epsilon) ** surface.strands
        assert abs(bad / n - p) < 4 * math.sqrt(p * (1 - p) / n)
