import numpy as np
import pytest

from gg_cohomology.errors import InvalidGenerator
from gg_cohomology.repository.groups import P3, BraidWord
from gg_cohomology.repository.regions import build_regions, rho_flow, rho_isotopy
from gg_cohomology.repository.regions.flows import flow_for, profile
from gg_cohomology.repository.regions.regions import wrap
from gg_cohomology.repository.surfaces import SurfaceFactory


def flow_cases():
    for name in ("disc", "sphere", "torus"):
        surface = SurfaceFactory.create_surface(name)
        regions = build_regions(surface, 0.2)
        for key in surface.generators:
            yield pytest.param(regions.W[key], regions.V[key], id=f"{name}-{key}")


def jacobian_determinant(move, uv, h=1e-6):
    columns = []
    for k in range(2):
        step = np.zeros(2)
        step[k] = h
        _, forward = move(uv + step)
        _, backward = move(uv - step)
        # differences taken mod 1; both chart coordinates may be periodic
        columns.append(wrap(forward - backward) / (2 * h))
    return columns[0][..., 0] * columns[1][..., 1] - columns[0][..., 1] * columns[1][..., 0]


class TestProfile:
    def test_values(self):
        levels = np.array([0.0, 0.5, 1.0, 1.1, 1.2, 1.5, 2.0])
        values = profile(levels, 1.5)
        assert np.all(values[:3] == 1.0)
        assert np.all(values[5:] == 0.0)
        assert np.all(np.diff(values) <= 0.0)
        assert 0.0 < values[3] < 1.0


class TestModelFlows:
    @pytest.mark.parametrize("w,v", list(flow_cases()))
    def test_identity_at_zero(self, w, v):
        uv = np.random.default_rng(0).uniform(0.0, 1.0, size=(500, 2))
        _, out = flow_for(w, v).move(0.0, uv)
        assert np.allclose(out, uv)

    @pytest.mark.parametrize("w,v", list(flow_cases()))
    def test_support_in_v(self, w, v):
        uv = np.random.default_rng(1).uniform(0.0, 1.0, size=(2000, 2))
        moved, out = flow_for(w, v).move(0.4, uv)
        outside = ~v.contains(uv)
        assert not np.any(moved & outside)
        assert np.array_equal(out[outside], uv[outside])
        # V is invariant
        assert np.all(v.contains(out[~outside]))

    @pytest.mark.parametrize("w,v", list(flow_cases()))
    def test_full_turn_on_w(self, w, v):
        uv = np.random.default_rng(2).uniform(0.0, 1.0, size=(2000, 2))
        inside = w.contains(uv)
        _, out = flow_for(w, v).move(1.0, uv)
        delta = out[inside] - uv[inside]
        delta[:, 1] = (delta[:, 1] + 0.5) % 1.0 - 0.5
        delta[:, 0] = (delta[:, 0] + 0.5) % 1.0 - 0.5
        assert np.allclose(delta, 0.0, atol=1e-9)

    @pytest.mark.parametrize("w,v", list(flow_cases()))
    def test_area_preserving(self, w, v):
        uv = np.random.default_rng(3).uniform(0.02, 0.98, size=(400, 2))
        flow = flow_for(w, v)
        det = jacobian_determinant(lambda p: flow.move(0.37, p), uv)
        # the maps are only piecewise smooth; kinks lie on measure zero sets
        assert np.mean(np.abs(det - 1.0) < 1e-3) > 0.95

    @pytest.mark.parametrize("w,v", list(flow_cases()))
    def test_inverse_time(self, w, v):
        uv = np.random.default_rng(4).uniform(0.0, 1.0, size=(500, 2))
        flow = flow_for(w, v)
        _, forward = flow.move(0.3, uv)
        _, back = flow.move(-0.3, forward)
        delta = back - uv
        delta = (delta + 0.5) % 1.0 - 0.5
        assert np.allclose(delta, 0.0, atol=1e-9)


class TestRhoFlow:
    def test_central_generator_is_identity(self):
        disc = SurfaceFactory.create_surface("disc")
        flow = rho_flow(disc, build_regions(disc, 0.2), "z")
        assert flow.iso.is_identity
        assert flow.support == "none"

    def test_unknown_generator(self):
        disc = SurfaceFactory.create_surface("disc")
        with pytest.raises(InvalidGenerator, match="'d1sq' has no model flow"):
            rho_flow(disc, build_regions(disc, 0.2), "d1sq")

    def test_support_name(self):
        disc = SurfaceFactory.create_surface("disc")
        assert rho_flow(disc, build_regions(disc, 0.2), "a").support == "V12"

    def test_word_and_inverse_cancel(self):
        disc = SurfaceFactory.create_surface("disc")
        regions = build_regions(disc, 0.2)
        iso = rho_isotopy(disc, regions, BraidWord.parse(P3, "a b b^-1 a^-1 z"))
        points = disc.sample_points(np.random.default_rng(5), 200)
        assert np.allclose(iso.time_one(points), points, atol=1e-9)
        assert len(iso.legs) == 4

    def test_points_stay_on_surface(self):
        for name in ("disc", "sphere", "torus"):
            surface = SurfaceFactory.create_surface(name)
            regions = build_regions(surface, 0.2)
            alpha = BraidWord(surface.group, ((0, 1), (1, -1)))
            iso = rho_isotopy(surface, regions, alpha)
            points = surface.sample_points(np.random.default_rng(6), 300)
            for t in (0.25, 0.5, 0.9):
                assert surface.contains(iso(t, points)).all()
