import csv
import math

import numpy as np
import pytest

from gg_cohomology.errors import DegenerateTether, UnsupportedSurface
from gg_cohomology.repository.groups import (
    B3,
    P3,
    BraidWord,
    GroupId,
    conjugate_in_group,
    embed_P3,
    equal_in_group,
    exponent_sum,
    full_twist,
    multiply,
)
from gg_cohomology.repository.regions import build_regions, rho_isotopy
from gg_cohomology.repository.surfaces import Configuration, SurfaceFactory
from gg_cohomology.repository.trajectories import Isotopy, extract_braid, gamma, tethered_loop


def rotation(turns):
    def leg(t, points):
        angle = 2.0 * math.pi * turns * t
        c, s = math.cos(angle), math.sin(angle)
        return np.asarray(points) @ np.array([[c, s], [-s, c]])

    return Isotopy((leg,), f"rotation({turns})")


@pytest.fixture
def disc():
    return SurfaceFactory.create_surface("disc")


@pytest.fixture
def regions(disc):
    return build_regions(disc, 0.2)


class TestTetheredLoop:
    def test_endpoints(self, disc, regions):
        z = regions.base_configuration()
        x = Configuration(disc, [[0.3, 0.1], [-0.2, 0.4], [0.1, -0.5]])
        loop = tethered_loop(Isotopy.identity(), x, z, steps=30)
        assert len(loop.times) == 31
        assert np.allclose(loop.position_at(0.0), z.points)
        assert np.allclose(loop.position_at(1.0), z.points)
        assert np.allclose(loop.position_at(1.0 / 3.0), x.points)

    def test_crossing_tethers(self, disc):
        z = Configuration(disc, [[-0.5, 0.0], [0.5, 0.0], [0.0, 0.5]])
        x = Configuration(disc, [[0.5, 0.0], [-0.5, 0.0], [0.0, 0.5]])
        with pytest.raises(DegenerateTether):
            tethered_loop(Isotopy.identity(), x, z)
        with pytest.raises(DegenerateTether):
            gamma(Isotopy.identity(), x, z, retries=2)

    def test_write_csv(self, disc, regions, tmp_path):
        x = Configuration(disc, [[0.3, 0.1], [-0.2, 0.4], [0.1, -0.5]])
        loop = tethered_loop(Isotopy.identity(), x, regions.base_configuration(), steps=30)
        path = loop.write_csv(tmp_path / "loops" / "identity.csv")
        with open(path, newline="", encoding="utf-8") as f:
            rows = list(csv.DictReader(f))
        assert len(rows) == 3 * 31
        assert set(rows[0]) == {"strand", "t", "x", "y"}
        assert {row["strand"] for row in rows} == {"1", "2", "3"}


class TestExtraction:
    def test_identity_loop_is_trivial(self, disc, regions):
        x = Configuration(disc, [[0.3, 0.1], [-0.2, 0.4], [0.1, -0.5]])
        assert gamma(Isotopy.identity(), x, regions.base_configuration()).is_empty

    def test_two_strand_rotation(self, disc):
        x = Configuration(disc, [[-0.4, 0.05], [0.4, -0.05]])
        b2 = GroupId.artin(2)
        assert gamma(rotation(1), x, x) == BraidWord.parse(b2, "s1 s1")
        assert gamma(rotation(-1), x, x) == BraidWord.parse(b2, "s1^-1 s1^-1")

    def test_three_strand_rotation_is_full_twist(self, disc):
        angles = (0.3, 2.4, 4.5)
        x = Configuration(disc, [[0.5 * math.cos(a), 0.5 * math.sin(a)] for a in angles])
        word = gamma(rotation(1), x, x)
        assert exponent_sum(word) == 6
        assert conjugate_in_group(word, full_twist(3), B3)

    def test_sphere_is_unsupported(self):
        sphere = SurfaceFactory.create_surface("sphere")
        x = Configuration(sphere, sphere.sample_points(np.random.default_rng(0), 4))
        loop = tethered_loop(Isotopy.identity(), x, x, steps=30)
        with pytest.raises(UnsupportedSurface):
            extract_braid(loop)


class TestGamma:
    @pytest.mark.parametrize("text", ["a", "b", "a^-1", "a b a^-1 b^-1"])
    def test_model_flows_on_base(self, disc, regions, text):
        alpha = BraidWord.parse(P3, text)
        base = regions.base_configuration()
        word = gamma(rho_isotopy(disc, regions, alpha), base, base)
        assert conjugate_in_group(word, embed_P3(alpha), B3)

    def test_reparametrization(self, disc, regions):
        iso = rho_isotopy(disc, regions, BraidWord.parse(P3, "a b^-1"))
        base = regions.base_configuration()
        x = Configuration(disc, [[0.3, 0.1], [-0.2, 0.4], [0.1, -0.5]])
        slow = iso.reparametrized(lambda t: t * t)
        assert gamma(iso, x, base) == gamma(slow, x, base)

    def test_composition(self, disc, regions):
        base = regions.base_configuration()
        g = rho_isotopy(disc, regions, BraidWord.parse(P3, "a"))
        h = rho_isotopy(disc, regions, BraidWord.parse(P3, "b^-1"))
        x = Configuration(disc, [[0.5, 0.45], [-0.6, 0.1], [0.2, -0.6]])
        gx = Configuration(disc, g.time_one(np.array(x.points)))
        whole = gamma(g.then(h), x, base)
        parts = multiply(gamma(g, x, base), gamma(h, gx, base))
        assert equal_in_group(whole, parts)
