import numpy as np

from gg_cohomology.repository.trajectories import Isotopy


def shift(dx):
    return lambda t, points: np.asarray(points) + np.array([dx * t, 0.0])


class TestIsotopy:
    def test_identity(self):
        points = np.array([[0.1, 0.2], [0.3, -0.4]])
        iso = Isotopy.identity()
        assert iso.is_identity
        assert np.array_equal(iso(0.7, points), points)
        assert np.array_equal(iso.time_one(points), points)

    def test_then_skips_identity(self):
        iso = Isotopy((shift(0.1),), "shift")
        assert Isotopy.identity().then(iso) is iso
        assert iso.then(Isotopy.identity()) is iso

    def test_concatenation_runs_legs_in_turn(self):
        iso = Isotopy((shift(0.2),), "f").then(Isotopy((shift(-0.1),), "g"))
        points = np.zeros((1, 2))
        assert iso.description == "f * g"
        assert np.allclose(iso(0.25, points), [[0.1, 0.0]])
        assert np.allclose(iso(0.5, points), [[0.2, 0.0]])
        assert np.allclose(iso(0.75, points), [[0.15, 0.0]])
        assert np.allclose(iso.time_one(points), [[0.1, 0.0]])

    def test_reparametrized(self):
        iso = Isotopy((shift(1.0),), "f").reparametrized(lambda t: t ** 2)
        points = np.zeros((1, 2))
        assert np.allclose(iso(0.5, points), [[0.25, 0.0]])
        assert np.allclose(iso.time_one(points), [[1.0, 0.0]])
