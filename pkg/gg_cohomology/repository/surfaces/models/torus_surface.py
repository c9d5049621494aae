import numpy as np

from ...groups import TORUS_P2
from ..surface import Surface, SurfaceKind


class TorusSurface(Surface):
    """Flat torus R^2 / Z^2 in the fundamental domain [0, 1)^2."""

    kind = SurfaceKind.TORUS
    strands = 2
    ambient_dim = 2
    group = TORUS_P2
    generators = ("a1", "b1")

    def sample_points(self, rng: np.random.Generator, count: int) -> np.ndarray:
        return rng.uniform(0.0, 1.0, size=(count, 2))

    def canonical(self, points: np.ndarray) -> np.ndarray:
        wrapped = np.mod(np.asarray(points, dtype=float), 1.0)
        # mod of a tiny negative rounds up to 1.0
        return np.where(wrapped >= 1.0, 0.0, wrapped)

    def to_area_coords(self, points: np.ndarray) -> np.ndarray:
        return self.canonical(points)

    def from_area_coords(self, uv: np.ndarray) -> np.ndarray:
        return self.canonical(uv)

    def contains(self, points: np.ndarray, atol: float = 1e-9) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        return np.all((points >= 0.0) & (points < 1.0), axis=-1)

    def distance(self, p: np.ndarray, q: np.ndarray) -> np.ndarray:
        delta = np.abs(np.asarray(p, dtype=float) - np.asarray(q, dtype=float)) % 1.0
        delta = np.minimum(delta, 1.0 - delta)
        return np.linalg.norm(delta, axis=-1)
