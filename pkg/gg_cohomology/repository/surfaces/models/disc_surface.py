import numpy as np

from ...groups import P3
from ..surface import Surface, SurfaceKind


class DiscSurface(Surface):
    """Unit disc; area chart u = r^2, v = theta / 2 pi."""

    kind = SurfaceKind.DISC
    strands = 3
    ambient_dim = 2
    group = P3
    generators = ("a", "b")

    def sample_points(self, rng: np.random.Generator, count: int) -> np.ndarray:
        accepted = np.empty((0, 2))
        while len(accepted) < count:
            batch = rng.uniform(-1.0, 1.0, size=(2 * (count - len(accepted)) + 8, 2))
            batch = batch[np.einsum("ij,ij->i", batch, batch) < 1.0]
            accepted = np.vstack([accepted, batch])
        return accepted[:count]

    def to_area_coords(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        x, y = points[..., 0], points[..., 1]
        u = x * x + y * y
        v = np.mod(np.arctan2(y, x) / (2 * np.pi), 1.0)
        return np.stack([u, v], axis=-1)

    def from_area_coords(self, uv: np.ndarray) -> np.ndarray:
        uv = np.asarray(uv, dtype=float)
        r = np.sqrt(np.clip(uv[..., 0], 0.0, None))
        theta = 2 * np.pi * uv[..., 1]
        return np.stack([r * np.cos(theta), r * np.sin(theta)], axis=-1)

    def contains(self, points: np.ndarray, atol: float = 1e-9) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        return np.einsum("...i,...i->...", points, points) <= 1.0 + atol
