import numpy as np

from ...groups import SPHERE_P4
from ..surface import Surface, SurfaceKind


class SphereSurface(Surface):
    """Unit sphere in R^3; area chart u = (z + 1) / 2, v = phi / 2 pi (Archimedes)."""

    kind = SurfaceKind.SPHERE
    strands = 4
    ambient_dim = 3
    group = SPHERE_P4
    generators = ("d1sq", "d2sq")

    def sample_points(self, rng: np.random.Generator, count: int) -> np.ndarray:
        points = rng.standard_normal(size=(count, 3))
        norms = np.linalg.norm(points, axis=1)
        while np.any(norms < 1e-12):
            small = norms < 1e-12
            points[small] = rng.standard_normal(size=(int(small.sum()), 3))
            norms = np.linalg.norm(points, axis=1)
        return points / norms[:, None]

    def canonical(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        return points / np.linalg.norm(points, axis=-1, keepdims=True)

    def to_area_coords(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        u = np.clip((points[..., 2] + 1.0) / 2.0, 0.0, 1.0)
        v = np.mod(np.arctan2(points[..., 1], points[..., 0]) / (2 * np.pi), 1.0)
        return np.stack([u, v], axis=-1)

    def from_area_coords(self, uv: np.ndarray) -> np.ndarray:
        uv = np.asarray(uv, dtype=float)
        z = 2.0 * uv[..., 0] - 1.0
        rho = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
        phi = 2 * np.pi * uv[..., 1]
        return np.stack([rho * np.cos(phi), rho * np.sin(phi), z], axis=-1)

    def contains(self, points: np.ndarray, atol: float = 1e-9) -> np.ndarray:
        return np.abs(np.linalg.norm(np.asarray(points, dtype=float), axis=-1) - 1.0) <= atol

    @staticmethod
    def cap_area(height: float) -> float:
        """Normalized area of the cap {z >= height}."""
        return (1.0 - height) / 2.0
