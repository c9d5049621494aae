from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from ..groups import GroupId


class SurfaceKind(Enum):
    DISC = "disc"
    SPHERE = "sphere"
    TORUS = "torus"


class Surface(ABC):
    """A surface with normalized area form and area-preserving chart.

    Every surface carries an area chart (u, v) onto the unit square in which
    the normalized area form is du dv. Regions and model flows are built in
    that chart; sampling, distances and braid extraction use the ambient
    coordinates.
    """

    kind: SurfaceKind
    strands: int
    ambient_dim: int
    group: GroupId
    generators: Tuple[str, ...]

    @property
    def name(self) -> str:
        return self.kind.value

    @abstractmethod
    def sample_points(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """Points i.i.d. uniform for the normalized area form, shape (count, ambient_dim)."""

    @abstractmethod
    def to_area_coords(self, points: np.ndarray) -> np.ndarray:
        pass

    @abstractmethod
    def from_area_coords(self, uv: np.ndarray) -> np.ndarray:
        pass

    @abstractmethod
    def contains(self, points: np.ndarray, atol: float = 1e-9) -> np.ndarray:
        pass

    def distance(self, p: np.ndarray, q: np.ndarray) -> np.ndarray:
        return np.linalg.norm(np.asarray(p) - np.asarray(q), axis=-1)

    def canonical(self, points: np.ndarray) -> np.ndarray:
        return np.asarray(points, dtype=float)

    def min_separation(self, points: np.ndarray) -> float:
        points = np.asarray(points, dtype=float)
        m = len(points)
        if m < 2:
            return float("inf")
        i, j = np.triu_indices(m, k=1)
        return float(np.min(self.distance(points[i], points[j])))

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


@dataclass(frozen=True, eq=False)
class SurfacePoint:
    surface: SurfaceKind
    coords: Tuple[float, ...]


@dataclass(frozen=True, eq=False)
class Configuration:
    """Ordered points x_1..x_m on one surface, stored as an (m, d) array."""
    surface: Surface
    points: np.ndarray

    def __post_init__(self):
        points = self.surface.canonical(np.array(self.points, dtype=float))
        points.setflags(write=False)
        object.__setattr__(self, "points", points)

    @property
    def m(self) -> int:
        return len(self.points)

    def point(self, i: int) -> SurfacePoint:
        return SurfacePoint(self.surface.kind, tuple(float(c) for c in self.points[i]))

    def area_coords(self) -> np.ndarray:
        return self.surface.to_area_coords(self.points)

    def min_separation(self) -> float:
        return self.surface.min_separation(self.points)

    def to_dict(self) -> dict:
        return {"surface": self.surface.name, "points": self.points.tolist()}
