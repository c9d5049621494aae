"""Epsilon-dependent regions U_i, W_*, V_* in the area chart of a surface.

Regions are sublevel sets {level < extent} of a foliation by closed curves:
nested rectangles (Box), straight strips around a meridian (Strip) or a
variable width band around a longitude (WavyBand). A W region and its V
region share the foliation and differ only in extent, which is what the
model flows rotate along.
"""
import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from ...errors import InfeasibleEpsilon
from ..surfaces import Configuration, Surface, SurfaceKind

logger = logging.getLogger(__name__)

MIN_U_AREA = 1e-4


def wrap(x: np.ndarray) -> np.ndarray:
    """Representative of x mod 1 in [-1/2, 1/2)."""
    return np.mod(np.asarray(x, dtype=float) + 0.5, 1.0) - 0.5


class Region(ABC):
    name: str
    extent: float

    @abstractmethod
    def level(self, uv: np.ndarray) -> np.ndarray:
        pass

    @property
    @abstractmethod
    def area(self) -> float:
        pass

    @abstractmethod
    def with_extent(self, name: str, extent: float) -> "Region":
        pass

    @abstractmethod
    def to_dict(self) -> dict:
        pass

    def contains(self, uv: np.ndarray) -> np.ndarray:
        return self.level(uv) < self.extent


@dataclass(frozen=True)
class Box(Region):
    """Rectangle |u - cu| < extent*a, |v - cv| < extent*b; never crosses v = 0."""
    name: str
    center: Tuple[float, float]
    half: Tuple[float, float]
    extent: float = 1.0

    def level(self, uv: np.ndarray) -> np.ndarray:
        uv = np.asarray(uv, dtype=float)
        du = np.abs(uv[..., 0] - self.center[0]) / self.half[0]
        dv = np.abs(uv[..., 1] - self.center[1]) / self.half[1]
        return np.maximum(du, dv)

    @property
    def area(self) -> float:
        return 4.0 * self.half[0] * self.half[1] * self.extent ** 2

    def with_extent(self, name: str, extent: float) -> "Box":
        return Box(name, self.center, self.half, extent)

    def to_dict(self) -> dict:
        return {
            "kind": "box",
            "name": self.name,
            "center": list(self.center),
            "half_sides": [h * self.extent for h in self.half],
            "area": self.area,
        }


@dataclass(frozen=True)
class Strip(Region):
    """All points with |u - center| < extent*half (mod 1): an annulus around a meridian."""
    name: str
    center: float
    half: float
    extent: float = 1.0

    def level(self, uv: np.ndarray) -> np.ndarray:
        return np.abs(wrap(np.asarray(uv, dtype=float)[..., 0] - self.center)) / self.half

    @property
    def area(self) -> float:
        return 2.0 * self.half * self.extent

    def with_extent(self, name: str, extent: float) -> "Strip":
        return Strip(name, self.center, self.half, extent)

    def to_dict(self) -> dict:
        return {"kind": "strip", "name": self.name, "center_u": self.center,
                "half_width": self.half * self.extent, "area": self.area}


@dataclass(frozen=True)
class WavyBand(Region):
    """Points with |v - c(u)| < extent*h(u) (mod 1), c and h periodic piecewise linear.

    The leaves v = c(u) + lam*h(u) are longitudes. `primitive` is the exact
    integral of h, so (H(u)/H(1), lam) are area-preserving coordinates.
    """
    name: str
    knots: Tuple[float, ...]
    centers: Tuple[float, ...]
    widths: Tuple[float, ...]
    extent: float = 1.0
    _segments: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        knots = np.asarray(self.knots, dtype=float)
        widths = np.asarray(self.widths, dtype=float)
        lengths = np.diff(knots)
        slopes = np.diff(widths) / lengths
        cumulative = np.concatenate([[0.0], np.cumsum((widths[:-1] + widths[1:]) / 2.0 * lengths)])
        object.__setattr__(self, "_segments", (knots, widths, slopes, cumulative))

    def center_at(self, u: np.ndarray) -> np.ndarray:
        return np.interp(u, self.knots, self.centers)

    def width_at(self, u: np.ndarray) -> np.ndarray:
        return np.interp(u, self.knots, self.widths)

    def leaf(self, uv: np.ndarray) -> np.ndarray:
        """Signed leaf parameter lam of each point."""
        uv = np.asarray(uv, dtype=float)
        u = uv[..., 0]
        return wrap(uv[..., 1] - self.center_at(u)) / self.width_at(u)

    def level(self, uv: np.ndarray) -> np.ndarray:
        return np.abs(self.leaf(uv))

    @property
    def total(self) -> float:
        return float(self._segments[3][-1])

    def primitive(self, u: np.ndarray) -> np.ndarray:
        knots, widths, slopes, cumulative = self._segments
        u = np.asarray(u, dtype=float)
        k = np.clip(np.searchsorted(knots, u, side="right") - 1, 0, len(slopes) - 1)
        x = u - knots[k]
        return cumulative[k] + widths[k] * x + 0.5 * slopes[k] * x * x

    def inverse_primitive(self, target: np.ndarray) -> np.ndarray:
        knots, widths, slopes, cumulative = self._segments
        target = np.asarray(target, dtype=float)
        k = np.clip(np.searchsorted(cumulative, target, side="right") - 1, 0, len(slopes) - 1)
        r = target - cumulative[k]
        root = np.sqrt(np.clip(widths[k] ** 2 + 2.0 * slopes[k] * r, 0.0, None))
        return knots[k] + 2.0 * r / (widths[k] + root)

    @property
    def area(self) -> float:
        return 2.0 * self.extent * self.total

    def with_extent(self, name: str, extent: float) -> "WavyBand":
        return WavyBand(name, self.knots, self.centers, self.widths, extent)

    def to_dict(self) -> dict:
        return {
            "kind": "band",
            "name": self.name,
            "knots_u": list(self.knots),
            "center_v": list(self.centers),
            "half_widths": [w * self.extent for w in self.widths],
            "area": self.area,
        }


@dataclass(frozen=True)
class TypeSignature:
    counts: Tuple[int, ...]
    good: bool

    @property
    def label(self) -> str:
        text = "(" + ",".join(str(c) for c in self.counts) + ")"
        return text if self.good else f"bad{text}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True, eq=False)
class RegionSpec:
    """The regions of one surface at one epsilon.

    `W` and `V` are keyed by the generator whose model flow they carry.
    """
    surface: Surface
    epsilon: float
    U: Tuple[Region, ...]
    W: Dict[str, Region]
    V: Dict[str, Region]
    base_uv: Tuple[Tuple[float, float], ...]

    @property
    def m(self) -> int:
        return len(self.U)

    def u_areas(self) -> Tuple[float, ...]:
        return tuple(region.area for region in self.U)

    def base_configuration(self) -> Configuration:
        return Configuration(self.surface, self.surface.from_area_coords(np.array(self.base_uv)))

    def lambda_eps(self) -> float:
        return math.factorial(self.m) * math.prod(self.u_areas())

    def to_dict(self) -> dict:
        return {
            "surface": self.surface.name,
            "epsilon": self.epsilon,
            "U": [region.to_dict() for region in self.U],
            "W": {key: region.to_dict() for key, region in sorted(self.W.items())},
            "V": {key: region.to_dict() for key, region in sorted(self.V.items())},
            "base_points_area_chart": [list(p) for p in self.base_uv],
            "total_U_area": sum(self.u_areas()),
        }


def feasible_bound(surface: Surface) -> float:
    return 1.0 - surface.strands * MIN_U_AREA


def _sector_layout(surface: Surface, epsilon: float) -> RegionSpec:
    """m equal boxes side by side in v; W boxes cover consecutive pairs."""
    sectors = surface.strands
    delta = epsilon / 4.0
    width = (1.0 - epsilon) / (sectors * (1.0 - 2.0 * delta))
    centers = [(i - 0.5) / sectors for i in range(1, sectors + 1)]
    u_half = 0.5 - delta
    U = tuple(Box(f"U{i + 1}", (0.5, c), (u_half, width / 2.0)) for i, c in enumerate(centers))
    W: Dict[str, Region] = {}
    V: Dict[str, Region] = {}
    pair_half = 0.5 / sectors + width / 2.0
    extent = min((0.5 - delta / 2.0) / u_half, (1.0 / sectors) / pair_half)
    for i, generator in enumerate(surface.generators):
        box = Box(f"W{i + 1}{i + 2}", (0.5, (i + 1) / sectors), (u_half, pair_half))
        W[generator] = box
        V[generator] = box.with_extent(f"V{i + 1}{i + 2}", extent)
    return RegionSpec(surface, epsilon, U, W, V, tuple((0.5, c) for c in centers))


def torus_margin(epsilon: float) -> float:
    """m with (1/2 - 2m)(1 - 2m) = (1 - epsilon)/2."""
    return (3.0 - math.sqrt(9.0 - 8.0 * epsilon)) / 8.0


def _torus_layout(surface: Surface, epsilon: float) -> RegionSpec:
    margin = torus_margin(epsilon)
    half = (0.25 - margin, 0.5 - margin)
    U = (Box("U1", (0.25, 0.5), half), Box("U2", (0.75, 0.5), half))
    a, b = surface.generators

    w_a = Strip("W_a", 0.25, 0.25 - margin)
    v_a = w_a.with_extent("V_a", (0.25 - margin / 2.0) / (0.25 - margin))

    thick, thin = 0.5 - margin, margin / 2.0
    w_b = WavyBand(
        "W_b",
        knots=(0.0, margin / 2.0, 0.5 - margin / 2.0, 0.5 + margin / 2.0, 1.0 - margin / 2.0, 1.0),
        centers=(0.25, 0.0, 0.0, 0.5, 0.5, 0.25),
        widths=((thick + thin) / 2.0, thin, thin, thick, thick, (thick + thin) / 2.0),
    )
    v_b = w_b.with_extent("V_b", 1.0 + 0.5 * min(1.0, 2.0 * margin / (1.0 - 2.0 * margin)))
    return RegionSpec(surface, epsilon, U, {a: w_a, b: w_b}, {a: v_a, b: v_b}, ((0.25, 0.5), (0.75, 0.5)))


_LAYOUTS = {
    SurfaceKind.DISC: _sector_layout,
    SurfaceKind.SPHERE: _sector_layout,
    SurfaceKind.TORUS: _torus_layout,
}


def build_regions(surface: Surface, epsilon: float) -> RegionSpec:
    """Regions whose U_i have equal area and total area 1 - epsilon.

    Raises:
        InfeasibleEpsilon: epsilon outside (0, 1) or U_i smaller than MIN_U_AREA
    """
    bound = feasible_bound(surface)
    if not 0.0 < epsilon < 1.0 or (1.0 - epsilon) / surface.strands < MIN_U_AREA:
        raise InfeasibleEpsilon(epsilon, bound)
    spec = _LAYOUTS[surface.kind](surface, epsilon)
    logger.debug("Built %s regions for epsilon=%s, U areas %s", surface.name, epsilon, spec.u_areas())
    return spec


def classify_type(config: Configuration, regions: RegionSpec) -> TypeSignature:
    uv = config.area_coords()
    inside = np.stack([region.contains(uv) for region in regions.U])
    counts = tuple(int(c) for c in inside.sum(axis=1))
    return TypeSignature(counts, bool(inside.any(axis=0).all()))


def nearest_type(config: Configuration, regions: RegionSpec) -> TypeSignature:
    """Type obtained by moving every point into the U_i of smallest level."""
    uv = config.area_coords()
    levels = np.stack([region.level(uv) for region in regions.U])
    nearest = np.argmin(levels, axis=0)
    counts = tuple(int(np.sum(nearest == i)) for i in range(regions.m))
    return TypeSignature(counts, True)


def good_types(m: int) -> Tuple[TypeSignature, ...]:
    """All compositions of m into m parts, i.e. every good type."""
    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    return tuple(TypeSignature(c, True) for c in compositions(m, m))
