"""Model flows realizing rho_eps on the generators.

Each flow moves points along the leaves of its W/V foliation in
area-preserving leaf coordinates (level, tau): tau -> tau + t * profile(level).
The profile is 1 on W and 0 outside V, so at t = 1 every point of W has gone
once around its leaf and the support of the isotopy lies in V.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ...errors import InvalidGenerator
from ..groups import BraidWord
from ..surfaces import Surface
from ..trajectories.isotopy import Isotopy
from .regions import Box, Region, RegionSpec, Strip, WavyBand, wrap


def _transition(x: np.ndarray) -> np.ndarray:
    """Smooth step, 0 for x <= 0 and 1 for x >= 1."""
    x = np.clip(x, 0.0, 1.0)
    with np.errstate(divide="ignore"):
        left = np.where(x > 0.0, np.exp(-1.0 / np.where(x > 0.0, x, 1.0)), 0.0)
        right = np.where(x < 1.0, np.exp(-1.0 / np.where(x < 1.0, 1.0 - x, 1.0)), 0.0)
    return left / (left + right)


def profile(level: np.ndarray, extent: float) -> np.ndarray:
    """1 for level <= 1, 0 for level >= extent, smooth and monotone between."""
    return 1.0 - _transition((np.asarray(level, dtype=float) - 1.0) / (extent - 1.0))


@dataclass(frozen=True)
class BoxRotation:
    """Rotation along the nested rectangles of a Box, counterclockwise in the chart."""
    box: Box
    extent: float

    def perimeter_parameter(self, du: np.ndarray, dv: np.ndarray, s: np.ndarray) -> np.ndarray:
        horizontal = np.abs(du) >= np.abs(dv)
        return np.select(
            [horizontal & (du > 0), ~horizontal & (dv > 0), horizontal & (du <= 0)],
            [(dv + s) / (8 * s), 0.25 + (s - du) / (8 * s), 0.5 + (s - dv) / (8 * s)],
            0.75 + (du + s) / (8 * s),
        )

    def perimeter_point(self, tau: np.ndarray, s: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        side = np.clip(np.floor(4 * tau), 0, 3).astype(int)
        p = s * (2 * (4 * tau - side) - 1)
        du = np.choose(side, [s, -p, -s, p])
        dv = np.choose(side, [p, s, -p, -s])
        return du, dv

    def move(self, t: float, uv: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        (cu, cv), (a, b) = self.box.center, self.box.half
        du = (uv[..., 0] - cu) / a
        dv = (uv[..., 1] - cv) / b
        s = np.maximum(np.abs(du), np.abs(dv))
        amount = t * profile(s, self.extent)
        moved = (amount != 0.0) & (s > 0.0)
        out = np.array(uv, dtype=float, copy=True)
        if moved.any():
            s_m = s[moved]
            tau = np.mod(self.perimeter_parameter(du[moved], dv[moved], s_m) + amount[moved], 1.0)
            du2, dv2 = self.perimeter_point(tau, s_m)
            out[moved, 0] = cu + a * du2
            out[moved, 1] = cv + b * dv2
        return moved, out


@dataclass(frozen=True)
class StripShear:
    """Translation of each meridian in the strip by t * profile in the v direction."""
    strip: Strip
    extent: float

    def move(self, t: float, uv: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        amount = t * profile(self.strip.level(uv), self.extent)
        moved = amount != 0.0
        out = np.array(uv, dtype=float, copy=True)
        out[moved, 1] = np.mod(out[moved, 1] + amount[moved], 1.0)
        return moved, out


@dataclass(frozen=True)
class BandTranslation:
    """Translation along the longitudes v = c(u) + lam h(u) of a WavyBand."""
    band: WavyBand
    extent: float

    def move(self, t: float, uv: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        lam = self.band.leaf(uv)
        amount = t * profile(np.abs(lam), self.extent)
        moved = amount != 0.0
        out = np.array(uv, dtype=float, copy=True)
        if moved.any():
            total = self.band.total
            tau = self.band.primitive(uv[moved, 0]) / total
            tau = np.mod(tau + amount[moved], 1.0)
            u = self.band.inverse_primitive(tau * total)
            out[moved, 0] = np.mod(u, 1.0)
            out[moved, 1] = np.mod(self.band.center_at(u) + lam[moved] * self.band.width_at(u), 1.0)
        return moved, out


def flow_for(w: Region, v: Region):
    if isinstance(w, Box):
        return BoxRotation(w, v.extent)
    if isinstance(w, Strip):
        return StripShear(w, v.extent)
    if isinstance(w, WavyBand):
        return BandTranslation(w, v.extent)
    raise TypeError(f"No model flow for region type {type(w).__name__}")


@dataclass(frozen=True)
class ChartedLeg:
    """A chart flow acting on ambient points, time reversed when sign is -1."""
    surface: Surface
    flow: object
    sign: int = 1

    def __call__(self, t: float, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        moved, uv = self.flow.move(self.sign * t, self.surface.to_area_coords(points))
        out = np.array(points, copy=True)
        if moved.any():
            out[moved] = self.surface.from_area_coords(uv[moved])
        return out


@dataclass(frozen=True)
class ModelFlow:
    generator: str
    iso: Isotopy
    support: str


CENTRAL_GENERATOR = "z"


def rho_flow(surface: Surface, regions: RegionSpec, generator: str, sign: int = 1) -> ModelFlow:
    """The isotopy realizing rho_eps(generator), or its inverse for sign -1.

    The central generator z of P3 maps to the identity isotopy.
    """
    if generator == CENTRAL_GENERATOR and CENTRAL_GENERATOR in surface.group.alphabet:
        return ModelFlow(generator, Isotopy.identity(), "none")
    if generator not in regions.W:
        raise InvalidGenerator(
            f"'{generator}' has no model flow on the {surface.name}; "
            f"expected one of {sorted(regions.W)}"
        )
    w, v = regions.W[generator], regions.V[generator]
    name = generator if sign == 1 else f"{generator}^-1"
    leg = ChartedLeg(surface, flow_for(w, v), sign)
    return ModelFlow(generator, Isotopy((leg,), f"rho({name})"), v.name)


def rho_isotopy(surface: Surface, regions: RegionSpec, alpha: BraidWord) -> Isotopy:
    """Concatenation of the model flows of the letters of alpha."""
    iso = Isotopy.identity()
    alphabet = alpha.group.alphabet
    for index, sign in alpha.letters:
        iso = iso.then(rho_flow(surface, regions, alphabet[index], sign).iso)
    return iso
