"""Tethered loops in configuration space and braids read off from them.

A loop starts at the base configuration z, runs along tethers to x during
the first third of the time interval, follows the isotopy during the second
third and returns along tethers to z during the last third. The braid of
the loop is read off from the order of the strands projected on a fixed
axis: every exchange of two adjacent strands emits one Artin letter.
"""
import csv
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from ...errors import (
    DegenerateTether,
    GenericPositionFailure,
    ImpureBraid,
    UnsupportedSurface,
)
from ..groups import BraidWord, GroupId, free_reduce, is_pure
from ..surfaces import Configuration, Surface, SurfaceKind
from .isotopy import Isotopy

logger = logging.getLogger(__name__)

DEFAULT_STEPS = 1024
DEFAULT_SEPARATION = 1e-4
SWAP_TOLERANCE = 1e-9
TIE_TOLERANCE = 1e-12
MAX_RETRIES = 8

# Generic direction; base points in U1, U2, U3 project in increasing order.
EXTRACTION_ANGLE = 1.5 * math.pi + 0.1

Order = Tuple[int, ...]


def _tether(surface: Surface, start: np.ndarray, end: np.ndarray, s: float) -> np.ndarray:
    if surface.kind is SurfaceKind.SPHERE:
        chord = (1.0 - s) * start + s * end
        norms = np.linalg.norm(chord, axis=-1, keepdims=True)
        if np.any(norms < TIE_TOLERANCE):
            raise DegenerateTether("A tether joins antipodal points of the sphere")
        return chord / norms
    if surface.kind is SurfaceKind.TORUS:
        step = np.mod(end - start + 0.5, 1.0) - 0.5
        return np.mod(start + s * step, 1.0)
    return (1.0 - s) * start + s * end


def _closest_approach(start: np.ndarray, end: np.ndarray) -> float:
    """Least distance between any two strands moving linearly from start to end."""
    m = len(start)
    closest = math.inf
    for i in range(m):
        for j in range(i + 1, m):
            d0 = start[i] - start[j]
            dd = (end[i] - end[j]) - d0
            speed = float(dd @ dd)
            s = 0.0 if speed == 0.0 else float(np.clip(-(d0 @ dd) / speed, 0.0, 1.0))
            closest = min(closest, float(np.linalg.norm(d0 + s * dd)))
    return closest


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Samples of a loop on a shared time grid plus exact evaluation in between.

    `positions` has shape (K, m, d) for K sample times.
    """
    surface: Surface
    times: np.ndarray
    positions: np.ndarray
    path: Callable[[float], np.ndarray]

    @property
    def m(self) -> int:
        return self.positions.shape[1]

    def position_at(self, t: float) -> np.ndarray:
        return self.path(t)

    def write_csv(self, destination: Union[str, Path]) -> Path:
        """One row per strand and sample time: strand, t, then the coordinates."""
        destination = Path(destination)
        destination.parent.mkdir(parents=True, exist_ok=True)
        columns = ("x", "y", "z")[: self.positions.shape[2]]
        with open(destination, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f)
            writer.writerow(("strand", "t") + columns)
            for strand in range(self.m):
                for t, point in zip(self.times, self.positions[:, strand]):
                    writer.writerow([strand + 1, repr(float(t))] + [repr(float(c)) for c in point])
        return destination


def tethered_loop(
    iso: Isotopy,
    x: Configuration,
    z: Configuration,
    steps: int = DEFAULT_STEPS,
    separation: float = DEFAULT_SEPARATION,
) -> Trajectory:
    """The loop z -> x, then the isotopy applied to x, then g(x) -> z.

    Raises:
        DegenerateTether: two strands come within `separation` of each other
    """
    if x.surface is not z.surface and x.surface.kind is not z.surface.kind:
        raise UnsupportedSurface("x and z live on different surfaces")
    if x.m != z.m:
        raise DegenerateTether(f"x has {x.m} points but z has {z.m}")
    surface = x.surface
    start = np.array(z.points)
    middle = np.array(x.points)
    end = np.asarray(iso.time_one(middle))

    if surface.kind is SurfaceKind.DISC:
        for a, b in ((start, middle), (end, start)):
            if _closest_approach(a, b) <= separation:
                raise DegenerateTether(f"Tethers come within {separation} of each other")

    def path(t: float) -> np.ndarray:
        segment = min(int(t * 3.0), 2)
        s = float(np.clip(t * 3.0 - segment, 0.0, 1.0))
        if segment == 0:
            return _tether(surface, start, middle, s)
        if segment == 1:
            return np.asarray(iso(s, middle))
        return _tether(surface, end, start, s)

    per_segment = max(steps // 3, 1)
    times = np.arange(3 * per_segment + 1) / (3 * per_segment)
    positions = np.stack([path(float(t)) for t in times])

    gaps = [surface.min_separation(p) for p in positions]
    worst = int(np.argmin(gaps))
    if gaps[worst] <= separation:
        raise DegenerateTether(
            f"Strands come within {gaps[worst]:.3g} of each other at t={times[worst]:.6f}"
        )
    return Trajectory(surface, times, positions, path)


def _frame() -> Tuple[np.ndarray, np.ndarray]:
    axis = np.array([math.cos(EXTRACTION_ANGLE), math.sin(EXTRACTION_ANGLE)])
    return axis, np.array([-axis[1], axis[0]])


def _order(points: np.ndarray, axis: np.ndarray) -> Order:
    projection = points @ axis
    order = np.argsort(projection, kind="stable")
    if np.any(np.diff(projection[order]) < TIE_TOLERANCE):
        raise GenericPositionFailure("Two strands share a projection at a sample time")
    return tuple(int(i) for i in order)


def _adjacent_swap(before: Order, after: Order) -> Optional[int]:
    changed = [i for i in range(len(before)) if before[i] != after[i]]
    if len(changed) != 2 or changed[1] != changed[0] + 1:
        return None
    i = changed[0]
    if before[i] == after[i + 1] and before[i + 1] == after[i]:
        return i
    return None


class _Extractor:
    def __init__(self, trajectory: Trajectory):
        self.trajectory = trajectory
        self.axis, self.normal = _frame()
        self.letters: List[Tuple[int, int]] = []

    def letter_at_swap(self, t0: float, t1: float, rank: int, order: Order) -> Tuple[int, int]:
        left, right = order[rank], order[rank + 1]

        def gap(t: float) -> float:
            p = self.trajectory.position_at(t)
            return float((p[right] - p[left]) @ self.axis)

        lo, hi = t0, t1
        while hi - lo > SWAP_TOLERANCE:
            mid = 0.5 * (lo + hi)
            if gap(mid) > 0.0:
                lo = mid
            else:
                hi = mid
        p = self.trajectory.position_at(0.5 * (lo + hi))
        height = float((p[right] - p[left]) @ self.normal)
        if abs(height) < TIE_TOLERANCE:
            raise GenericPositionFailure(f"Strands {left + 1} and {right + 1} meet at t={lo:.9f}")
        # counterclockwise exchange: the left strand passes below
        return rank, 1 if height > 0.0 else -1

    def resolve(self, t0: float, t1: float, before: Order, after: Order) -> None:
        if before == after:
            return
        rank = _adjacent_swap(before, after)
        if rank is not None:
            self.letters.append(self.letter_at_swap(t0, t1, rank, before))
            return
        if t1 - t0 < SWAP_TOLERANCE:
            raise GenericPositionFailure(f"Simultaneous exchanges near t={t0:.9f}")
        mid = 0.5 * (t0 + t1)
        order_mid = _order(self.trajectory.position_at(mid), self.axis)
        self.resolve(t0, mid, before, order_mid)
        self.resolve(mid, t1, order_mid, after)


def extract_braid(trajectory: Trajectory) -> BraidWord:
    """Artin word of a disc trajectory, freely reduced.

    Raises:
        UnsupportedSurface: the trajectory is not on the disc
        GenericPositionFailure: a tie or simultaneous exchange could not be resolved
    """
    if trajectory.surface.kind is not SurfaceKind.DISC:
        raise UnsupportedSurface(f"Braid extraction is only implemented on the disc, not the {trajectory.surface.name}")
    extractor = _Extractor(trajectory)
    orders = [_order(p, extractor.axis) for p in trajectory.positions]
    for k in range(len(trajectory.times) - 1):
        extractor.resolve(float(trajectory.times[k]), float(trajectory.times[k + 1]), orders[k], orders[k + 1])
    return free_reduce(BraidWord(GroupId.artin(trajectory.m), tuple(extractor.letters)))


def _perturbed(x: Configuration, attempt: int, separation: float) -> Configuration:
    rng = np.random.default_rng(attempt)
    offset = rng.uniform(-0.09, 0.09, size=x.points.shape) * separation
    points = np.array(x.points) + offset
    norms = np.linalg.norm(points, axis=-1, keepdims=True)
    points = np.where(norms > 1.0, points * (1.0 - separation) / norms, points)
    return Configuration(x.surface, points)


def gamma(
    iso: Isotopy,
    x: Configuration,
    z: Configuration,
    steps: int = DEFAULT_STEPS,
    separation: float = DEFAULT_SEPARATION,
    retries: int = MAX_RETRIES,
) -> BraidWord:
    """Pure braid traced by x under iso, closed up by tethers to z.

    Degenerate configurations are perturbed by less than separation / 10
    and retried.

    Raises:
        GenericPositionFailure, DegenerateTether: still degenerate after all retries
        ImpureBraid: the extracted braid does not induce the identity permutation
    """
    candidate = x
    for attempt in range(retries + 1):
        try:
            word = extract_braid(tethered_loop(iso, candidate, z, steps, separation))
            break
        except (GenericPositionFailure, DegenerateTether) as e:
            if attempt == retries:
                raise
            logger.debug("Retrying %s after %s", iso.description, e)
            candidate = _perturbed(x, attempt + 1, separation)
    if not is_pure(word):
        raise ImpureBraid(f"{iso.description} traced the non-pure braid {word}")
    return word
