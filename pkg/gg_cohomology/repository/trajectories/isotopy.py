from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

Leg = Callable[[float, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class _Reparametrized:
    leg: Leg
    time_change: Callable[[float], float]

    def __call__(self, t: float, points: np.ndarray) -> np.ndarray:
        return self.leg(self.time_change(t), points)


@dataclass(frozen=True)
class Isotopy:
    """A concatenation of legs, each an isotopy from the identity.

    A leg maps (t, points) to the image of the (m, d) point array at time t
    and is the identity at t = 0. The whole isotopy runs its legs one after
    the other on equal subintervals of [0, 1].
    """
    legs: Tuple[Leg, ...] = ()
    description: str = "identity"

    @classmethod
    def identity(cls) -> "Isotopy":
        return cls((), "identity")

    @property
    def is_identity(self) -> bool:
        return not self.legs

    def then(self, other: "Isotopy") -> "Isotopy":
        if self.is_identity:
            return other
        if other.is_identity:
            return self
        return Isotopy(self.legs + other.legs, f"{self.description} * {other.description}")

    def reparametrized(self, time_change: Callable[[float], float], name: str = "") -> "Isotopy":
        """Same legs run at another speed; time_change must fix 0 and 1."""
        return Isotopy(
            tuple(_Reparametrized(leg, time_change) for leg in self.legs),
            name or f"reparametrized({self.description})",
        )

    def time_one(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        for leg in self.legs:
            points = leg(1.0, points)
        return points

    def __call__(self, t: float, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        if not self.legs:
            return points
        k = len(self.legs)
        index = min(int(np.floor(t * k)), k - 1)
        for leg in self.legs[:index]:
            points = leg(1.0, points)
        return self.legs[index](t * k - index, points)
