"""Uniform random configurations and deterministic sample streams."""
from dataclasses import dataclass
from typing import List

import numpy as np

from ...errors import InvalidArity
from ..surfaces import Configuration, Surface
from ..trajectories.trajectory import DEFAULT_SEPARATION

BLOCK_SIZE = 1024


def _separations(surface: Surface, points: np.ndarray) -> np.ndarray:
    m = points.shape[1]
    i, j = np.triu_indices(m, k=1)
    return np.min(surface.distance(points[:, i], points[:, j]), axis=1)


def sample_block(
    surface: Surface,
    rng: np.random.Generator,
    count: int,
    separation: float = DEFAULT_SEPARATION,
) -> np.ndarray:
    """`count` configurations as a (count, m, d) array.

    Points are i.i.d. uniform for the normalized area form; configurations
    with two points within `separation` are drawn again.
    """
    m = surface.strands
    block = surface.sample_points(rng, count * m).reshape(count, m, -1)
    crowded = _separations(surface, block) <= separation
    while crowded.any():
        block[crowded] = surface.sample_points(rng, int(crowded.sum()) * m).reshape(-1, m, block.shape[2])
        crowded = _separations(surface, block) <= separation
    return block


def sample_configuration(
    surface: Surface,
    m: int,
    rng: np.random.Generator,
    separation: float = DEFAULT_SEPARATION,
) -> Configuration:
    if m != surface.strands:
        raise InvalidArity(f"The {surface.name} model carries {surface.strands} points, not {m}")
    return Configuration(surface, sample_block(surface, rng, 1, separation)[0])


@dataclass(frozen=True)
class SampleBlock:
    index: int
    count: int
    seed: np.random.SeedSequence

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def sample_blocks(seed: int, n_samples: int, block_size: int = BLOCK_SIZE) -> List[SampleBlock]:
    """Fixed size blocks with spawned seeds.

    The partition depends only on (seed, n_samples, block_size), so results
    do not depend on how blocks are spread over workers.
    """
    n_blocks = -(-n_samples // block_size)
    children = np.random.SeedSequence(seed).spawn(n_blocks)
    return [
        SampleBlock(k, min(block_size, n_samples - k * block_size), child)
        for k, child in enumerate(children)
    ]
