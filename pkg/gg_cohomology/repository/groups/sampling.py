from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from .algebra import free_reduce
from .definitions import GroupId
from .words import BraidWord


@dataclass
class WordSampler:
    """Draws random reduced words of bounded length.

    The sampler owns its generator; share a seed, not an instance, between
    threads.
    """
    group: GroupId
    max_length: int = 20
    rng: np.random.Generator = field(default_factory=np.random.default_rng)

    def sample(self) -> BraidWord:
        length = int(self.rng.integers(0, self.max_length + 1))
        generators = self.rng.integers(0, len(self.group.alphabet), size=length)
        signs = self.rng.choice((-1, 1), size=length)
        letters = tuple((int(g), int(s)) for g, s in zip(generators, signs))
        return free_reduce(BraidWord(self.group, letters))

    def sample_tuple(self, size: int) -> Tuple[BraidWord, ...]:
        return tuple(self.sample() for _ in range(size))
