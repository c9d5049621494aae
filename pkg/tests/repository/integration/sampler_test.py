import numpy as np
import pytest

from gg_cohomology.errors import InvalidArity
from gg_cohomology.repository.integration import sample_blocks, sample_configuration
from gg_cohomology.repository.integration.sampler import sample_block
from gg_cohomology.repository.surfaces import SurfaceFactory


class TestSampleBlocks:
    def test_partition(self):
        blocks = sample_blocks(7, 2500, block_size=1024)
        assert [b.count for b in blocks] == [1024, 1024, 452]
        assert [b.index for b in blocks] == [0, 1, 2]

    def test_exact_multiple(self):
        assert [b.count for b in sample_blocks(0, 2048, block_size=1024)] == [1024, 1024]

    def test_streams_are_reproducible_and_distinct(self):
        first = [b.rng().random(3) for b in sample_blocks(3, 3000)]
        again = [b.rng().random(3) for b in sample_blocks(3, 3000)]
        assert all(np.array_equal(a, b) for a, b in zip(first, again))
        assert not np.array_equal(first[0], first[1])

    def test_partition_ignores_total(self):
        # earlier blocks do not depend on how many samples follow
        short = sample_blocks(11, 1500)
        long = sample_blocks(11, 5000)
        assert np.array_equal(short[0].rng().random(4), long[0].rng().random(4))


class TestSampling:
    @pytest.mark.parametrize("name", ["disc", "sphere", "torus"])
    def test_block_shape(self, name):
        surface = SurfaceFactory.create_surface(name)
        block = sample_block(surface, np.random.default_rng(0), 50)
        assert block.shape[:2] == (50, surface.strands)
        assert surface.contains(block.reshape(-1, block.shape[2])).all()

    def test_crowded_configurations_redrawn(self):
        disc = SurfaceFactory.create_surface("disc")
        block = sample_block(disc, np.random.default_rng(1), 200, separation=0.2)
        for row in block:
            assert disc.min_separation(row) > 0.2

    def test_sample_configuration(self):
        torus = SurfaceFactory.create_surface("torus")
        config = sample_configuration(torus, 2, np.random.default_rng(2))
        assert config.m == 2

    def test_wrong_arity(self):
        torus = SurfaceFactory.create_surface("torus")
        with pytest.raises(InvalidArity, match="carries 2 points, not 3"):
            sample_configuration(torus, 3, np.random.default_rng(2))
