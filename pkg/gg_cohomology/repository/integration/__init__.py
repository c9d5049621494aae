from .sampler import BLOCK_SIZE, SampleBlock, sample_block, sample_blocks, sample_configuration
from .estimator import (
    EstimateReport,
    LambdaConstant,
    SweepPoint,
    SweepReport,
    TypeBreakdown,
    epsilon_sweep,
    lambda_constant,
    mc_gamma_hat,
)

__all__ = [
    'BLOCK_SIZE', 'SampleBlock', 'sample_block', 'sample_blocks', 'sample_configuration',
    'EstimateReport', 'LambdaConstant', 'SweepPoint', 'SweepReport', 'TypeBreakdown',
    'epsilon_sweep', 'lambda_constant', 'mc_gamma_hat',
]
