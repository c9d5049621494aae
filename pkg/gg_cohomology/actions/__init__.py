"""
Actions module for gg_cohomology package.
Contains the batch actions behind the command line: case table
verification, estimates and epsilon sweeps, and the self test.
"""

from .verify_case_table import verify_case_table
from .run_sweep import run_estimate, run_sweep
from .selftest import run_selftest

__all__ = [
    "verify_case_table", "run_estimate", "run_sweep", "run_selftest"
]
