import logging
from typing import Tuple

from ..config import RunConfig
from ..repository.integration import epsilon_sweep, mc_gamma_hat
from ..repository.regions import build_regions
from ..results_manager import Result

logger = logging.getLogger(__name__)


def _estimator_options(config: RunConfig) -> dict:
    return {"audit_fraction": config.audit_fraction, "workers": config.workers, "steps": config.steps}


def _type_rows(report) -> list:
    rows = [
        {"epsilon": report.epsilon, "type": label, "volume_fraction": part.volume_fraction,
         "partial_mean": part.partial_mean}
        for label, part in report.per_type.items()
    ]
    rows.append({"epsilon": report.epsilon, "type": "bad", "volume_fraction": report.bad_fraction,
                 "partial_mean": report.bad_partial_mean})
    return rows


def run_sweep(config: RunConfig) -> Tuple[Result, bool]:
    """Estimate the class at every epsilon of config.epsilons.

    Passes when d(eps) stays within its budget at every epsilon and ends
    strictly below its value at the largest epsilon (or at zero).
    """
    surface = config.surface_model()
    c = config.cochain.build(surface)
    elements = config.element_words(surface)
    sweep = epsilon_sweep(c, elements, surface, config.epsilons, config.n_samples, seed=config.seed,
                          **_estimator_options(config))
    rows = [row for report in sweep.reports for row in _type_rows(report)]
    payload = {
        "command": "sweep",
        "config": config.model_dump(mode="json"),
        "regions": [build_regions(surface, eps).to_dict() for eps in config.epsilons],
        "sweep": sweep.model_dump(mode="json"),
        "passed": sweep.passed,
    }
    if not sweep.distance_decreased:
        logger.warning("d(epsilon) did not decrease from %s to %s (%d non-decreasing steps)",
                       config.epsilons[0], config.epsilons[-1], sweep.non_decreasing_steps)
    return Result(payload, rows), sweep.passed


def run_estimate(config: RunConfig) -> Tuple[Result, bool]:
    """A single estimate at config.epsilon; passes when the bad volume is as expected."""
    surface = config.surface_model()
    regions = build_regions(surface, config.epsilon)
    c = config.cochain.build(surface)
    report = mc_gamma_hat(c, config.element_words(surface), regions, config.n_samples, seed=config.seed,
                          **_estimator_options(config))
    passed = report.bad_fraction_consistent()
    payload = {
        "command": "estimate",
        "config": config.model_dump(mode="json"),
        "regions": regions.to_dict(),
        "report": report.model_dump(mode="json"),
        "passed": passed,
    }
    return Result(payload, _type_rows(report)), passed
