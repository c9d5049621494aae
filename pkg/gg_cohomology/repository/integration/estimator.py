"""Monte Carlo estimates of the averaged cochain over configuration space.

For a cochain c on the pure braid quotient of a surface and group elements
alpha_0..alpha_n, the integrand at a configuration x is
c(gamma(rho_eps(alpha_0), x), ..., gamma(rho_eps(alpha_n), x)). On good
configurations the braids come from the case tables; on bad disc
configurations they are extracted numerically. Bad configurations on the
sphere and torus only feed the error budget.
"""
import logging
import math
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from ...errors import (
    AuditFailure,
    DegenerateTether,
    GenericPositionFailure,
    GroupMismatch,
    ImpureBraid,
    InsufficientSamples,
    InvalidArity,
    InvalidConfig,
)
from ..cochains import CochainHandle
from ..groups import B3, BraidWord, conjugate_in_group, embed_P3, rewrite_pure_braid
from ..regions import RegionSpec, build_regions, good_types, predicted_gamma, rho_isotopy
from ..surfaces import Configuration, Surface, SurfaceKind
from ..trajectories import gamma
from .sampler import BLOCK_SIZE, SampleBlock, sample_block, sample_blocks

logger = logging.getLogger(__name__)

MIN_SAMPLES = 100
DEFAULT_AUDIT_FRACTION = 0.02


class TypeBreakdown(BaseModel):
    """volume_fraction of samples of one type and their share of the mean."""
    volume_fraction: float
    partial_mean: float


class EstimateReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    surface: str
    epsilon: float
    n_samples: int
    elements: Tuple[str, ...]
    cochain: str
    mean: float
    standard_error: float
    per_type: Dict[str, TypeBreakdown]
    bad_fraction: float
    bad_partial_mean: float
    bad_max_abs: float
    expected_bad_fraction: float
    lambda_eps: float
    audited: int
    numeric_failures: int
    seed: int

    def interval(self, sigmas: float = 3.0) -> Tuple[float, float]:
        return self.mean - sigmas * self.standard_error, self.mean + sigmas * self.standard_error

    def bad_fraction_consistent(self, sigmas: float = 3.0) -> bool:
        p = self.expected_bad_fraction
        return abs(self.bad_fraction - p) <= sigmas * math.sqrt(p * (1.0 - p) / self.n_samples) + 1e-12


@dataclass
class _Tally:
    """Sums over samples; merging two tallies is associative."""
    count: int = 0
    total: float = 0.0
    squares: float = 0.0
    type_counts: Dict[Tuple[int, ...], int] = field(default_factory=dict)
    type_sums: Dict[Tuple[int, ...], float] = field(default_factory=dict)
    bad_count: int = 0
    bad_total: float = 0.0
    bad_max_abs: float = 0.0
    audited: int = 0
    numeric_failures: int = 0

    def merge(self, other: "_Tally") -> "_Tally":
        self.count += other.count
        self.total += other.total
        self.squares += other.squares
        for key, value in other.type_counts.items():
            self.type_counts[key] = self.type_counts.get(key, 0) + value
        for key, value in other.type_sums.items():
            self.type_sums[key] = self.type_sums.get(key, 0.0) + value
        self.bad_count += other.bad_count
        self.bad_total += other.bad_total
        self.bad_max_abs = max(self.bad_max_abs, other.bad_max_abs)
        self.audited += other.audited
        self.numeric_failures += other.numeric_failures
        return self


class _Integrand:
    """Everything a worker needs to evaluate one block of samples."""

    def __init__(self, c: CochainHandle, elements: Sequence[BraidWord], regions: RegionSpec,
                 audit_fraction: float, steps: int, separation: float):
        self.c = c
        self.elements = tuple(elements)
        self.regions = regions
        self.surface: Surface = regions.surface
        self.audit_fraction = audit_fraction
        self.steps = steps
        self.separation = separation
        self.base = regions.base_configuration()
        self.isotopies = tuple(rho_isotopy(self.surface, regions, alpha) for alpha in self.elements)
        self.predicted = {}
        self.values = {}
        for signature in good_types(self.surface.strands):
            words = tuple(predicted_gamma(alpha, signature, self.surface) for alpha in self.elements)
            self.predicted[signature.counts] = words
            self.values[signature.counts] = c(*(p.word for p in words))

    def classify(self, block: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        uv = self.surface.to_area_coords(block)
        inside = np.stack([region.contains(uv) for region in self.regions.U])
        counts = inside.sum(axis=2).T
        good = inside.any(axis=0).all(axis=1)
        return counts, good

    def nearest_counts(self, block: np.ndarray) -> np.ndarray:
        uv = self.surface.to_area_coords(block)
        levels = np.stack([region.level(uv) for region in self.regions.U])
        nearest = np.argmin(levels, axis=0)
        return np.stack([(nearest == i).sum(axis=1) for i in range(self.regions.m)], axis=1)

    def numeric_braids(self, config: Configuration) -> Tuple[BraidWord, ...]:
        return tuple(
            BraidWord.identity(B3) if iso.is_identity
            else gamma(iso, config, self.base, self.steps, self.separation)
            for iso in self.isotopies
        )

    def audit(self, config: Configuration, counts: Tuple[int, ...]) -> None:
        braids = self.numeric_braids(config)
        for alpha, predicted, extracted in zip(self.elements, self.predicted[counts], braids):
            if not conjugate_in_group(embed_P3(predicted.word), extracted, B3):
                raise AuditFailure(
                    f"Type {counts}, alpha={alpha}: extracted {extracted} is not conjugate "
                    f"to the predicted {predicted.word}"
                )

    def bad_value(self, config: Configuration) -> float:
        braids = self.numeric_braids(config)
        return self.c(*(rewrite_pure_braid(b) for b in braids))

    def run(self, block: SampleBlock) -> _Tally:
        rng = block.rng()
        points = sample_block(self.surface, rng, block.count, self.separation)
        audit_draws = rng.random(block.count)
        counts, good = self.classify(points)
        values = np.zeros(block.count)
        tally = _Tally(count=block.count)
        numeric = self.surface.kind is SurfaceKind.DISC

        for k in range(block.count):
            key = tuple(int(c) for c in counts[k])
            if good[k]:
                values[k] = self.values[key]
                tally.type_counts[key] = tally.type_counts.get(key, 0) + 1
                tally.type_sums[key] = tally.type_sums.get(key, 0.0) + values[k]
                if numeric and audit_draws[k] < self.audit_fraction:
                    try:
                        self.audit(Configuration(self.surface, points[k]), key)
                        tally.audited += 1
                    except (DegenerateTether, GenericPositionFailure) as e:
                        logger.debug("Skipped audit of sample %d in block %d: %s", k, block.index, e)
                continue
            tally.bad_count += 1
            if numeric:
                try:
                    values[k] = self.bad_value(Configuration(self.surface, points[k]))
                except (DegenerateTether, GenericPositionFailure, ImpureBraid) as e:
                    logger.warning("Numeric braid failed for sample %d in block %d: %s", k, block.index, e)
                    tally.numeric_failures += 1
                    continue
                tally.bad_total += values[k]
                tally.bad_max_abs = max(tally.bad_max_abs, abs(values[k]))

        if not numeric and tally.bad_count:
            nearest = self.nearest_counts(points[~good])
            for row in nearest:
                budget = abs(self.values[tuple(int(c) for c in row)])
                tally.bad_max_abs = max(tally.bad_max_abs, budget)

        tally.total = float(values.sum())
        tally.squares = float(values @ values)
        return tally


# Integrand of the running estimate; forked workers inherit it.
_ACTIVE_INTEGRAND: Optional[_Integrand] = None


def _run_block(block: SampleBlock) -> _Tally:
    return _ACTIVE_INTEGRAND.run(block)


def _run_blocks(integrand: _Integrand, blocks: Sequence[SampleBlock], workers: int) -> List[_Tally]:
    """Tallies in block order. Forked workers read the integrand from _ACTIVE_INTEGRAND."""
    global _ACTIVE_INTEGRAND
    if workers <= 1 or len(blocks) < 2:
        return [integrand.run(block) for block in blocks]
    if "fork" not in multiprocessing.get_all_start_methods():
        logger.warning("fork is unavailable on this platform; running blocks serially")
        return [integrand.run(block) for block in blocks]

    _ACTIVE_INTEGRAND = integrand
    try:
        with ProcessPoolExecutor(max_workers=workers, mp_context=multiprocessing.get_context("fork")) as pool:
            return list(pool.map(_run_block, blocks))
    finally:
        _ACTIVE_INTEGRAND = None


def _check_inputs(c: CochainHandle, elements: Sequence[BraidWord], regions: RegionSpec, n_samples: int) -> None:
    group = regions.surface.group
    if c.group != group:
        raise GroupMismatch(f"The {regions.surface.name} needs a cochain on {group}, got one on {c.group}")
    for alpha in elements:
        if alpha.group != group:
            raise GroupMismatch(f"Element '{alpha}' is a {alpha.group} word, expected {group}")
    if len(elements) != c.degree + 1:
        raise InvalidArity(f"A degree {c.degree} cochain takes {c.degree + 1} elements, got {len(elements)}")
    if n_samples < MIN_SAMPLES:
        raise InsufficientSamples(f"At least {MIN_SAMPLES} samples are needed, got {n_samples}")


def mc_gamma_hat(
    c: CochainHandle,
    elements: Sequence[BraidWord],
    regions: RegionSpec,
    n_samples: int,
    seed: int = 0,
    audit_fraction: float = DEFAULT_AUDIT_FRACTION,
    workers: int = 1,
    steps: int = 1024,
    separation: float = 1e-4,
    block_size: int = BLOCK_SIZE,
) -> EstimateReport:
    """Monte Carlo estimate of the averaged cochain on rho_eps(elements).

    Raises:
        GroupMismatch: c or an element lives on the wrong group
        InsufficientSamples: fewer than 100 samples
        AuditFailure: a numerically extracted braid contradicts its prediction
    """
    _check_inputs(c, elements, regions, n_samples)
    integrand = _Integrand(c, elements, regions, audit_fraction, steps, separation)
    blocks = sample_blocks(seed, n_samples, block_size)
    logger.info("Estimating %s on %s, epsilon=%s, %d samples in %d blocks",
                c.description, regions.surface.name, regions.epsilon, n_samples, len(blocks))

    tallies = _run_blocks(integrand, blocks, workers)
    tally = _Tally()
    for part in tallies:
        tally.merge(part)

    n = tally.count
    mean = tally.total / n
    variance = max(tally.squares - n * mean * mean, 0.0) / (n - 1)
    per_type = {
        "(" + ",".join(str(k) for k in key) + ")": TypeBreakdown(
            volume_fraction=tally.type_counts[key] / n,
            partial_mean=tally.type_sums[key] / n,
        )
        for key in sorted(tally.type_counts, reverse=True)
    }
    m = regions.surface.strands
    return EstimateReport(
        surface=regions.surface.name,
        epsilon=regions.epsilon,
        n_samples=n,
        elements=tuple(str(alpha) for alpha in elements),
        cochain=c.description,
        mean=mean,
        standard_error=math.sqrt(variance / n),
        per_type=per_type,
        bad_fraction=tally.bad_count / n,
        bad_partial_mean=tally.bad_total / n,
        bad_max_abs=tally.bad_max_abs,
        expected_bad_fraction=1.0 - (1.0 - regions.epsilon) ** m,
        lambda_eps=regions.lambda_eps(),
        audited=tally.audited,
        numeric_failures=tally.numeric_failures,
        seed=seed,
    )


class SweepPoint(BaseModel):
    epsilon: float
    mean: float
    target: float
    distance: float
    budget: float
    within_budget: bool
    budget_ratio: Optional[float]


def _budget_ratio(distance: float, budget: float) -> Optional[float]:
    """d / B; None when the budget is zero and d is not."""
    if budget > 0.0:
        return distance / budget
    return 0.0 if distance == 0.0 else None


class SweepReport(BaseModel):
    """One estimate per epsilon and d(eps) = |mean - Lambda_eps c(elements)| against its budget.

    The budget bounds the chosen cochain representative, not the norm of its class.
    A sweep passes when every point is within budget and d at the smallest
    epsilon is strictly below d at the largest one, or is exactly zero.
    """
    surface: str
    cochain: str
    elements: Tuple[str, ...]
    class_value: float
    lambda_limit: float
    reports: List[EstimateReport]
    points: List[SweepPoint]
    all_within_budget: bool
    distance_decreased: bool
    non_decreasing_steps: int
    passed: bool

    @classmethod
    def summarize(cls, points: Sequence[SweepPoint], **fields) -> "SweepReport":
        points = list(points)
        distances = [p.distance for p in points]
        decreased = len(points) < 2 or distances[-1] < distances[0] or distances[-1] == 0.0
        within = all(p.within_budget for p in points)
        return cls(
            points=points,
            all_within_budget=within,
            distance_decreased=decreased,
            non_decreasing_steps=sum(1 for a, b in zip(distances, distances[1:]) if b >= a),
            passed=within and decreased,
            **fields,
        )


def epsilon_sweep(
    c: CochainHandle,
    elements: Sequence[BraidWord],
    surface: Surface,
    epsilons: Sequence[float],
    n_samples: int,
    seed: int = 0,
    **options,
) -> SweepReport:
    """Run mc_gamma_hat for each epsilon, in decreasing order.

    Raises:
        InvalidConfig: epsilons are not strictly decreasing
        InfeasibleEpsilon: an epsilon admits no region layout
    """
    epsilons = list(epsilons)
    if not epsilons or any(b >= a for a, b in zip(epsilons, epsilons[1:])):
        raise InvalidConfig(f"epsilon list must be nonempty and strictly decreasing, got {epsilons}")
    layouts = [build_regions(surface, eps) for eps in epsilons]
    class_value = c(*elements)
    m = surface.strands

    reports, points = [], []
    for regions in layouts:
        report = mc_gamma_hat(c, elements, regions, n_samples, seed=seed, **options)
        target = regions.lambda_eps() * class_value
        distance = abs(report.mean - target)
        budget = (1.0 - (1.0 - regions.epsilon) ** m) * report.bad_max_abs + 3.0 * report.standard_error
        logger.info("epsilon=%s: mean=%.6g target=%.6g d=%.3g budget=%.3g",
                    regions.epsilon, report.mean, target, distance, budget)
        reports.append(report)
        points.append(SweepPoint(
            epsilon=regions.epsilon,
            mean=report.mean,
            target=target,
            distance=distance,
            budget=budget,
            within_budget=distance <= budget + 1e-12,
            budget_ratio=_budget_ratio(distance, budget),
        ))
    return SweepReport.summarize(
        points,
        surface=surface.name,
        cochain=c.description,
        elements=tuple(str(alpha) for alpha in elements),
        class_value=class_value,
        lambda_limit=float(lambda_constant(surface).value),
        reports=reports,
    )


@dataclass(frozen=True)
class LambdaConstant:
    """m! times the product of the limiting U_i areas, each 1/m."""
    surface: str
    value: Fraction
    formula_terms: Tuple[Fraction, ...]


def lambda_constant(surface: Surface) -> LambdaConstant:
    m = surface.strands
    areas = (Fraction(1, m),) * m
    return LambdaConstant(surface.name, math.factorial(m) * math.prod(areas), areas)
