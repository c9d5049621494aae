"""Quick invariant suite run by the `selftest` command."""
import logging
from fractions import Fraction
from typing import Callable, List, Tuple

import numpy as np

from ..repository.cochains import CochainHandle, brooks_qm, coboundary, homogenize, pullback_qm, qm_to_cochain
from ..repository.groups import (
    B3,
    F2,
    P3,
    PSL2Z,
    BraidWord,
    WordSampler,
    conjugate_in_group,
    embed_P3,
    equal_in_group,
    free_part,
    free_reduce,
    full_twist,
    inverse,
    is_pure,
    multiply,
    rewrite_pure_braid,
)
from ..repository.integration import lambda_constant, mc_gamma_hat, sample_configuration
from ..repository.regions import TypeSignature, build_regions, predicted_gamma, rho_isotopy
from ..repository.surfaces import Configuration, SurfaceFactory
from ..repository.trajectories import gamma
from ..results_manager import Result
from .verify_case_table import configuration_of_type

logger = logging.getLogger(__name__)

Check = Callable[[np.random.Generator], str]


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise AssertionError(message)


def check_reduction(rng: np.random.Generator) -> str:
    for group in (B3, P3, F2, PSL2Z):
        sampler = WordSampler(group, 12, rng)
        for _ in range(50):
            w = sampler.sample()
            _expect(free_reduce(w) == w, f"reduction is not idempotent on {w}")
            _expect(free_reduce(multiply(w, inverse(w))).is_empty, f"w w^-1 is not trivial for {w}")
    return "reduction idempotent, inverses cancel"


def check_conjugacy(rng: np.random.Generator) -> str:
    sampler = WordSampler(B3, 8, rng)
    for _ in range(50):
        w, g = sampler.sample(), sampler.sample()
        _expect(conjugate_in_group(multiply(g, w, inverse(g)), w, B3), f"{g} {w} {g}^-1 not conjugate to {w}")
    _expect(equal_in_group(embed_P3(BraidWord.parse(P3, "z")), full_twist(3)), "z is not the full twist")
    return "explicit conjugates recognized in B3"


def check_pure_rewriting(rng: np.random.Generator) -> str:
    sampler = WordSampler(P3, 6, rng)
    for _ in range(30):
        w = sampler.sample()
        image = embed_P3(w)
        _expect(is_pure(image), f"image of {w} is not pure")
        _expect(equal_in_group(rewrite_pure_braid(image), w), f"rewriting does not invert embedding on {w}")
    return "rewrite_pure_braid inverts embed_P3"


def check_double_coboundary(rng: np.random.Generator) -> str:
    q = pullback_qm(homogenize(brooks_qm(BraidWord.parse(F2, "a b")), 6), free_part, P3, "free_part")
    c = coboundary(qm_to_cochain(q, 2))
    sampler = WordSampler(P3, 6, rng)
    for _ in range(30):
        value = c(*sampler.sample_tuple(4))
        _expect(abs(value) < 1e-9, f"delta delta = {value}")
    return "delta of delta vanishes"


def check_case_table(rng: np.random.Generator) -> str:
    disc = SurfaceFactory.create_surface("disc")
    regions = build_regions(disc, 0.2)
    base = regions.base_configuration()
    for counts in ((1, 1, 1), (2, 0, 1), (2, 1, 0)):
        signature = TypeSignature(counts, True)
        x = configuration_of_type(regions, signature, rng)
        for text in ("a", "b", "a b a^-1 b^-1"):
            alpha = BraidWord.parse(P3, text)
            extracted = gamma(rho_isotopy(disc, regions, alpha), x, base)
            predicted = predicted_gamma(alpha, signature, disc).word
            _expect(is_pure(extracted), f"{text} on {counts} traced an impure braid")
            _expect(
                conjugate_in_group(embed_P3(predicted), extracted, B3),
                f"{text} on {counts}: extracted {extracted}, predicted {predicted}",
            )
    return "numeric braids match the disc case table"


def check_composition(rng: np.random.Generator) -> str:
    disc = SurfaceFactory.create_surface("disc")
    regions = build_regions(disc, 0.3)
    base = regions.base_configuration()
    g = rho_isotopy(disc, regions, BraidWord.parse(P3, "a"))
    h = rho_isotopy(disc, regions, BraidWord.parse(P3, "b^-1"))
    for _ in range(3):
        x = sample_configuration(disc, 3, rng)
        gx = Configuration(disc, g.time_one(np.array(x.points)))
        whole = gamma(g.then(h), x, base)
        parts = free_reduce(multiply(gamma(g, x, base), gamma(h, gx, base)))
        _expect(whole == parts, f"gamma(gh) = {whole} but gamma(g) gamma(h) = {parts}")
    return "gamma(gh, x) = gamma(g, x) gamma(h, g x)"


def check_bad_volume(rng: np.random.Generator) -> str:
    for name in ("disc", "sphere", "torus"):
        surface = SurfaceFactory.create_surface(name)
        regions = build_regions(surface, 0.3)
        identity = BraidWord.identity(surface.group)
        report = mc_gamma_hat(CochainHandle.zero(surface.group, 1), (identity, identity), regions, 4000,
                              seed=int(rng.integers(2 ** 31)), audit_fraction=0.0)
        _expect(
            report.bad_fraction_consistent(),
            f"{name}: bad fraction {report.bad_fraction}, expected {report.expected_bad_fraction}",
        )
    return "bad volume matches 1 - (1 - eps)^m"


def check_lambda(rng: np.random.Generator) -> str:
    expected = {"disc": Fraction(2, 9), "sphere": Fraction(3, 32), "torus": Fraction(1, 2)}
    for name, value in expected.items():
        got = lambda_constant(SurfaceFactory.create_surface(name)).value
        _expect(got == value, f"{name}: Lambda = {got}, expected {value}")
    return "Lambda constants 2/9, 3/32, 1/2"


CHECKS: List[Tuple[str, Check]] = [
    ("word reduction", check_reduction),
    ("conjugacy decision", check_conjugacy),
    ("pure braid rewriting", check_pure_rewriting),
    ("double coboundary", check_double_coboundary),
    ("case table", check_case_table),
    ("composition identity", check_composition),
    ("bad volume", check_bad_volume),
    ("lambda constants", check_lambda),
]


def run_selftest(seed: int = 0) -> Tuple[Result, bool]:
    rows = []
    for name, check in CHECKS:
        rng = np.random.default_rng([seed, len(rows)])
        try:
            detail = check(rng)
            passed = True
        except Exception as e:
            detail = f"{type(e).__name__}: {e}"
            passed = False
            logger.error("Self test '%s' failed: %s", name, detail)
        rows.append({"property": name, "passed": passed, "detail": detail})
    ok = all(row["passed"] for row in rows)
    payload = {"command": "selftest", "seed": seed, "passed": ok, "results": rows}
    return Result(payload, rows), ok
