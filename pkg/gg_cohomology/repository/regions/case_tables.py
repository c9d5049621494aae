"""Symbolic predictions of gamma(rho_eps(alpha), x) from the type of x.

Predictions hold up to conjugacy by a braid depending only on x, and up to
the relabeling of strands by region. Disc predictions are taken modulo the
centre of P3 since rho_eps(z) is the identity.
"""
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ...errors import BadPointNoPrediction, GroupMismatch, InvalidArity, UnsupportedSurface
from ..groups import BraidWord, free_part, free_reduce, multiply, power, s_vector
from ..groups.algebra import lift_free_part
from ..surfaces import Surface, SurfaceKind
from .regions import TypeSignature


@dataclass(frozen=True)
class PredictedBraid:
    word: BraidWord
    conjugacy_only: bool


MAIN = "alpha"

# type -> factors (generator, exponent source), multiplied left to right
DISC_TABLE: Dict[Tuple[int, int, int], object] = {
    (1, 1, 1): MAIN,
    (3, 0, 0): (("z", "s1"),),
    (2, 1, 0): (("z", "s1"),),
    (0, 0, 3): (("z", "s2"),),
    (0, 1, 2): (("z", "s2"),),
    (0, 3, 0): (("z", "s1"), ("z", "s2")),
    (2, 0, 1): (("a", "s1"),),
    (1, 0, 2): (("a", "s2"),),
    (0, 2, 1): (("a", "s1"), ("z", "s2")),
    (1, 2, 0): (("z", "s1"), ("a", "s2")),
}

# d3sq is identified with d1sq: both twist along the curve splitting {1,2} from {3,4}
SPHERE_TABLE: Dict[Tuple[int, int, int, int], object] = {
    (1, 1, 1, 1): MAIN,
    (0, 2, 0, 2): (("d1sq", "s1"), ("d1sq", "s2")),
    (2, 0, 2, 0): (("d1sq", "s1"), ("d1sq", "s2")),
}


def _from_factors(alpha: BraidWord, factors) -> BraidWord:
    s = s_vector(alpha)
    exponents = {"s1": s.s1, "s2": s.s2}
    word = BraidWord.identity(alpha.group)
    for generator, source in factors:
        word = multiply(word, power(BraidWord.generator(alpha.group, generator), exponents[source]))
    return word


def _predict_disc(alpha: BraidWord, counts: Tuple[int, ...]) -> PredictedBraid:
    row = DISC_TABLE[counts]
    if row == MAIN:
        return PredictedBraid(lift_free_part(free_part(alpha)), True)
    central_only = all(generator == "z" for generator, _ in row)
    return PredictedBraid(_from_factors(alpha, row), not central_only)


def _predict_sphere(alpha: BraidWord, counts: Tuple[int, ...]) -> PredictedBraid:
    row = SPHERE_TABLE.get(counts)
    if row == MAIN:
        return PredictedBraid(free_reduce(alpha), True)
    if row is None:
        # a W region twists its points nontrivially only when it holds exactly two
        p, q, r, _ = counts
        row = tuple(
            ("d1sq", source)
            for source, twisted in (("s1", p + q == 2), ("s2", q + r == 2))
            if twisted
        )
    return PredictedBraid(_from_factors(alpha, row), True)


def _predict_torus(alpha: BraidWord, counts: Tuple[int, ...]) -> PredictedBraid:
    p, q = counts
    kept = {0: p == 1, 1: q == 1}
    letters = tuple(letter for letter in alpha.letters if kept[letter[0]])
    return PredictedBraid(free_reduce(BraidWord(alpha.group, letters)), True)


# what a W region holding k points contributes per letter of its generator
_COUNT_IMAGES = {
    SurfaceKind.DISC: {2: "a", 3: "z"},
    SurfaceKind.SPHERE: {2: "d1sq"},
}


def count_rule(alpha: BraidWord, signature: TypeSignature, surface: Surface) -> Optional[BraidWord]:
    """Prediction from the number of points in each W region alone.

    Returns None on the type with one point per region, where the two
    twists do not commute, and on surfaces the rule does not cover.
    """
    if surface.kind not in _COUNT_IMAGES or all(c == 1 for c in signature.counts):
        return None
    counts = signature.counts
    held = {0: counts[0] + counts[1], 1: counts[1] + counts[2]}
    images = _COUNT_IMAGES[surface.kind]
    word = BraidWord.identity(alpha.group)
    for index, sign in alpha.letters:
        if index not in held or held[index] not in images:
            continue
        word = multiply(word, BraidWord.generator(alpha.group, images[held[index]], sign))
    return word


_PREDICTORS = {
    SurfaceKind.DISC: _predict_disc,
    SurfaceKind.SPHERE: _predict_sphere,
    SurfaceKind.TORUS: _predict_torus,
}


def predicted_gamma(alpha: BraidWord, signature: TypeSignature, surface: Surface) -> PredictedBraid:
    """Predicted braid of rho_eps(alpha) on a configuration of the given type.

    Raises:
        BadPointNoPrediction: the type is not a good type
        GroupMismatch: alpha is not a word in the surface's pure braid quotient
    """
    if not signature.good:
        raise BadPointNoPrediction(f"No prediction for the bad type {signature.label}")
    if alpha.group != surface.group:
        raise GroupMismatch(f"The {surface.name} model takes {surface.group} words, got {alpha.group}")
    if len(signature.counts) != surface.strands or sum(signature.counts) != surface.strands:
        raise InvalidArity(f"Type {signature.label} does not describe {surface.strands} points")
    if surface.kind not in _PREDICTORS:
        raise UnsupportedSurface(f"No case table for the {surface.name}")
    return _PREDICTORS[surface.kind](alpha, signature.counts)
