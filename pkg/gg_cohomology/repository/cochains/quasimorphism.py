"""Quasimorphisms: Brooks counting functions, homogenization, pullbacks."""
import functools
import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from ...errors import GroupMismatch, InvalidConfig, InvalidDegree, InvalidPattern, UnsupportedGroup
from ..groups import BraidWord, GroupId, GroupTag, cyclic_normal_form, cyclic_reduce, free_reduce, inverse, multiply, power
from ..groups.algebra import syllables
from .cochain import CochainHandle, coboundary

logger = logging.getLogger(__name__)

PowerEvalFn = Callable[[BraidWord, int], float]


@dataclass(frozen=True)
class QmHandle:
    """A real valued function on a group with bounded additivity defect.

    `power_eval(core, n)` evaluates on core^n for a cyclically reduced core
    without building the power, when the quasimorphism knows how.
    """
    group: GroupId
    eval_fn: Callable[[BraidWord], float]
    defect_estimate: float
    tolerance: float = 0.0
    description: str = ""
    power_eval: Optional[PowerEvalFn] = None

    def __call__(self, g: BraidWord) -> float:
        if g.group != self.group:
            raise GroupMismatch(f"Quasimorphism on {self.group} evaluated on a {g.group} word")
        return float(self.eval_fn(g))


def _supports_cyclic_words(group: GroupId) -> bool:
    return group.is_free or group.tag in (GroupTag.FREE_PRODUCT, GroupTag.TORUS_QUOTIENT_B2)


def _occurrences(letters: Sequence, pattern: Sequence) -> int:
    size = len(pattern)
    pattern = tuple(pattern)
    return sum(
        1 for i in range(len(letters) - size + 1) if tuple(letters[i:i + size]) == pattern
    )


def _occurrences_in_power(core: Sequence, pattern: Sequence, repeats: int) -> int:
    """Occurrences of pattern in core repeated `repeats` times."""
    n, size = len(core), len(pattern)
    if n == 0:
        return 0
    if n * repeats < size + n:
        return _occurrences(tuple(core) * repeats, pattern)
    periodic = tuple(core) * (size // n + 2)
    pattern = tuple(pattern)
    starts = [periodic[r:r + size] == pattern for r in range(n)]
    # positions n*repeats - j for j < size run past the end
    tail = sum(starts[(-j) % n] for j in range(1, size))
    return repeats * sum(starts) - tail


def brooks_qm(pattern: BraidWord) -> QmHandle:
    """Counting quasimorphism: occurrences of pattern minus those of its inverse.

    Occurrences may overlap and are counted in the reduced word.
    """
    group = pattern.group
    if not _supports_cyclic_words(group):
        raise UnsupportedGroup(f"Brooks quasimorphisms need a free group or free product, got {group}")
    if pattern.is_empty:
        raise InvalidPattern("The pattern of a Brooks quasimorphism must be nonempty")
    if free_reduce(pattern) != pattern or cyclic_reduce(pattern) != pattern:
        raise InvalidPattern(f"Pattern '{pattern}' is not cyclically reduced")

    forward = pattern.letters
    backward = inverse(pattern).letters
    length = len(forward)
    if group.has_torsion:
        defect = 3.0 * (length + max(group.cyclic_orders))
    else:
        defect = 3.0 * length

    def evaluate(g: BraidWord) -> float:
        letters = free_reduce(g).letters
        return _occurrences(letters, forward) - _occurrences(letters, backward)

    def evaluate_power(core: BraidWord, repeats: int) -> float:
        return (
            _occurrences_in_power(core.letters, forward, repeats)
            - _occurrences_in_power(core.letters, backward, repeats)
        )

    return QmHandle(group, evaluate, defect, 0.0, f"brooks({pattern})", evaluate_power)


def _is_torsion_core(core: BraidWord) -> bool:
    runs = syllables(core)
    return len(runs) == 1 and core.group.cyclic_orders[runs[0][0]] != 0


def homogenize(q: QmHandle, depth: int = 12) -> QmHandle:
    """q'(g) = q(c^(2^depth)) / 2^depth, c the cyclic normal form of g.

    Off groups with cyclic reduction the core is g itself.
    """
    if depth < 1:
        raise InvalidConfig(f"depth must be at least 1, got {depth}")
    repeats = 2 ** depth
    cyclic = _supports_cyclic_words(q.group)

    @functools.lru_cache(maxsize=65536)
    def evaluate_core(core: BraidWord) -> float:
        if core.is_empty:
            return 0.0
        if cyclic and _is_torsion_core(core):
            return 0.0
        if cyclic and q.power_eval is not None:
            return q.power_eval(core, repeats) / repeats
        return q.eval_fn(power(core, repeats)) / repeats

    def evaluate(g: BraidWord) -> float:
        core = cyclic_normal_form(g) if cyclic else free_reduce(g)
        return evaluate_core(core)

    return QmHandle(
        q.group,
        evaluate,
        2.0 * q.defect_estimate + 3.0 * q.defect_estimate / repeats,
        q.defect_estimate / repeats,
        f"homogenized({q.description})",
    )


def pullback_qm(q: QmHandle, hom: Callable[[BraidWord], BraidWord], source: GroupId, name: str = "") -> QmHandle:
    """q composed with a homomorphism from `source` into q's group."""
    return QmHandle(
        source,
        lambda g: q(hom(g)),
        q.defect_estimate,
        q.tolerance,
        f"{q.description} o {name or getattr(hom, '__name__', 'hom')}",
    )


def combine_qms(terms: Sequence[Tuple[float, QmHandle]]) -> QmHandle:
    """Finite linear combination of quasimorphisms on one group."""
    if not terms:
        raise InvalidPattern("A combination needs at least one quasimorphism")
    group = terms[0][1].group
    for _, q in terms:
        if q.group != group:
            raise GroupMismatch(f"Cannot combine quasimorphisms on {group} and {q.group}")
    terms = tuple(terms)
    power_eval = None
    if all(q.power_eval is not None for _, q in terms):
        power_eval = lambda core, n: sum(w * q.power_eval(core, n) for w, q in terms)
    return QmHandle(
        group,
        lambda g: sum(w * q.eval_fn(g) for w, q in terms),
        sum(abs(w) * q.defect_estimate for w, q in terms),
        sum(abs(w) * q.tolerance for w, q in terms),
        " + ".join(f"{w}*{q.description}" for w, q in terms),
        power_eval,
    )


def qm_to_cochain(q: QmHandle, degree: int) -> CochainHandle:
    """Degree 1: c(g0, g1) = q(g1 g0^-1). Degree 2: the coboundary of that."""
    if degree not in (1, 2):
        raise InvalidDegree(f"Quasimorphisms give cochains of degree 1 or 2, got {degree}")

    def evaluate(elements: Tuple[BraidWord, ...]) -> float:
        g0, g1 = elements
        return q.eval_fn(multiply(g1, inverse(g0)))

    c1 = CochainHandle(q.group, 1, evaluate, None, f"c1({q.description})")
    if degree == 1:
        return c1
    c2 = coboundary(c1)
    return CochainHandle(q.group, 2, c2.eval_fn, 3.0 * q.defect_estimate, f"delta c1({q.description})")
