from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from ...errors import GroupMismatch, InsufficientSamples, InvalidArity
from ..groups import BraidWord, GroupId, WordSampler, multiply

EvalFn = Callable[[Tuple[BraidWord, ...]], float]


@dataclass(frozen=True)
class CochainHandle:
    """A homogeneous n-cochain given by an evaluation function.

    Attributes:
        group: Group the arguments live in
        degree: n, the cochain takes n + 1 arguments
        eval_fn: Function of the argument tuple
        bounded_hint: Known upper bound of the sup norm, if any
        description: Human readable origin of the cochain
    """
    group: GroupId
    degree: int
    eval_fn: EvalFn
    bounded_hint: Optional[float] = None
    description: str = ""

    def __call__(self, *elements: BraidWord) -> float:
        if len(elements) != self.degree + 1:
            raise InvalidArity(
                f"A degree {self.degree} cochain takes {self.degree + 1} arguments, got {len(elements)}"
            )
        for element in elements:
            if element.group != self.group:
                raise GroupMismatch(f"Cochain on {self.group} evaluated on a {element.group} word")
        return float(self.eval_fn(tuple(elements)))

    @classmethod
    def constant(cls, group: GroupId, degree: int, value: float) -> "CochainHandle":
        return cls(group, degree, lambda _: value, abs(value), f"constant {value}")

    @classmethod
    def zero(cls, group: GroupId, degree: int) -> "CochainHandle":
        return cls(group, degree, lambda _: 0.0, 0.0, "zero")


def coboundary(c: CochainHandle) -> CochainHandle:
    """Alternating sum of c over the faces of an (n+1)-tuple."""

    def evaluate(elements: Tuple[BraidWord, ...]) -> float:
        return sum(
            (-1) ** i * c.eval_fn(elements[:i] + elements[i + 1:])
            for i in range(len(elements))
        )

    hint = None if c.bounded_hint is None else (c.degree + 2) * c.bounded_hint
    return CochainHandle(c.group, c.degree + 1, evaluate, hint, f"delta({c.description})")


def right_translate(elements: Sequence[BraidWord], h: BraidWord) -> Tuple[BraidWord, ...]:
    return tuple(multiply(g, h) for g in elements)


def homogeneity_defect(c: CochainHandle, sampler: WordSampler, n_samples: int) -> float:
    """Largest |c(g0 h, ..., gn h) - c(g0, ..., gn)| over sampled tuples and h."""
    worst = 0.0
    for _ in range(n_samples):
        elements = sampler.sample_tuple(c.degree + 1)
        h = sampler.sample()
        worst = max(worst, abs(c(*right_translate(elements, h)) - c(*elements)))
    return worst


def sup_norm_estimate(c: CochainHandle, sampler: WordSampler, n_samples: int) -> float:
    """Sampled lower bound for the sup norm of c."""
    if n_samples < 1:
        raise InsufficientSamples(f"sup_norm_estimate needs at least one sample, got {n_samples}")
    if sampler.group != c.group:
        raise GroupMismatch(f"Sampler draws {sampler.group} words, cochain lives on {c.group}")
    return max(abs(c(*sampler.sample_tuple(c.degree + 1))) for _ in range(n_samples))
