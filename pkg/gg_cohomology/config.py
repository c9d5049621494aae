"""Run configuration shared by the command line actions."""
import json
import logging
import os
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .errors import GGError, InvalidConfig
from .repository.cochains import CochainHandle, brooks_qm, combine_qms, homogenize, pullback_qm, qm_to_cochain
from .repository.groups import F2, P3, BraidWord, GroupId, free_part
from .repository.surfaces import Surface, SurfaceFactory

logger = logging.getLogger(__name__)

Command = Literal["verify-case-table", "sweep", "estimate", "selftest"]

DEFAULT_EPSILONS = (0.5, 0.3, 0.2, 0.1, 0.05)

# pattern of the default class, in the free group the surface's cochains factor through
DEFAULT_PATTERNS: Dict[str, str] = {
    "disc": "a b",
    "sphere": "d1sq d2sq",
    "torus": "a1 b1",
}

DEFAULT_ELEMENTS: Dict[str, Dict[int, Tuple[str, ...]]] = {
    "disc": {
        1: ("e", "a b a^-1 b^-1 a b a^-1 b^-1"),
        2: ("e", "a b a^-1 b^-1", "a^-1 b a b^-1"),
    },
    "sphere": {
        1: ("e", "d1sq d2sq d1sq^-1 d2sq^-1 d1sq d2sq d1sq^-1 d2sq^-1"),
        2: ("e", "d1sq d2sq d1sq^-1 d2sq^-1", "d1sq^-1 d2sq d1sq d2sq^-1"),
    },
    "torus": {
        1: ("e", "a1 b1 a1^-1 b1^-1 a1 b1 a1^-1 b1^-1"),
        2: ("e", "a1 b1 a1^-1 b1^-1", "a1^-1 b1 a1 b1^-1"),
    },
}


def _free_group_of(surface: Surface) -> GroupId:
    """Free group the quasimorphisms of a surface class are defined on."""
    return F2 if surface.group == P3 else surface.group


class PatternTerm(BaseModel):
    pattern: str
    weight: float = 1.0


class ClassSpec(BaseModel):
    """A cochain built from Brooks quasimorphisms.

    On the disc the patterns are F2 words in a, b and the class is pulled
    back to P3 along the projection dropping z. On the sphere and torus the
    patterns are words in the surface group itself.
    """
    model_config = ConfigDict(extra="forbid")

    kind: Literal["qm", "zero"] = "qm"
    patterns: List[PatternTerm] = Field(default_factory=list)
    degree: Literal[1, 2] = 1
    homogenize: bool = True
    depth: int = Field(default=12, ge=1, le=30)

    def terms(self, surface: Surface) -> List[PatternTerm]:
        return self.patterns or [PatternTerm(pattern=DEFAULT_PATTERNS[surface.name])]

    def build(self, surface: Surface) -> CochainHandle:
        if self.kind == "zero":
            return CochainHandle.zero(surface.group, self.degree)
        free = _free_group_of(surface)
        terms = [(t.weight, brooks_qm(BraidWord.parse(free, t.pattern))) for t in self.terms(surface)]
        q = combine_qms(terms) if len(terms) > 1 else terms[0][1]
        if self.homogenize:
            q = homogenize(q, self.depth)
        if free != surface.group:
            q = pullback_qm(q, free_part, surface.group, "free_part")
        return qm_to_cochain(q, self.degree)


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    command: Command
    surface: Literal["disc", "sphere", "torus"] = "disc"
    epsilon: float = 0.2
    epsilons: List[float] = Field(default_factory=lambda: list(DEFAULT_EPSILONS))
    cochain: ClassSpec = Field(default_factory=ClassSpec)
    elements: Optional[List[str]] = None
    n_samples: int = Field(default=10000, ge=1)
    seed: int = Field(default=0, ge=0)
    workers: int = Field(default=1, ge=1)
    audit_fraction: float = Field(default=0.02, ge=0.0, le=1.0)
    configs_per_type: int = Field(default=25, ge=1)
    random_words: int = Field(default=10, ge=0)
    steps: int = Field(default=1024, ge=30)
    out: Optional[Path] = None

    @field_validator("epsilons")
    @classmethod
    def _decreasing(cls, value: List[float]) -> List[float]:
        if not value or any(b >= a for a, b in zip(value, value[1:])):
            raise ValueError("epsilons must be a nonempty strictly decreasing list")
        return value

    def surface_model(self) -> Surface:
        return SurfaceFactory.create_surface(self.surface)

    def element_words(self, surface: Surface) -> Tuple[BraidWord, ...]:
        texts = self.elements or DEFAULT_ELEMENTS[surface.name][self.cochain.degree]
        return tuple(BraidWord.parse(surface.group, text) for text in texts)

    def validate_for_run(self) -> None:
        """Check the class and element words against the surface before any work starts.

        Raises:
            InvalidConfig: wrong number of elements or unparsable words
        """
        surface = self.surface_model()
        try:
            words = self.element_words(surface)
            self.cochain.build(surface)
        except GGError as e:
            raise InvalidConfig(str(e)) from e
        if self.command in ("sweep", "estimate") and len(words) != self.cochain.degree + 1:
            raise InvalidConfig(
                f"A degree {self.cochain.degree} class needs {self.cochain.degree + 1} elements, got {len(words)}"
            )

    @classmethod
    def from_sources(cls, flags: dict, config_file: Optional[Path] = None) -> "RunConfig":
        """Flags overlaid by the keys of a JSON config file.

        Raises:
            InvalidConfig: unreadable file or values failing validation
        """
        values = {key: value for key, value in flags.items() if value is not None}
        if config_file is not None:
            try:
                values.update(json.loads(Path(config_file).read_text(encoding="utf-8")))
            except (OSError, json.JSONDecodeError) as e:
                raise InvalidConfig(f"Could not read config file {config_file}: {e}") from e
            if "command" in flags:
                values["command"] = flags["command"]
        try:
            return cls.model_validate(values)
        except ValidationError as e:
            raise InvalidConfig(str(e)) from e


def environment_defaults() -> dict:
    """GG_WORKERS, GG_SEED and GG_LOG_LEVEL from the environment or a .env file."""
    load_dotenv()
    defaults = {}
    for key, name in (("workers", "GG_WORKERS"), ("seed", "GG_SEED")):
        raw = os.getenv(name)
        if raw:
            try:
                defaults[key] = int(raw)
            except ValueError as e:
                raise InvalidConfig(f"{name} must be an integer, got '{raw}'") from e
    defaults["log_level"] = os.getenv("GG_LOG_LEVEL", "WARNING").upper()
    return defaults
