from dataclasses import dataclass
from typing import Iterable, List, Tuple

from ...errors import InvalidWord
from .definitions import GroupId

Letter = Tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    """A word over the alphabet of `group`.

    Letters are (generator index, sign) pairs with 0-based indices and sign
    +1 or -1. Words are values; nothing here reduces them, see
    `algebra.free_reduce`.
    """
    group: GroupId
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(tuple(letter) for letter in self.letters)
        size = len(self.group.alphabet)
        for letter in letters:
            if len(letter) != 2:
                raise InvalidWord(f"Malformed letter {letter!r}")
            index, sign = letter
            if not isinstance(index, int) or not 0 <= index < size:
                raise InvalidWord(
                    f"Generator index {index!r} is not valid for {self.group} "
                    f"(alphabet {self.group.alphabet})"
                )
            if sign not in (1, -1):
                raise InvalidWord(f"Letter sign must be +1 or -1, got {sign!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, group: GroupId) -> "BraidWord":
        return cls(group, ())

    @classmethod
    def generator(cls, group: GroupId, name: str, sign: int = 1) -> "BraidWord":
        return cls(group, ((_index_of(group, name), sign),))

    @classmethod
    def parse(cls, group: GroupId, text: str) -> "BraidWord":
        """Parse whitespace separated generator names, `^-1` marking inverses.

        The empty string and the single token "e" both denote the identity.
        """
        tokens = text.split()
        if tokens == ["e"]:
            return cls.identity(group)
        letters: List[Letter] = []
        for token in tokens:
            name, sign = token, 1
            if token.endswith("^-1"):
                name, sign = token[:-3], -1
            letters.append((_index_of(group, name), sign))
        return cls(group, tuple(letters))

    def to_text(self) -> str:
        alphabet = self.group.alphabet
        return " ".join(
            alphabet[index] if sign == 1 else f"{alphabet[index]}^-1"
            for index, sign in self.letters
        )

    def concat(self, other: "BraidWord") -> "BraidWord":
        if other.group != self.group:
            raise InvalidWord(f"Cannot concatenate a {self.group} word with a {other.group} word")
        return BraidWord(self.group, self.letters + other.letters)

    def formal_inverse(self) -> "BraidWord":
        return BraidWord(self.group, tuple((index, -sign) for index, sign in reversed(self.letters)))

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return self.to_text() or "e"


def _index_of(group: GroupId, name: str) -> int:
    try:
        return group.alphabet.index(name)
    except ValueError:
        raise InvalidWord(f"'{name}' is not a generator of {group} (alphabet {group.alphabet})")


def words_from_text(group: GroupId, texts: Iterable[str]) -> Tuple[BraidWord, ...]:
    return tuple(BraidWord.parse(group, text) for text in texts)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..m} stored as its tuple of images."""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def transposition(cls, m: int, i: int, j: int) -> "Permutation":
        images = list(range(1, m + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(j) = self(other(j))
        return Permutation(tuple(self.images[k - 1] for k in other.images))

    @property
    def is_identity(self) -> bool:
        return all(image == k for k, image in enumerate(self.images, start=1))


@dataclass(frozen=True)
class SVector:
    s1: int = 0
    s2: int = 0

    def __add__(self, other: "SVector") -> "SVector":
        return SVector(self.s1 + other.s1, self.s2 + other.s2)

    @property
    def is_zero(self) -> bool:
        return self.s1 == 0 and self.s2 == 0
