from dataclasses import dataclass
from enum import Enum
from typing import Dict, Tuple

from ...errors import UnsupportedGroup


class GroupTag(Enum):
    ARTIN = "artin"
    P3_ON_GENERATORS = "p3"
    SPHERE_QUOTIENT_P4 = "sphere_p4"
    SPHERE_QUOTIENT_B4 = "sphere_b4"
    TORUS_QUOTIENT_P2 = "torus_p2"
    TORUS_QUOTIENT_B2 = "torus_b2"
    FREE_GROUP = "free"
    FREE_PRODUCT = "free_product"


@dataclass(frozen=True)
class GroupId:
    """Identifies one of the finitely presented groups the library computes in.

    `rank` is the number of strands for ARTIN and the rank for FREE_GROUP.
    `orders` lists the cyclic factor orders of a FREE_PRODUCT, 0 meaning an
    infinite cyclic factor.
    """
    tag: GroupTag
    rank: int = 0
    orders: Tuple[int, ...] = ()

    @classmethod
    def artin(cls, strands: int) -> "GroupId":
        return cls(GroupTag.ARTIN, rank=strands)

    @classmethod
    def free(cls, rank: int) -> "GroupId":
        return cls(GroupTag.FREE_GROUP, rank=rank)

    @classmethod
    def free_product(cls, orders: Tuple[int, ...]) -> "GroupId":
        return cls(GroupTag.FREE_PRODUCT, orders=tuple(orders))

    @property
    def alphabet(self) -> Tuple[str, ...]:
        tag = self.tag
        if tag is GroupTag.ARTIN:
            return tuple(f"s{i}" for i in range(1, self.rank))
        if tag is GroupTag.FREE_GROUP:
            if self.rank > 26:
                raise UnsupportedGroup("Free groups of rank above 26 have no alphabet")
            return tuple(chr(ord("a") + i) for i in range(self.rank))
        if tag is GroupTag.FREE_PRODUCT:
            if self.orders == (2, 3):
                return ("x", "y")
            return tuple(f"g{i}" for i in range(1, len(self.orders) + 1))
        return _FIXED_ALPHABETS[tag]

    @property
    def cyclic_orders(self) -> Tuple[int, ...]:
        """Order of each generator, 0 for infinite order."""
        if self.tag is GroupTag.FREE_PRODUCT:
            return self.orders
        if self.tag is GroupTag.TORUS_QUOTIENT_B2:
            return (2, 2, 2)
        return (0,) * len(self.alphabet)

    @property
    def has_torsion(self) -> bool:
        return any(self.cyclic_orders)

    @property
    def is_free(self) -> bool:
        return self.tag in FREE_TAGS or (
            self.tag is GroupTag.FREE_PRODUCT and not self.has_torsion
        )

    @property
    def name(self) -> str:
        if self.tag is GroupTag.ARTIN:
            return f"B{self.rank}"
        if self.tag is GroupTag.FREE_GROUP:
            return f"F{self.rank}"
        if self.tag is GroupTag.FREE_PRODUCT:
            return "FP(" + ",".join(str(o) for o in self.orders) + ")"
        return _FIXED_NAMES[self.tag]

    @classmethod
    def parse(cls, name: str) -> "GroupId":
        """Inverse of `name`, e.g. "B3", "P3", "F2", "FP(2,3)", "torus_b2"."""
        text = name.strip()
        for tag, fixed in _FIXED_NAMES.items():
            if text in (fixed, tag.value):
                return cls(tag)
        try:
            if text.startswith("FP(") and text.endswith(")"):
                return cls.free_product(tuple(int(o) for o in text[3:-1].split(",")))
            if text.startswith("B"):
                return cls.artin(int(text[1:]))
            if text.startswith("F"):
                return cls.free(int(text[1:]))
        except ValueError:
            pass
        raise UnsupportedGroup(f"Unknown group name '{name}'")

    def __str__(self) -> str:
        return self.name


FREE_TAGS = {
    GroupTag.FREE_GROUP,
    GroupTag.SPHERE_QUOTIENT_P4,
    GroupTag.TORUS_QUOTIENT_P2,
}

_FIXED_ALPHABETS: Dict[GroupTag, Tuple[str, ...]] = {
    GroupTag.P3_ON_GENERATORS: ("a", "b", "z"),
    GroupTag.SPHERE_QUOTIENT_P4: ("d1sq", "d2sq"),
    GroupTag.SPHERE_QUOTIENT_B4: ("d1", "d2", "d3"),
    GroupTag.TORUS_QUOTIENT_P2: ("a1", "b1"),
    GroupTag.TORUS_QUOTIENT_B2: ("a", "b", "c"),
}

_FIXED_NAMES: Dict[GroupTag, str] = {
    GroupTag.P3_ON_GENERATORS: "P3",
    GroupTag.SPHERE_QUOTIENT_P4: "P4S2/Z",
    GroupTag.SPHERE_QUOTIENT_B4: "B4S2",
    GroupTag.TORUS_QUOTIENT_P2: "P2T2/Z",
    GroupTag.TORUS_QUOTIENT_B2: "B2T2/Z",
}

B3 = GroupId.artin(3)
P3 = GroupId(GroupTag.P3_ON_GENERATORS)
F2 = GroupId.free(2)
PSL2Z = GroupId.free_product((2, 3))
SPHERE_P4 = GroupId(GroupTag.SPHERE_QUOTIENT_P4)
SPHERE_B4 = GroupId(GroupTag.SPHERE_QUOTIENT_B4)
TORUS_P2 = GroupId(GroupTag.TORUS_QUOTIENT_P2)
TORUS_B2 = GroupId(GroupTag.TORUS_QUOTIENT_B2)

# Generator conventions. sigma_i acts on strand positions as the transposition
# (i, i+1); the positive crossing is the counterclockwise exchange.
#
# B3 -> PSL(2,Z) = <x, y | x^2 = y^3 = 1> sends Delta = s1 s2 s1 to x and
# s1 s2 to y, which forces s1 -> y^2 x and s2 -> x y^2.
PSL2Z_IMAGES: Dict[str, str] = {
    "s1": "y y x",
    "s2": "x y y",
}

# a = s1^2, b = s2^2, z = Delta^2 = (s1 s2 s1)^2
P3_EMBEDDING: Dict[str, str] = {
    "a": "s1 s1",
    "b": "s2 s2",
    "z": "s1 s2 s1 s1 s2 s1",
}

# In P4(S^2)/Z the twist of strands 3, 4 is the twist along the curve that also
# bounds strands 1, 2.
SPHERE_DELTA3_SQUARED = "d1sq"

# Coset representatives of P3 in B3, one per permutation of three strands.
B3_TRANSVERSAL = ("", "s1", "s2", "s1 s2", "s2 s1", "s1 s2 s1")
