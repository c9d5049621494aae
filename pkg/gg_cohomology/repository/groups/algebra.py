"""Word algebra for the braid groups and their quotients.

B3 is never put in a normal form. Equality and conjugacy in B3 are decided
through the exponent sum together with the image in PSL(2,Z) = Z/2 * Z/3,
which is enough because the centre is generated by Delta^2 and has exponent
sum 6.
"""
import functools
import logging
from typing import Dict, Iterator, List, Sequence, Tuple

from ...errors import GroupMismatch, ImpureBraid, InvalidArity, UnsupportedGroup
from .definitions import (
    B3,
    B3_TRANSVERSAL,
    F2,
    P3,
    P3_EMBEDDING,
    PSL2Z,
    PSL2Z_IMAGES,
    GroupId,
    GroupTag,
)
from .words import BraidWord, Letter, Permutation, SVector

logger = logging.getLogger(__name__)

Syllable = Tuple[int, int]

Z_INDEX = 2


def _cancel(letters: Sequence[Letter]) -> List[Letter]:
    stack: List[Letter] = []
    for index, sign in letters:
        if stack and stack[-1] == (index, -sign):
            stack.pop()
        else:
            stack.append((index, sign))
    return stack


def _merge_syllables(syllables: Sequence[Syllable], orders: Sequence[int]) -> List[Syllable]:
    stack: List[Syllable] = []
    for index, exponent in syllables:
        if stack and stack[-1][0] == index:
            exponent += stack.pop()[1]
        if orders[index]:
            exponent %= orders[index]
        if exponent:
            stack.append((index, exponent))
    return stack


def _expand(syllables: Sequence[Syllable], orders: Sequence[int]) -> Tuple[Letter, ...]:
    letters: List[Letter] = []
    for index, exponent in syllables:
        sign = 1 if exponent > 0 or orders[index] else -1
        letters.extend([(index, sign)] * abs(exponent))
    return tuple(letters)


def free_reduce(w: BraidWord) -> BraidWord:
    """Normal form of `w`.

    Free groups get free reduction, free products get the alternating
    syllable form with torsion exponents in 1..order-1, P3 words get their
    free part reduced with the central z letters collected at the end.
    Artin words only lose adjacent cancelling pairs.
    """
    group = w.group
    if group.tag is GroupTag.P3_ON_GENERATORS:
        core = _cancel([letter for letter in w.letters if letter[0] != Z_INDEX])
        k = sum(sign for index, sign in w.letters if index == Z_INDEX)
        return BraidWord(group, tuple(core) + ((Z_INDEX, 1 if k > 0 else -1),) * abs(k))
    orders = group.cyclic_orders
    if not any(orders):
        return BraidWord(group, tuple(_cancel(w.letters)))
    return BraidWord(group, _expand(_merge_syllables(w.letters, orders), orders))


def syllables(w: BraidWord) -> List[Syllable]:
    """Maximal runs (generator, exponent) of the reduced word."""
    runs: List[Syllable] = []
    for index, sign in free_reduce(w).letters:
        if runs and runs[-1][0] == index:
            runs[-1] = (index, runs[-1][1] + sign)
        else:
            runs.append((index, sign))
    return runs


def _check_same_group(*words: BraidWord) -> GroupId:
    group = words[0].group
    for word in words[1:]:
        if word.group != group:
            raise GroupMismatch(f"Words live in different groups: {group} and {word.group}")
    return group


def multiply(*words: BraidWord) -> BraidWord:
    group = _check_same_group(*words)
    letters: List[Letter] = []
    for word in words:
        letters.extend(word.letters)
    return free_reduce(BraidWord(group, tuple(letters)))


def inverse(w: BraidWord) -> BraidWord:
    return free_reduce(w.formal_inverse())


def power(w: BraidWord, k: int) -> BraidWord:
    if k < 0:
        return power(inverse(w), -k)
    return free_reduce(BraidWord(w.group, w.letters * k))


def commutator(u: BraidWord, v: BraidWord) -> BraidWord:
    return multiply(u, v, u.formal_inverse(), v.formal_inverse())


def _strand_count(group: GroupId) -> int:
    if group.tag is GroupTag.ARTIN:
        return group.rank
    if group.tag is GroupTag.SPHERE_QUOTIENT_B4:
        return 4
    raise UnsupportedGroup(f"{group} has no projection to a symmetric group")


def permutation_of(w: BraidWord) -> Permutation:
    """Image in the symmetric group, s_i acting as the transposition (i, i+1)."""
    images = list(range(1, _strand_count(w.group) + 1))
    for index, _ in w.letters:
        images[index], images[index + 1] = images[index + 1], images[index]
    return Permutation(tuple(images))


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity


@functools.cache
def _embedding_images() -> Dict[int, Tuple[Letter, ...]]:
    return {
        P3.alphabet.index(name): BraidWord.parse(B3, text).letters
        for name, text in P3_EMBEDDING.items()
    }


def embed_P3(w: BraidWord) -> BraidWord:
    """Write a word in a, b, z as a B3 word in s1, s2."""
    if w.group != P3:
        raise GroupMismatch(f"embed_P3 expects a P3 word, got {w.group}")
    images = _embedding_images()
    letters: List[Letter] = []
    for index, sign in w.letters:
        image = images[index]
        if sign == 1:
            letters.extend(image)
        else:
            letters.extend((i, -s) for i, s in reversed(image))
    return free_reduce(BraidWord(B3, tuple(letters)))


_S_VECTOR_GROUPS = {
    GroupTag.P3_ON_GENERATORS,
    GroupTag.SPHERE_QUOTIENT_P4,
    GroupTag.TORUS_QUOTIENT_P2,
}


def s_vector(w: BraidWord) -> SVector:
    """Signed counts of the first two generators; z is ignored on P3."""
    group = w.group
    if group.tag not in _S_VECTOR_GROUPS and group != F2:
        raise UnsupportedGroup(f"s_vector is not defined on {group}")
    s1 = sum(sign for index, sign in w.letters if index == 0)
    s2 = sum(sign for index, sign in w.letters if index == 1)
    return SVector(s1, s2)


def exponent_sum(w: BraidWord) -> int:
    if w.group.tag is not GroupTag.ARTIN:
        raise UnsupportedGroup(f"exponent_sum needs an Artin braid group, got {w.group}")
    return sum(sign for _, sign in w.letters)


@functools.cache
def _psl_images() -> Dict[Letter, Tuple[Letter, ...]]:
    images: Dict[Letter, Tuple[Letter, ...]] = {}
    for name, text in PSL2Z_IMAGES.items():
        index = B3.alphabet.index(name)
        image = BraidWord.parse(PSL2Z, text)
        images[(index, 1)] = free_reduce(image).letters
        images[(index, -1)] = inverse(image).letters
    return images


def project_B3_mod_center(w: BraidWord) -> BraidWord:
    """Image of a B3 word in PSL(2,Z), in free product normal form."""
    if w.group != B3:
        raise UnsupportedGroup(f"project_B3_mod_center expects a B3 word, got {w.group}")
    images = _psl_images()
    letters: List[Letter] = []
    for letter in w.letters:
        letters.extend(images[letter])
    return free_reduce(BraidWord(PSL2Z, tuple(letters)))


def free_part(w: BraidWord) -> BraidWord:
    """Project P3 = F2 x Z onto F2 by dropping z."""
    if w.group != P3:
        raise GroupMismatch(f"free_part expects a P3 word, got {w.group}")
    return free_reduce(BraidWord(F2, tuple(l for l in w.letters if l[0] != Z_INDEX)))


def lift_free_part(w: BraidWord) -> BraidWord:
    if w.group != F2:
        raise GroupMismatch(f"lift_free_part expects an F2 word, got {w.group}")
    return BraidWord(P3, w.letters)


def central_exponent(w: BraidWord) -> int:
    if w.group != P3:
        raise GroupMismatch(f"central_exponent expects a P3 word, got {w.group}")
    return sum(sign for index, sign in w.letters if index == Z_INDEX)


def _cyclic_core(runs: List[Syllable], orders: Sequence[int]) -> List[Syllable]:
    runs = list(runs)
    while len(runs) > 1 and runs[0][0] == runs[-1][0]:
        index = runs[0][0]
        exponent = runs[0][1] + runs.pop()[1]
        if orders[index]:
            exponent %= orders[index]
        if exponent:
            runs[0] = (index, exponent)
        else:
            runs.pop(0)
    return runs


def cyclic_reduce(w: BraidWord) -> BraidWord:
    """Shortest cyclic conjugate, for free groups, free products and P3."""
    group = w.group
    if group == P3:
        core = cyclic_reduce(free_part(w))
        k = central_exponent(w)
        return BraidWord(P3, core.letters + ((Z_INDEX, 1 if k > 0 else -1),) * abs(k))
    _require_free_like(group)
    orders = group.cyclic_orders
    return BraidWord(group, _expand(_cyclic_core(syllables(w), orders), orders))


def _require_free_like(group: GroupId) -> None:
    if not (group.is_free or group.tag in (GroupTag.FREE_PRODUCT, GroupTag.TORUS_QUOTIENT_B2)):
        raise UnsupportedGroup(f"No conjugacy decision implemented for {group}")


def cyclic_normal_form(w: BraidWord) -> BraidWord:
    """Least rotation of the cyclic core; equal exactly on conjugacy classes."""
    group = w.group
    if group == P3:
        core = cyclic_normal_form(free_part(w))
        k = central_exponent(w)
        return BraidWord(P3, core.letters + ((Z_INDEX, 1 if k > 0 else -1),) * abs(k))
    _require_free_like(group)
    orders = group.cyclic_orders
    runs = _cyclic_core(syllables(w), orders)
    if runs:
        runs = min(runs[i:] + runs[:i] for i in range(len(runs)))
    return BraidWord(group, _expand(runs, orders))


def _cyclically_equal(w1: BraidWord, w2: BraidWord) -> bool:
    return cyclic_normal_form(w1) == cyclic_normal_form(w2)


def conjugate_in_group(w1: BraidWord, w2: BraidWord, group: GroupId) -> bool:
    if w1.group != group or w2.group != group:
        raise GroupMismatch(f"Both words must live in {group}, got {w1.group} and {w2.group}")
    if group == B3:
        return exponent_sum(w1) == exponent_sum(w2) and _cyclically_equal(
            project_B3_mod_center(w1), project_B3_mod_center(w2)
        )
    if group == P3:
        return central_exponent(w1) == central_exponent(w2) and _cyclically_equal(
            free_part(w1), free_part(w2)
        )
    _require_free_like(group)
    return _cyclically_equal(w1, w2)


def equal_in_group(u: BraidWord, v: BraidWord) -> bool:
    group = _check_same_group(u, v)
    if group == B3:
        return exponent_sum(u) == exponent_sum(v) and (
            project_B3_mod_center(u) == project_B3_mod_center(v)
        )
    if group.tag in (GroupTag.ARTIN, GroupTag.SPHERE_QUOTIENT_B4):
        raise UnsupportedGroup(f"No word problem solution implemented for {group}")
    return free_reduce(u) == free_reduce(v)


def full_twist(m: int) -> BraidWord:
    """(s1 ... s_{m-1})^m in B_m."""
    if m < 2:
        raise InvalidArity(f"A full twist needs at least 2 strands, got {m}")
    cycle = tuple((i, 1) for i in range(m - 1))
    return BraidWord(GroupId.artin(m), cycle * m)


def _reduced_f2_words(length: int) -> Iterator[Tuple[Letter, ...]]:
    letters = ((0, 1), (0, -1), (1, 1), (1, -1))

    def extend(prefix: Tuple[Letter, ...]) -> Iterator[Tuple[Letter, ...]]:
        if len(prefix) == length:
            yield prefix
            return
        for letter in letters:
            if prefix and prefix[-1] == (letter[0], -letter[1]):
                continue
            yield from extend(prefix + (letter,))

    return extend(())


_MAX_SCHREIER_LENGTH = 8


def _express_in_p3(u: BraidWord) -> Tuple[Letter, ...]:
    target_sum = exponent_sum(u)
    target_image = project_B3_mod_center(u)
    for length in range(_MAX_SCHREIER_LENGTH + 1):
        for letters in _reduced_f2_words(length):
            remainder = target_sum - 2 * sum(sign for _, sign in letters)
            if remainder % 6:
                continue
            candidate = BraidWord(P3, letters)
            if project_B3_mod_center(embed_P3(candidate)) == target_image:
                k = remainder // 6
                return letters + ((Z_INDEX, 1 if k > 0 else -1),) * abs(k)
    raise ImpureBraid(f"{u} is not a short pure braid in a, b, z")


@functools.cache
def _schreier_table() -> Dict[Tuple[Tuple[int, ...], Letter], Tuple[Letter, ...]]:
    transversal = {}
    for text in B3_TRANSVERSAL:
        word = BraidWord.parse(B3, text)
        transversal[permutation_of(word).images] = word
    table = {}
    for images, representative in transversal.items():
        for letter in ((0, 1), (0, -1), (1, 1), (1, -1)):
            step = representative.concat(BraidWord(B3, (letter,)))
            target = transversal[permutation_of(step).images]
            generator = multiply(step, target.formal_inverse())
            table[(images, letter)] = _express_in_p3(generator)
    logger.debug("Built Reidemeister-Schreier table with %d entries", len(table))
    return table


def rewrite_pure_braid(w: BraidWord) -> BraidWord:
    """Rewrite a pure B3 word as a P3 word in a, b, z."""
    if w.group != B3:
        raise GroupMismatch(f"rewrite_pure_braid expects a B3 word, got {w.group}")
    table = _schreier_table()
    images = tuple(range(1, 4))
    letters: List[Letter] = []
    for letter in w.letters:
        letters.extend(table[(images, letter)])
        images = list(images)
        i = letter[0]
        images[i], images[i + 1] = images[i + 1], images[i]
        images = tuple(images)
    if images != (1, 2, 3):
        raise ImpureBraid(f"{w} induces the permutation {images}")
    return free_reduce(BraidWord(P3, tuple(letters)))
