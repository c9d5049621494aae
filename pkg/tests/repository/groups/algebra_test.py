import numpy as np
import pytest

from gg_cohomology.errors import GroupMismatch, ImpureBraid, InvalidArity, UnsupportedGroup
from gg_cohomology.repository.groups import (
    B3,
    F2,
    P3,
    PSL2Z,
    SPHERE_B4,
    SPHERE_P4,
    TORUS_B2,
    BraidWord,
    SVector,
    WordSampler,
    commutator,
    conjugate_in_group,
    cyclic_reduce,
    embed_P3,
    equal_in_group,
    exponent_sum,
    free_part,
    free_reduce,
    full_twist,
    inverse,
    is_pure,
    multiply,
    permutation_of,
    power,
    project_B3_mod_center,
    rewrite_pure_braid,
    s_vector,
)


def word(group, text):
    return BraidWord.parse(group, text)


DELTA = word(B3, "s1 s2 s1")
DELTA_SQUARED = word(B3, "s1 s2 s1 s1 s2 s1")


class TestFreeReduce:
    def test_cancellation(self):
        assert free_reduce(word(F2, "a a^-1")).is_empty
        assert free_reduce(word(F2, "a b b^-1 a")) == word(F2, "a a")

    def test_torsion(self):
        assert free_reduce(word(TORUS_B2, "a a b")) == word(TORUS_B2, "b")
        assert free_reduce(word(PSL2Z, "y^-1")) == word(PSL2Z, "y y")
        assert free_reduce(word(PSL2Z, "y y y x x")).is_empty

    def test_b3_only_cancels_pairs(self):
        assert free_reduce(word(B3, "s1 s1^-1 s2")) == word(B3, "s2")
        assert free_reduce(word(B3, "s1 s2 s1 s2^-1 s1^-1 s2^-1")) == word(B3, "s1 s2 s1 s2^-1 s1^-1 s2^-1")

    def test_p3_collects_centre(self):
        assert free_reduce(word(P3, "z a z^-1 b z")) == word(P3, "a b z")

    @pytest.mark.parametrize("group", [F2, B3, P3, PSL2Z, TORUS_B2, SPHERE_P4])
    def test_idempotent(self, group):
        rng = np.random.default_rng(7)
        for _ in range(200):
            length = int(rng.integers(0, 65))
            letters = tuple(
                (int(g), int(s))
                for g, s in zip(
                    rng.integers(0, len(group.alphabet), size=length),
                    rng.choice((-1, 1), size=length),
                )
            )
            once = free_reduce(BraidWord(group, letters))
            assert free_reduce(once) == once


class TestGroupOperations:
    def test_multiply_and_inverse(self):
        u = word(F2, "a b")
        assert multiply(u, inverse(u)).is_empty

    def test_multiply_rejects_mixed_groups(self):
        with pytest.raises(GroupMismatch):
            multiply(word(F2, "a"), word(P3, "a"))

    def test_power(self):
        assert power(word(F2, "a b"), 2) == word(F2, "a b a b")
        assert power(word(F2, "a b"), -1) == word(F2, "b^-1 a^-1")
        assert power(word(PSL2Z, "y"), 3).is_empty

    def test_commutator(self):
        assert commutator(word(F2, "a"), word(F2, "b")) == word(F2, "a b a^-1 b^-1")
        assert commutator(word(F2, "a"), word(F2, "a")).is_empty


class TestPermutations:
    def test_examples(self):
        assert permutation_of(BraidWord.identity(B3)).is_identity
        assert permutation_of(word(B3, "s1")).images == (2, 1, 3)
        assert permutation_of(word(B3, "s1 s2")).images == (2, 3, 1)

    def test_purity(self):
        assert is_pure(word(B3, "s1 s1"))
        assert not is_pure(word(B3, "s1"))
        assert is_pure(DELTA_SQUARED)
        assert is_pure(word(SPHERE_B4, "d1 d1 d3^-1 d3^-1"))

    def test_unsupported(self):
        with pytest.raises(UnsupportedGroup):
            permutation_of(word(F2, "a"))

    def test_homomorphism(self):
        sampler = WordSampler(B3, max_length=30, rng=np.random.default_rng(3))
        for _ in range(100):
            u, v = sampler.sample(), sampler.sample()
            assert permutation_of(u.concat(v)) == permutation_of(u) * permutation_of(v)


class TestP3Maps:
    def test_embed(self):
        assert embed_P3(word(P3, "a")) == word(B3, "s1 s1")
        assert embed_P3(BraidWord.identity(P3)).is_empty
        assert embed_P3(word(P3, "z")) == DELTA_SQUARED
        assert embed_P3(word(P3, "a^-1")) == word(B3, "s1^-1 s1^-1")

    def test_embed_is_pure(self):
        sampler = WordSampler(P3, max_length=12, rng=np.random.default_rng(11))
        for _ in range(50):
            assert is_pure(embed_P3(sampler.sample()))

    def test_s_vector(self):
        assert s_vector(word(P3, "a")) == SVector(1, 0)
        assert s_vector(word(P3, "z")) == SVector(0, 0)
        assert s_vector(word(P3, "a b^-1 a z")) == SVector(2, -1)

    def test_s_vector_additive(self):
        sampler = WordSampler(P3, max_length=20, rng=np.random.default_rng(5))
        for _ in range(100):
            u, v = sampler.sample(), sampler.sample()
            assert s_vector(u.concat(v)) == s_vector(u) + s_vector(v)

    def test_free_part(self):
        assert free_part(word(P3, "a z b z^-1 z")) == word(F2, "a b")

    def test_exponent_sum(self):
        assert exponent_sum(word(B3, "s1 s2^-1")) == 0
        assert exponent_sum(DELTA_SQUARED) == 6
        assert exponent_sum(word(B3, "s1 s1")) == 2


class TestProjection:
    def test_examples(self):
        assert project_B3_mod_center(DELTA_SQUARED).is_empty
        assert project_B3_mod_center(DELTA) == word(PSL2Z, "x")
        assert project_B3_mod_center(word(B3, "s1 s2")) == word(PSL2Z, "y")

    def test_braid_relation(self):
        assert project_B3_mod_center(word(B3, "s2 s1 s2")) == project_B3_mod_center(DELTA)

    @pytest.mark.parametrize("k", range(-3, 4))
    def test_kills_centre(self, k):
        assert project_B3_mod_center(power(DELTA_SQUARED, k)).is_empty

    def test_detects_non_central(self):
        sampler = WordSampler(B3, max_length=16, rng=np.random.default_rng(13))
        for _ in range(200):
            w = sampler.sample()
            if exponent_sum(w) % 6 == 0 and project_B3_mod_center(w).is_empty:
                # central: must equal a power of the full twist
                k = exponent_sum(w) // 6
                assert equal_in_group(w, power(DELTA_SQUARED, k))
            else:
                assert not equal_in_group(w, BraidWord.identity(B3))


class TestConjugacy:
    def test_examples(self):
        assert conjugate_in_group(word(F2, "a b"), word(F2, "b a"), F2)
        assert conjugate_in_group(word(B3, "s1 s1"), word(B3, "s2 s2"), B3)
        assert not conjugate_in_group(word(B3, "s1 s1"), DELTA_SQUARED, B3)

    def test_explicit_conjugator(self):
        beta = word(B3, "s1 s2")
        conjugated = multiply(beta, word(B3, "s1 s1"), inverse(beta))
        assert equal_in_group(conjugated, word(B3, "s2 s2"))

    def test_cyclic_reduce(self):
        assert cyclic_reduce(word(F2, "a b a^-1")) == word(F2, "b")
        assert cyclic_reduce(word(PSL2Z, "y x y")) == word(PSL2Z, "y y x")

    @pytest.mark.parametrize("group", [F2, B3, P3, PSL2Z, TORUS_B2])
    def test_invariant_under_conjugation(self, group):
        sampler = WordSampler(group, max_length=12, rng=np.random.default_rng(17))
        for _ in range(100):
            w, beta = sampler.sample(), sampler.sample()
            conjugated = multiply(beta, w, inverse(beta))
            assert conjugate_in_group(conjugated, w, group)
            assert conjugate_in_group(w, conjugated, group)
            assert conjugate_in_group(w, w, group)

    def test_b3_distinguishes_powers(self):
        assert not conjugate_in_group(word(B3, "s1"), word(B3, "s1 s1"), B3)
        assert not conjugate_in_group(word(B3, "s1 s2^-1"), BraidWord.identity(B3), B3)

    def test_unsupported(self):
        with pytest.raises(UnsupportedGroup):
            conjugate_in_group(word(SPHERE_B4, "d1"), word(SPHERE_B4, "d2"), SPHERE_B4)

    def test_group_mismatch(self):
        with pytest.raises(GroupMismatch):
            conjugate_in_group(word(F2, "a"), word(F2, "a"), B3)


class TestFullTwist:
    def test_two_strands(self):
        assert full_twist(2).to_text() == "s1 s1"

    def test_three_strands(self):
        twist = full_twist(3)
        assert exponent_sum(twist) == 6
        assert equal_in_group(twist, DELTA_SQUARED)
        assert conjugate_in_group(twist, DELTA_SQUARED, B3)

    def test_invalid(self):
        with pytest.raises(InvalidArity):
            full_twist(1)


class TestRewritePureBraid:
    def test_generators(self):
        assert rewrite_pure_braid(word(B3, "s1 s1")) == word(P3, "a")
        assert rewrite_pure_braid(word(B3, "s2 s2")) == word(P3, "b")
        assert rewrite_pure_braid(DELTA_SQUARED) == word(P3, "z")

    def test_inverts_embedding(self):
        sampler = WordSampler(P3, max_length=10, rng=np.random.default_rng(23))
        for _ in range(100):
            p = sampler.sample()
            assert rewrite_pure_braid(embed_P3(p)) == p

    def test_conjugated_generator(self):
        w = word(B3, "s2 s1 s1 s2^-1")
        p = rewrite_pure_braid(w)
        assert equal_in_group(embed_P3(p), w)

    def test_impure(self):
        with pytest.raises(ImpureBraid):
            rewrite_pure_braid(word(B3, "s1"))
