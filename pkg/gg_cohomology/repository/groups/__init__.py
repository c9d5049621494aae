from .definitions import GroupId, GroupTag, B3, P3, F2, PSL2Z, SPHERE_P4, SPHERE_B4, TORUS_P2, TORUS_B2
from .words import BraidWord, Permutation, SVector
from .algebra import (
    free_reduce,
    multiply,
    inverse,
    power,
    commutator,
    permutation_of,
    is_pure,
    embed_P3,
    s_vector,
    exponent_sum,
    project_B3_mod_center,
    free_part,
    cyclic_reduce,
    cyclic_normal_form,
    conjugate_in_group,
    equal_in_group,
    full_twist,
    rewrite_pure_braid,
)
from .sampling import WordSampler

__all__ = [
    'GroupId', 'GroupTag', 'B3', 'P3', 'F2', 'PSL2Z', 'SPHERE_P4', 'SPHERE_B4', 'TORUS_P2', 'TORUS_B2',
    'BraidWord', 'Permutation', 'SVector', 'WordSampler',
    'free_reduce', 'multiply', 'inverse', 'power', 'commutator', 'permutation_of', 'is_pure',
    'embed_P3', 's_vector', 'exponent_sum', 'project_B3_mod_center', 'free_part', 'cyclic_reduce', 'cyclic_normal_form',
    'conjugate_in_group', 'equal_in_group', 'full_twist', 'rewrite_pure_braid',
]

"""
Groups Package
==============

Exact word algebra for the braid groups B3 and P3, the sphere and torus
braid group quotients, free groups and free products of cyclic groups.

Example Usage:
--------------

```python
w = BraidWord.parse(B3, "s1 s2 s1 s1 s2 s1")
assert is_pure(w)
assert conjugate_in_group(w, full_twist(3), B3)
```
"""
