"""Automorphisms from affine maps P -> B P A^{-1} + u.

Every invertible pair (B, A) with a translation u permutes the point set,
and the induced coordinate permutation preserves the level-r code for
every r.  For (l, m) = (2, 4) over F_2 these maps induce exactly 576
distinct permutations; the transpose map is a further automorphism that
lies outside that subgroup.
"""

import numpy as np

from agcodes import (build_affine_grassmann, build_dual_code,
                     induced_permutation, is_automorphism, random_transform,
                     subgroup_order_bound, transpose_permutation)
from agcodes.codes import PointEnumeration
from agcodes.transforms import all_induced_permutations, compose

C = build_affine_grassmann(2, 4, 2, 2)
D = build_dual_code(C)
pe = PointEnumeration(C.rect, C.field)
rng = np.random.default_rng(0)

hits = 0
for _ in range(20):
    T = random_transform(C.rect, C.field, rng)
    perm = induced_permutation(T, pe)
    hits += is_automorphism(C, perm) and is_automorphism(D, perm)
print(f"random affine maps preserving code and dual: {hits}/20")

T1 = random_transform(C.rect, C.field, rng)
T2 = random_transform(C.rect, C.field, rng)
lhs = induced_permutation(compose(T1, T2), pe)
rhs = induced_permutation(T1, pe).compose(induced_permutation(T2, pe))
print("induced permutation respects composition:", lhs == rhs)

perms = all_induced_permutations(C.rect, C.field, pe)
print(f"distinct induced permutations: {len(perms)} "
      f"(order formula gives {subgroup_order_bound(2, 4, 2)})")

tp = transpose_permutation(pe)
print("transpose is an automorphism:", is_automorphism(C, tp))
print("transpose inside the affine subgroup:", tp in perms)
