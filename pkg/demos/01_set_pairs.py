"""
Set pairs and the exact sum
===========================

Two families A_1..A_m and B_1..B_m with A_i & B_j empty exactly when
i == j.  The sum of 1/C(|A_i|+|B_i|, |A_i|) over i never exceeds 1, and the
partition pairs of a small ground set hit 1 on the nose.
"""
from bollobas.constructions import classical_pairs
from bollobas.core import FamilySystem, is_bollobas_tuple, theorem_sum

###############################################################################
# All 2-subsets of {0..4} against their complements.
pairs = classical_pairs(2, 3)
print("columns:", pairs.m)
print("valid:", bool(is_bollobas_tuple(pairs, 2)))
print("sum:", theorem_sum(pairs, 2))

###############################################################################
# Break one set and the check names the first bad index tuple.
rows = [list(r) for r in pairs.sets]
rows[1][0] |= 1  # element 0 now in B_0 as well as A_0
broken = FamilySystem(pairs.n, 2, pairs.m, tuple(map(tuple, rows)))
print(is_bollobas_tuple(broken, 2))
