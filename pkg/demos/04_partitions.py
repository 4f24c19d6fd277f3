"""
Set partitions and f(pi, t)
===========================
"""
from bollobas.partitions import (
    check_lemma_3_1,
    enumerate_partitions,
    f_pi,
    min_f_formula,
    minimizers,
    stirling2,
)

print("Bell numbers:", [len(enumerate_partitions(k)) for k in range(1, 10)])

# f sums products of part sizes over t-subsets of parts
pi = ((1, 2), (3,), (4,))
print(pi, "f(pi, 2) =", f_pi(pi, 2))

k, t = 7, 3
for s in range(t, k + 1):
    best, args = minimizers(k, s, t)
    print(f"s={s}: S={stirling2(k, s):4d} min f={best:3d} formula={min_f_formula(k, s, t):3d} "
          f"e.g. {args[0]}")

rep = check_lemma_3_1(7, 2)
print("monotonicity lemma, k=7:", rep.refinement_pairs, "splits,", rep.merge_pairs, "moves,",
      "ok" if rep.ok else "VIOLATED")
