"""
Counting chains of permutations
===============================

Each column sequence sigma owns the permutations that list its derived sets
in order.  For a valid tuple these families are disjoint, so their sizes
add up to at most n!, which is the inequality again.
"""
from bollobas.chains import ChainContext, summarize
from bollobas.constructions import classical_pairs, permutation_kk

for sys in (classical_pairs(2, 2), permutation_kk(3)):
    s = summarize(ChainContext.of(sys))
    n = s.report.n_perms
    print(f"k={sys.k} m={sys.m}: {len(s.counts)} sigmas, {s.report.total} of {n} permutations used, "
          f"disjoint={s.report.disjoint}, sum={s.theorem_sum}, "
          f"n!*sum={n * s.theorem_sum}")
    print("  enumerated:", [c.enumerated for c in s.counts[:4]],
          "closed form:", [c.formula for c in s.counts[:4]],
          "sizes:", [c.sizes for c in s.counts[:4]])
