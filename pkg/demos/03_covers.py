"""
Covering H_{k,t}(n) with complete k-partite blocks
==================================================

A cover with m blocks is the same thing as a (k,t)-tuple over [m].  Exact
minima come from search on tiny cases; for larger n a random colouring
argument gives covers of size O(log n).
"""
import warnings

from bollobas.bounds import threshold_min_m
from bollobas.covering import (
    cover_to_tuple,
    exact_min_cover,
    random_cover,
    verify_cover,
)
from bollobas.core import is_bollobas_tuple

###############################################################################
# Exact biclique covers against the binomial threshold
for n in range(2, 8):
    res = exact_min_cover(2, 2, n)
    print(f"f_2,2({n}) = {res.m}   threshold {threshold_min_m(n, 2)}")

###############################################################################
# The certificate really is a cover, and it converts back to a tuple.
res = exact_min_cover(3, 2, 2)
print("3-partite, n=2:", res.m, "blocks", bool(verify_cover(res.certificate)))

###############################################################################
# Random covers, with the expected number of uncovered edges bounded.
for k, t, n in [(3, 2, 64), (3, 3, 27), (4, 2, 64)]:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        r = random_cover(k, t, n, seed=1)
    tup = cover_to_tuple(r.cover)
    print(f"H_{k},{t}({n}): {len(r.cover.blocks)} blocks after {r.attempts} attempt(s), "
          f"E[uncovered] <= {r.bound:.3g}, tuple valid={bool(is_bollobas_tuple(tup, t))}")
