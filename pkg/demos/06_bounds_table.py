"""
Bound tables
============

Reported bounds on f_{k,t}(n) for a range of n, as CSV.  Rows marked
"large n" are only asymptotic claims and are never checked.
"""
import csv
import sys

from bollobas.bounds import f_bounds

w = csv.writer(sys.stdout, lineterminator="\n")
w.writerow(["k", "t", "n", "bound", "direction", "value", "validity"])
for k, t in [(3, 2), (4, 2), (3, 3)]:
    for e in (4, 8, 16):
        rep = f_bounds(k, t, 2**e)
        for b in rep.bounds:
            w.writerow([k, t, 2**e, b.name, b.direction, f"{b.value:.3f}", b.validity])
