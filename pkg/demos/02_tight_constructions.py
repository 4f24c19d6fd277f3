"""
Tight and explicit (k,2)-tuples
===============================

The cyclic family on Z_n reaches sum exactly 1 for every k.  The block
construction gives 2^n columns on kn points, the lower-bound rate 1/k.
"""
import math

from bollobas.constructions import modular_k2, sharpness_k2
from bollobas.core import Surjection, is_bollobas_tuple, theorem_sum

for k, n in [(2, 8), (3, 12), (4, 16), (4, 20)]:
    sys = sharpness_k2(k, n)
    print(f"cyclic k={k} n={n}: valid={bool(is_bollobas_tuple(sys, 2))} "
          f"sum={theorem_sum(sys, 2, Surjection.singleton(k, 1))}")

for k, n in [(3, 3), (3, 4), (4, 3), (5, 2)]:
    sys = modular_k2(k, n)
    ok = bool(is_bollobas_tuple(sys, 2))
    print(f"blocks k={k} n={n}: m={sys.m} on {sys.n} points, valid={ok}, "
          f"log2(m)/ground = {math.log2(sys.m) / sys.n:.3f} (1/k = {1 / k:.3f})")

# three colours per block instead of two breaks the construction
print("3-colour variant:", is_bollobas_tuple(modular_k2(3, 3, colors=3), 2))
