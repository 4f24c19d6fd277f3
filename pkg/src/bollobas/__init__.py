"""Exact checks for Bollobas-type inequalities on k-tuples of set families,
with covers of partite hypergraphs, set-partition statistics, permutation
chain counts and closed-form bounds."""
from .constructions import classical_pairs, modular_k2, permutation_kk, sharpness_k2
from .core import FamilySystem, Surjection, derived_sets, is_bollobas_tuple, multinomial, theorem_sum
from .covering import PartiteBlock, PartiteCover, exact_min_cover, random_cover, verify_cover
from .errors import BollobasError, FormatError, GuardError, InvariantError, NotValidatedError, ParameterError

__version__ = "0.1.0"
