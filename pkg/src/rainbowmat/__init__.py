"""Rainbow independent sets in the intersection of two matroids.

Given n pairwise disjoint n-sets, each independent in two matroids M and N
over a common ground set, the solver returns a rainbow set (at most one
element per input set, independent in both matroids) of size t with t = n
or (n - t)^2 <= t, together with a certificate.
"""

from .matroids import (Graphic, Linear, Matroid, MatroidError, Partition,
                       Uniform)
from .solver import (AuxLevel, AuxResult, AuxSequence, Cap, Family,
                     FamilyError, InternalInvariantError, RainbowSet,
                     SolveReport, apply_cap, build_aux, find_cap, greedy_init,
                     relabel, solve)
from .instances import (GenerationError, InstanceError, InstanceMeta,
                        LatinSquare, MATROID_CLASSES, ParseError, RowMls,
                        cyclic_latin, gen_random_family, latin_to_family,
                        parse, random_matroid, random_row_mls,
                        rowmls_to_family, serialize, shuffled_latin)
from .verify import (PropertyReport, VerifyError, VerifyReport, bound_floor,
                     brute_force_max, check_bound, check_rainbow, make_report,
                     property_suite, rainbow_problems)

__all__ = [
    "Matroid", "Uniform", "Partition", "Graphic", "Linear", "MatroidError",
    "Family", "FamilyError", "RainbowSet", "AuxLevel", "AuxSequence",
    "AuxResult", "Cap", "SolveReport", "InternalInvariantError",
    "greedy_init", "relabel", "build_aux", "find_cap", "apply_cap", "solve",
    "LatinSquare", "RowMls", "InstanceError", "GenerationError", "ParseError",
    "InstanceMeta", "MATROID_CLASSES", "cyclic_latin", "shuffled_latin",
    "latin_to_family", "rowmls_to_family", "random_row_mls", "random_matroid",
    "gen_random_family", "parse", "serialize",
    "VerifyReport", "VerifyError", "PropertyReport", "check_bound",
    "bound_floor", "check_rainbow", "rainbow_problems", "brute_force_max",
    "make_report", "property_suite",
]

__version__ = "0.1.0"
