"""Braid groups: normal forms, conjugacy, representations and link invariants."""

from .conjugacy import are_conjugate, geodesic_length, super_summit_rep, ultra_summit_set
from .core import BraidWord, delta_word, exponent_sum, parse_word, permutation_of
from .diagram import LinkDiagram, closure, seifert_smooth, to_closed_braid
from .dual import BandWord, dual_normalize, dual_normalize_classical
from .errors import BraidError, ParseError, ResourceCapExceeded
from .garside import NormalForm, equal, invert, multiply, normalize
from .hecke import alexander, homfly, jones, mfw_bound, ocneanu_trace
from .laurent import Laurent
from .markov import destabilize, exchange_factorization, stabilize
from .ordering import OrderResult, compare, is_positive, torsion_probe
from .representations import burau_matrix, lk_matrix, reduced_burau_matrix
from .skein import homfly_skein

__all__ = [
    "BandWord", "BraidError", "BraidWord", "Laurent", "LinkDiagram", "NormalForm",
    "OrderResult", "ParseError", "ResourceCapExceeded", "alexander", "are_conjugate",
    "burau_matrix", "closure", "compare", "delta_word", "destabilize", "dual_normalize",
    "dual_normalize_classical", "equal", "exchange_factorization", "exponent_sum",
    "geodesic_length", "homfly", "homfly_skein", "invert", "is_positive", "jones",
    "lk_matrix", "mfw_bound", "multiply", "normalize", "ocneanu_trace", "parse_word",
    "permutation_of", "reduced_burau_matrix", "seifert_smooth", "stabilize",
    "super_summit_rep", "to_closed_braid", "torsion_probe", "ultra_summit_set",
]
