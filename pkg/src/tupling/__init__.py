"""Exact pairing and d-tupling functions with their inverses, shell
numberings, and the tree and sequence enumerations built from them."""

from .natmath import binomial, digit_length, iroot
from .pairings2d import (
    cantor,
    cantor_inverse,
    cantor_positive,
    cantor_swapped,
    dyadic,
    dyadic_inverse,
    dyadic_shell,
    rosenberg_strong,
    rosenberg_strong_inverse,
)
from .tuplings import (
    CANTOR,
    CANTOR_SWAPPED,
    DYADIC,
    RS2,
    TuplingFunction,
    chowla_tupling,
    fold_tupling,
    make_tupling,
    morales_arredondo_bound,
    permute_tupling,
    rs_decode,
    rs_encode,
    rs_tupling,
    skolem_decode,
    skolem_encode,
    skolem_tupling,
)

__version__ = "0.1.0"
