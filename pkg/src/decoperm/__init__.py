"""Deco polyominoes, their construction codes, and six bijections with S_n."""

from .bijections import BIJECTION_IDS, code_for, invert, permutation_for_code, phi
from .errors import DecoError
from .permutation import Permutation, make_permutation, parse_permutation
from .polyomino import DecoCode, DecoPolyomino, build_from_code, code_of

__all__ = [
    "BIJECTION_IDS", "code_for", "invert", "permutation_for_code", "phi",
    "DecoError", "Permutation", "make_permutation", "parse_permutation",
    "DecoCode", "DecoPolyomino", "build_from_code", "code_of",
]
