from .coefficients import HBAR, ONE, T, ZERO, CoefPoly, Rational
from .ncpoly import NcPoly
from .tensor import TensorElem
from .words import Index, index_from_word, parse_word, word_from_index, z

__all__ = [
    "CoefPoly",
    "Rational",
    "NcPoly",
    "TensorElem",
    "Index",
    "index_from_word",
    "parse_word",
    "word_from_index",
    "z",
    "ZERO",
    "ONE",
    "HBAR",
    "T",
]
