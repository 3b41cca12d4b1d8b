from .grammar import parse_word, tokenize
from .word import (
    AbelianVector,
    CyclicDecomposition,
    Letter,
    RootExp,
    Word,
    abelianization,
    cyclic_decompose,
    exponent,
    invert,
    multiply,
    power,
    reduce,
    root,
    root_exp,
    signed_exponent_over,
)

__all__ = [
    'AbelianVector',
    'CyclicDecomposition',
    'Letter',
    'RootExp',
    'Word',
    'abelianization',
    'cyclic_decompose',
    'exponent',
    'invert',
    'multiply',
    'parse_word',
    'power',
    'reduce',
    'root',
    'root_exp',
    'signed_exponent_over',
    'tokenize',
]
