from typing import Iterator, List

from provclose.core.closure import ClosureResult
from provclose.core.freeword import Letter, Word, power

# The pseudovarieties the oracle sweeps cover
SWEEP_VARIETIES = ['GP:2', 'GP:3', 'GP:2,3', 'O', 'Vp:3', 'Vp:5', 'N', 'S']

# Every group of the default catalog of order at most 27
SMALL_CATALOG_NAMES = [
    *(f'C{k}' for k in range(2, 17)),
    'S3',
    'D4',
    'Q8',
    'A4',
    'UT(3,Z/2)',
    'UT(3,Z/3)',
]


def alphabet(rank: int) -> List[Letter]:
    return [Letter(index, sign) for index in range(1, rank + 1) for sign in (1, -1)]


def reduced_words(rank: int, max_length: int, min_length: int = 1) -> Iterator[Word]:
    """Enumerate every freely reduced word of the given rank by length, shortest first."""
    letters = alphabet(rank)
    frontier = [()]
    for length in range(1, max_length + 1):
        frontier = [
            word + (letter,)
            for word in frontier
            for letter in letters
            if not word or word[-1] != ~letter
        ]
        if length >= min_length:
            yield from (Word(word, rank) for word in frontier)


def trace_rules(result: ClosureResult) -> List[str]:
    return [step.rule for step in result.trace]


def powers_of_short_words(max_length: int, rank: int = 2) -> Iterator[Word]:
    """Every power w^k with |w| <= max_length and 1 <= k <= max_length."""
    for w in reduced_words(rank, max_length):
        for k in range(1, max_length + 1):
            yield power(w, k)
