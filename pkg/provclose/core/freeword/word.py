from __future__ import annotations

from dataclasses import dataclass, field
import string
from typing import Iterable, List, NamedTuple, Optional, Tuple

from more_itertools import run_length
from sympy import divisors

from provclose.core.exceptions import NoRootError, RankError

# Ranks above this use the indexed alphabet a1, a2, ...
LETTERED_ALPHABET_SIZE = len(string.ascii_lowercase)


class Letter(NamedTuple):
    index: int
    sign: int

    def __invert__(self) -> Letter:
        return Letter(self.index, -self.sign)

    def name(self, indexed: bool) -> str:
        if indexed:
            return f'a{self.index}'
        return string.ascii_lowercase[self.index - 1]


def _check_letters(letters: Tuple[Letter, ...], rank: int) -> None:
    for letter in letters:
        if letter.index < 1 or letter.sign not in (1, -1):
            raise ValueError(f'Malformed letter {letter!r}')
        if letter.index > rank:
            raise RankError(f'Generator index {letter.index} exceeds the declared rank {rank}')


@dataclass(frozen=True)
class Word:
    """
    A freely reduced word over the basis a_1, ..., a_rank of a free group.

    Words are immutable values. Equality and hashing only consider the letters: the rank is the
    ambient rank the word is read in, and every closure computed here is invariant under basis
    extension.
    """

    letters: Tuple[Letter, ...] = ()
    rank: int = field(default=1, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'letters', tuple(Letter(*letter) for letter in self.letters))
        if self.rank < 1:
            raise RankError(f'Rank must be at least 1, got {self.rank}')
        _check_letters(self.letters, self.rank)
        for left, right in zip(self.letters, self.letters[1:]):
            if left == ~right:
                raise ValueError(f'Letters {left!r}, {right!r} cancel; use reduce() to build words')

    @classmethod
    def identity(cls, rank: int = 1) -> Word:
        return cls((), rank)

    @classmethod
    def generator(cls, index: int, rank: Optional[int] = None) -> Word:
        return cls((Letter(index, 1),), rank if rank is not None else index)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    @property
    def max_index(self) -> int:
        return max((letter.index for letter in self.letters), default=0)

    def promote(self, rank: int) -> Word:
        """Return the same element read in the free group of the given rank."""
        return Word(self.letters, rank)

    def text(self) -> str:
        if not self.letters:
            return '1'

        indexed = self.rank > LETTERED_ALPHABET_SIZE
        tokens = []
        for letter, count in run_length.encode(self.letters):
            exponent = letter.sign * count
            name = letter.name(indexed)
            tokens.append(name if exponent == 1 else f'{name}^{exponent}')

        return (' ' if indexed else '').join(tokens)

    def __str__(self) -> str:
        return self.text()

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: Word) -> Word:
        return multiply(self, other)

    def __invert__(self) -> Word:
        return invert(self)

    def __pow__(self, k: int) -> Word:
        return power(self, k)


class CyclicDecomposition(NamedTuple):
    conjugator: Word
    core: Word


class RootExp(NamedTuple):
    root: Word
    exponent: int


@dataclass(frozen=True)
class AbelianVector:
    entries: Tuple[int, ...]

    def __add__(self, other: AbelianVector) -> AbelianVector:
        size = max(len(self.entries), len(other.entries))
        left = self.entries + (0,) * (size - len(self.entries))
        right = other.entries + (0,) * (size - len(other.entries))
        return AbelianVector(tuple(x + y for x, y in zip(left, right)))

    def __rmul__(self, k: int) -> AbelianVector:
        return AbelianVector(tuple(k * x for x in self.entries))

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def reduce(letters: Iterable[Letter], rank: Optional[int] = None) -> Word:
    """Freely reduce a letter sequence."""
    raw = [Letter(*letter) for letter in letters]
    stack: List[Letter] = []
    for letter in raw:
        if stack and stack[-1] == ~letter:
            stack.pop()
        else:
            stack.append(letter)

    if rank is None:
        rank = max([1] + [letter.index for letter in raw])
    return Word(tuple(stack), rank)


def multiply(x: Word, y: Word) -> Word:
    left = list(x.letters)
    right = y.letters
    i = 0
    while left and i < len(right) and left[-1] == ~right[i]:
        left.pop()
        i += 1

    return Word(tuple(left) + right[i:], max(x.rank, y.rank))


def invert(x: Word) -> Word:
    return Word(tuple(~letter for letter in reversed(x.letters)), x.rank)


def cyclic_decompose(w: Word) -> CyclicDecomposition:
    """Split w as g * core * g^-1 with the core cyclically reduced and g maximal."""
    letters = w.letters
    n = len(letters)
    i = 0
    while i < n - 1 - i and letters[i] == ~letters[n - 1 - i]:
        i += 1

    return CyclicDecomposition(Word(letters[:i], w.rank), Word(letters[i : n - i], w.rank))


def power(x: Word, k: int) -> Word:
    if k == 0 or x.is_identity:
        return Word.identity(x.rank)
    if k < 0:
        x, k = invert(x), -k

    # A cyclically reduced core can be repeated without cancellation
    conjugator, core = cyclic_decompose(x)
    letters = conjugator.letters + core.letters * k + invert(conjugator).letters
    return Word(letters, x.rank)


def root_exp(w: Word) -> RootExp:
    """Return the primitive root u and the maximal exponent e with w = u^e."""
    if w.is_identity:
        raise NoRootError('no root of the empty word')

    conjugator, core = cyclic_decompose(w)
    length = len(core)
    for period in divisors(length):
        prefix = core.letters[:period]
        if prefix * (length // period) == core.letters:
            root = multiply(multiply(conjugator, Word(prefix, w.rank)), invert(conjugator))
            return RootExp(root, length // period)

    # The full length is always a period
    raise AssertionError('unreachable')


def root(w: Word) -> Word:
    return root_exp(w).root


def exponent(w: Word) -> int:
    return root_exp(w).exponent


def abelianization(w: Word) -> AbelianVector:
    entries = [0] * w.rank
    for letter in w.letters:
        entries[letter.index - 1] += letter.sign
    return AbelianVector(tuple(entries))


def signed_exponent_over(v: Word, u: Word) -> Optional[int]:
    """Return k with v = u^k, or None when v is not a power of u."""
    if v.is_identity:
        return 0
    if u.is_identity:
        return None

    root_u, exp_u = root_exp(u)
    root_v, exp_v = root_exp(v)
    if root_v == root_u:
        sign = 1
    elif root_v == invert(root_u):
        sign = -1
    else:
        return None

    if exp_v % exp_u:
        return None
    return sign * (exp_v // exp_u)
