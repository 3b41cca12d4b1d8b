"""
Recursive descent parser for the word grammar.

    word    := "1" | term { term }
    term    := factor [ "^" int ]
    factor  := letter | "(" word ")" | "[" word "," word "]"
    letter  := "a".."z" | "a" digits
    int     := ["-"] digit { digit }

Whitespace is insignificant between tokens. ``[x,y]`` denotes ``x y x^-1 y^-1``.
"""
from __future__ import annotations

import re
from typing import Iterator, List, NamedTuple, Optional, Set

from provclose.core.exceptions import RankError, WordSyntaxError
from provclose.core.freeword.word import Letter, Word, invert, multiply, power

LETTERED = 'lettered'
INDEXED = 'indexed'

TOKEN_RE = re.compile(
    r'(?P<space>\s+)'
    r'|(?P<indexed>a\d+)'
    r'|(?P<letter>[a-z])'
    r'|(?P<int>-?\d+)'
    r'|(?P<punct>[\^()\[\],])'
)


class Token(NamedTuple):
    kind: str
    text: str
    position: int


END = 'end'


def tokenize(text: str) -> Iterator[Token]:
    position = 0
    while position < len(text):
        match = TOKEN_RE.match(text, position)
        if match is None:
            raise WordSyntaxError(f'unexpected character {text[position]!r}', position)

        kind = match.lastgroup
        if kind != 'space':
            yield Token(kind, match.group(), position)
        position = match.end()

    yield Token(END, '', len(text))


class _Parser:
    def __init__(self, text: str):
        self.tokens: List[Token] = list(tokenize(text))
        self.cursor = 0
        self.styles: Set[str] = set()
        self.max_index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.cursor]

    def advance(self) -> Token:
        token = self.current
        self.cursor += 1
        return token

    def at(self, text: str) -> bool:
        return self.current.kind == 'punct' and self.current.text == text

    def expect(self, text: str) -> None:
        if not self.at(text):
            raise WordSyntaxError(
                f'expected {text!r}, found {self.describe(self.current)}', self.current.position
            )
        self.advance()

    @staticmethod
    def describe(token: Token) -> str:
        return 'end of input' if token.kind == END else repr(token.text)

    def at_word_end(self) -> bool:
        return self.current.kind == END or any(self.at(p) for p in (')', ']', ','))

    def word(self) -> Word:
        token = self.current
        if token.kind == 'int' and token.text == '1':
            self.advance()
            if not self.at_word_end():
                raise WordSyntaxError('the identity 1 must stand alone', token.position)
            return Word.identity()

        if self.at_word_end():
            raise WordSyntaxError(
                f'expected a generator, found {self.describe(token)}', token.position
            )

        result = Word.identity()
        while not self.at_word_end():
            result = multiply(result, self.term())
        return result

    def term(self) -> Word:
        factor = self.factor()
        if self.at('^'):
            self.advance()
            token = self.current
            if token.kind != 'int':
                raise WordSyntaxError(f'malformed exponent {self.describe(token)}', token.position)
            self.advance()
            k = int(token.text)
            if k == 0:
                raise WordSyntaxError('zero exponent', token.position)
            factor = power(factor, k)
        return factor

    def factor(self) -> Word:
        token = self.current
        if token.kind in ('letter', 'indexed'):
            self.advance()
            return self.letter(token)

        if self.at('('):
            self.advance()
            inner = self.word()
            self.expect(')')
            return inner

        if self.at('['):
            self.advance()
            x = self.word()
            self.expect(',')
            y = self.word()
            self.expect(']')
            return multiply(multiply(x, y), invert(multiply(y, x)))

        raise WordSyntaxError(f'unexpected {self.describe(token)}', token.position)

    def letter(self, token: Token) -> Word:
        if token.kind == 'indexed':
            style = INDEXED
            index = int(token.text[1:])
            if index < 1:
                raise WordSyntaxError('generator index must be at least 1', token.position)
        else:
            style = LETTERED
            index = ord(token.text) - ord('a') + 1

        self.styles.add(style)
        if len(self.styles) > 1:
            raise WordSyntaxError(
                'lettered (a, b, ...) and indexed (a1, a2, ...) generators cannot be mixed',
                token.position,
            )

        self.max_index = max(self.max_index, index)
        return Word((Letter(index, 1),), index)


def parse_word(text: str, rank: Optional[int] = None) -> Word:
    """
    Parse text in the word grammar into a freely reduced word.

    When rank is omitted it is inferred as the largest generator index used (at least 1).
    """
    parser = _Parser(text)
    word = parser.word()
    if parser.current.kind != END:
        raise WordSyntaxError(
            f'unexpected {parser.describe(parser.current)}', parser.current.position
        )

    if rank is None:
        rank = max(parser.max_index, 1)
    elif parser.max_index > rank:
        raise RankError(f'Generator index {parser.max_index} exceeds the declared rank {rank}')

    return word.promote(rank)
