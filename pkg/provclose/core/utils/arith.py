from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import TYPE_CHECKING, Dict, FrozenSet

from sympy import divisors, factorint, isprime

from provclose.core.exceptions import PrimeSetError, VarietyError

if TYPE_CHECKING:
    from provclose.core.variety import PseudovarietyDescriptor

Factorization = Dict[int, int]


def factorize(k: int) -> Factorization:
    """Return the prime factorization of k as an ordered prime -> multiplicity map."""
    if k < 1:
        raise ValueError(f'Cannot factorize {k}: a positive integer is required')
    return {int(p): int(a) for p, a in sorted(factorint(k).items())}


@dataclass(frozen=True)
class PrimeSet:
    """
    A set of primes, either an explicit finite set or the complement of one.

    ``PrimeSet({2, 3})`` is the set {2, 3}; ``PrimeSet({2}, complement=True)`` is every prime but 2.
    """

    primes: FrozenSet[int]
    complement: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'primes', frozenset(int(p) for p in self.primes))
        not_prime = sorted(p for p in self.primes if not isprime(p))
        if not_prime:
            raise PrimeSetError(f'Not prime: {", ".join(map(str, not_prime))}')
        if not self.complement and not self.primes:
            raise PrimeSetError('An explicit prime set must not be empty')

    @classmethod
    def of(cls, *primes: int) -> PrimeSet:
        return cls(frozenset(primes))

    @classmethod
    def all_but(cls, *primes: int) -> PrimeSet:
        return cls(frozenset(primes), complement=True)

    @classmethod
    def parse(cls, text: str) -> PrimeSet:
        """Parse "2,3,5", "!2", "!2,7" or the alias "odd"."""
        text = text.strip()
        if text.lower() == 'odd':
            return cls.all_but(2)

        complement = text.startswith('!')
        body = text[1:] if complement else text
        items = [item.strip() for item in body.split(',')] if body.strip() else []
        try:
            primes = frozenset(int(item) for item in items)
        except ValueError:
            raise PrimeSetError(f'Malformed prime set {text!r}') from None

        return cls(primes, complement)

    @property
    def perp(self) -> PrimeSet:
        """The complementary set of primes."""
        if self.complement and not self.primes:
            raise PrimeSetError('The complement of the set of all primes is empty')
        return PrimeSet(self.primes, not self.complement)

    @property
    def is_all(self) -> bool:
        return self.complement and not self.primes

    def __contains__(self, p: int) -> bool:
        return (p in self.primes) != self.complement

    def issubset(self, other: PrimeSet) -> bool:
        if not self.complement and not other.complement:
            return self.primes <= other.primes
        if not self.complement:
            return not (self.primes & other.primes)
        if not other.complement:
            return False
        return other.primes <= self.primes

    def __str__(self) -> str:
        listed = ','.join(str(p) for p in sorted(self.primes))
        return f'!{listed}' if self.complement else listed


def nu(k: int, primes: PrimeSet) -> int:
    """Return the largest divisor of k whose prime factors all lie in the given set."""
    return prod(p**a for p, a in factorize(k).items() if p in primes)


def p_part(k: int, p: int) -> int:
    return nu(k, PrimeSet.of(p))


def is_power_of(k: int, p: int) -> bool:
    return set(factorize(k)) <= {p}


def max_divisor_in_variety(e: int, variety: PseudovarietyDescriptor) -> int:
    """Return the largest k dividing e with C_k in the given extension-closed pseudovariety."""
    if not variety.extension_closed:
        raise VarietyError(
            f'{variety} is not extension-closed; its closure is not the maximal cyclic divisor'
        )
    return max(k for k in divisors(e) if variety.contains_cyclic(k))

