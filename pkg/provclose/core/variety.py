"""Pseudovariety descriptors and their membership decisions."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from sympy import isprime

from provclose.core.exceptions import DescriptorSyntaxError, UnsupportedCheckError, VarietyError
from provclose.core.finoracle.groups import FiniteGroup
from provclose.core.finoracle.structure import structure_flags
from provclose.core.utils.arith import PrimeSet, factorize, p_part


class Kind(str, Enum):
    ALL = 'G'
    PRIME_SET = 'GP'
    ODD = 'O'
    NILPOTENT = 'N'
    SOLVABLE = 'S'
    SUPERSOLVABLE = 'Su'
    ABELIAN = 'Ab'
    VP = 'Vp'
    CUSTOM = 'custom'


# Kinds that contain every finite nilpotent group
NILPOTENT_CONTAINING = frozenset({Kind.ALL, Kind.NILPOTENT, Kind.SOLVABLE, Kind.SUPERSOLVABLE})


@dataclass(frozen=True)
class PseudovarietyDescriptor:
    """
    A pseudovariety of finite groups.

    Use the constructors below (or ``parse_descriptor``) rather than building one by hand.
    A ``CUSTOM`` descriptor wraps a user predicate deciding ``C_k in V``. Nothing about it is
    verified, so its flags are taken as declared.
    """

    kind: Kind
    primes: Optional[PrimeSet] = None
    modulus: Optional[int] = None
    prime: Optional[int] = None
    predicate: Optional[Callable[[int], bool]] = field(default=None, compare=False)
    name: Optional[str] = None
    declared_extension_closed: bool = False
    declared_contains_all_abelian: Optional[bool] = None

    def __post_init__(self):
        if self.kind is Kind.PRIME_SET and self.primes is None:
            raise VarietyError('G_P needs a prime set')
        if self.kind is Kind.ABELIAN and (self.modulus is None or self.modulus < 1):
            raise VarietyError(f'Ab(m) needs a positive modulus, got {self.modulus}')
        if self.kind is Kind.VP and (self.prime is None or not isprime(self.prime)):
            raise VarietyError(f'V_p needs a prime, got {self.prime}')
        if self.kind is Kind.CUSTOM and self.predicate is None:
            raise VarietyError('A custom pseudovariety needs a cyclic membership predicate')

    @classmethod
    def all_groups(cls) -> PseudovarietyDescriptor:
        return cls(Kind.ALL)

    @classmethod
    def prime_set(cls, primes: PrimeSet) -> PseudovarietyDescriptor:
        return cls(Kind.PRIME_SET, primes=primes)

    @classmethod
    def p_groups(cls, p: int) -> PseudovarietyDescriptor:
        return cls.prime_set(PrimeSet.of(p))

    @classmethod
    def odd(cls) -> PseudovarietyDescriptor:
        return cls(Kind.ODD)

    @classmethod
    def nilpotent(cls) -> PseudovarietyDescriptor:
        return cls(Kind.NILPOTENT)

    @classmethod
    def solvable(cls) -> PseudovarietyDescriptor:
        return cls(Kind.SOLVABLE)

    @classmethod
    def supersolvable(cls) -> PseudovarietyDescriptor:
        return cls(Kind.SUPERSOLVABLE)

    @classmethod
    def abelian(cls, modulus: int) -> PseudovarietyDescriptor:
        return cls(Kind.ABELIAN, modulus=modulus)

    @classmethod
    def vp(cls, p: int) -> PseudovarietyDescriptor:
        return cls(Kind.VP, prime=p)

    @classmethod
    def custom(
        cls,
        predicate: Callable[[int], bool],
        name: str = 'custom',
        extension_closed: bool = False,
        contains_all_abelian: Optional[bool] = None,
    ) -> PseudovarietyDescriptor:
        return cls(
            Kind.CUSTOM,
            predicate=predicate,
            name=name,
            declared_extension_closed=extension_closed,
            declared_contains_all_abelian=contains_all_abelian,
        )

    @property
    def prime_set_view(self) -> Optional[PrimeSet]:
        """The prime set P when this pseudovariety is G_P (O is G_P for the odd primes)."""
        if self.kind is Kind.PRIME_SET:
            return self.primes
        if self.kind is Kind.ODD:
            return PrimeSet.all_but(2)
        if self.kind is Kind.ALL:
            return PrimeSet.all_but()
        return None

    @property
    def verified(self) -> bool:
        return self.kind is not Kind.CUSTOM

    @property
    def extension_closed(self) -> bool:
        if self.kind in (Kind.ALL, Kind.PRIME_SET, Kind.ODD, Kind.SOLVABLE):
            return True
        if self.kind is Kind.VP:
            # V_2 is the pseudovariety of 2-groups
            return self.prime == 2
        if self.kind is Kind.ABELIAN:
            # Ab(1) is the trivial pseudovariety
            return self.modulus == 1
        if self.kind is Kind.CUSTOM:
            return self.declared_extension_closed
        return False

    @property
    def contains_all_abelian(self) -> bool:
        if self.kind in NILPOTENT_CONTAINING:
            return True
        if self.kind is Kind.PRIME_SET:
            return self.primes.is_all
        if self.kind is Kind.CUSTOM:
            return bool(self.declared_contains_all_abelian)
        return False

    @property
    def contains_N(self) -> bool:  # noqa: N802
        if self.kind in NILPOTENT_CONTAINING:
            return True
        return self.kind is Kind.PRIME_SET and self.primes.is_all

    def contains_cyclic(self, k: int) -> bool:
        return cyclic_membership(k, self)

    def contains_group(self, group: FiniteGroup) -> bool:
        return finite_group_membership(group, self)

    def __str__(self) -> str:
        if self.kind is Kind.PRIME_SET:
            return f'GP:{self.primes}'
        if self.kind is Kind.ABELIAN:
            return f'Ab:{self.modulus}'
        if self.kind is Kind.VP:
            return f'Vp:{self.prime}'
        if self.kind is Kind.CUSTOM:
            return str(self.name)
        return self.kind.value


def parse_descriptor(text: str) -> PseudovarietyDescriptor:
    """Parse "G", "GP:2,3", "GP:!2", "O", "N", "S", "Su", "Ab:6" or "Vp:3"."""
    head, sep, argument = text.strip().partition(':')
    head = head.strip().lower()
    argument = argument.strip()

    simple = {
        'g': PseudovarietyDescriptor.all_groups,
        'o': PseudovarietyDescriptor.odd,
        'n': PseudovarietyDescriptor.nilpotent,
        's': PseudovarietyDescriptor.solvable,
        'su': PseudovarietyDescriptor.supersolvable,
    }
    if head in simple:
        if sep:
            raise DescriptorSyntaxError(f'{head.upper()!r} takes no argument: {text!r}')
        return simple[head]()

    if head not in ('gp', 'ab', 'vp'):
        raise DescriptorSyntaxError(f'Unknown pseudovariety {text!r}')
    if not argument:
        raise DescriptorSyntaxError(f'Missing argument in {text!r}')
    if head == 'gp':
        return PseudovarietyDescriptor.prime_set(PrimeSet.parse(argument))

    try:
        value = int(argument)
    except ValueError:
        raise DescriptorSyntaxError(f'Expected an integer argument in {text!r}') from None

    try:
        if head == 'ab':
            return PseudovarietyDescriptor.abelian(value)
        return PseudovarietyDescriptor.vp(value)
    except VarietyError as e:
        raise DescriptorSyntaxError(e.message) from None


def cyclic_membership(k: int, variety: PseudovarietyDescriptor) -> bool:
    """Decide whether the cyclic group of order k belongs to the pseudovariety."""
    if k < 1:
        raise ValueError(f'Cyclic group order must be positive, got {k}')

    kind = variety.kind
    if kind in NILPOTENT_CONTAINING:
        return True
    if kind in (Kind.PRIME_SET, Kind.ODD):
        primes = variety.prime_set_view
        return all(p in primes for p in factorize(k))
    if kind is Kind.ABELIAN:
        return variety.modulus % k == 0
    if kind is Kind.VP:
        # C_k = C_{p^a} x C_q: the Sylow p-subgroup is normal, the quotient is C_q
        p = variety.prime
        q = k // p_part(k, p)
        return (p - 1) % q == 0
    return bool(variety.predicate(k))


def finite_group_membership(group: FiniteGroup, variety: PseudovarietyDescriptor) -> bool:
    """Decide whether a finite group belongs to the pseudovariety."""
    kind = variety.kind
    if kind is Kind.ALL:
        return True
    if kind is Kind.SUPERSOLVABLE:
        raise UnsupportedCheckError('Su membership is an unsupported check (no chief series)')
    if kind is Kind.CUSTOM:
        raise UnsupportedCheckError(f'{variety}: finite group membership is an unsupported check')

    flags = structure_flags(group)
    if kind in (Kind.PRIME_SET, Kind.ODD):
        primes = variety.prime_set_view
        return all(p in primes for p in flags.order_factorization)
    if kind is Kind.NILPOTENT:
        return flags.nilpotent
    if kind is Kind.SOLVABLE:
        return flags.solvable
    if kind is Kind.ABELIAN:
        return flags.abelian and variety.modulus % flags.exponent == 0
    return flags.vp_member(variety.prime)
