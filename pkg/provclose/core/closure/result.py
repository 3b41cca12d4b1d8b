from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Optional, Tuple

from provclose.core.freeword import Word
from provclose.core.variety import PseudovarietyDescriptor


@dataclass(frozen=True)
class TraceStep:
    """One step of a closure derivation: the rule that fired and the values it used."""

    rule: str
    statement: str
    values: Dict[str, int] = field(default_factory=dict)
    # The published result the step applies, as cited in derivations
    cites: Optional[str] = None


@dataclass(frozen=True)
class ClosureResult:
    """
    The closure of the cyclic subgroup generated by ``input``.

    The closure is generated by ``root ** closure_exponent``. For the identity input the root,
    generator and both exponents are trivial (the identity word and 1).
    """

    input: Word
    variety: PseudovarietyDescriptor
    root: Word
    exponent: int
    closure_exponent: int
    generator: Word
    closed: bool
    trace: Tuple[TraceStep, ...] = ()

    @property
    def index(self) -> int:
        """The index of <input> in its closure."""
        return self.exponent // self.closure_exponent


class ClosednessVerdict(NamedTuple):
    closed: bool
    reason: str
    rule: str
    cites: Optional[str] = None

    def __bool__(self) -> bool:
        return self.closed
