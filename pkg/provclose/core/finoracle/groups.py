from __future__ import annotations

from collections import deque
from functools import cached_property
import logging
import re
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from sympy.combinatorics import Permutation

from provclose.core.exceptions import CatalogError, EnumerationCapError, GroupLawError

logger = logging.getLogger(__name__)

DEFAULT_ELEMENT_CAP = 5000

# Full associativity check up to this order, random triples above it
EXHAUSTIVE_LAW_CHECK_ORDER = 64
SAMPLED_LAW_CHECK_TRIPLES = 100_000

CYCLE_RE = re.compile(r'\(([^()]*)\)')


class FiniteGroup:
    """
    A finite group given by its full composition table.

    Elements are the indices 0..N-1 and 0 is the identity. ``table[x, y]`` is the index of the
    product ``x * y``. Instances are immutable once built.
    """

    def __init__(
        self,
        name: str,
        table: np.ndarray,
        labels: Optional[Sequence[str]] = None,
        generators: Sequence[int] = (),
        source: Optional[Mapping] = None,
    ):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
            raise GroupLawError(f'{name}: composition table must be a non-empty square array')
        table.setflags(write=False)

        self.name = name
        self.table = table
        if not labels:
            labels = [str(i) for i in range(self.order)]
        self.labels: Tuple[str, ...] = tuple(labels)
        self.generators: Tuple[int, ...] = tuple(generators)
        # The catalog entry this group was built from, if any
        self.source: Optional[Mapping] = dict(source) if source is not None else None

    def __repr__(self) -> str:
        return f'<FiniteGroup {self.name} of order {self.order}>'

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @cached_property
    def inverses(self) -> np.ndarray:
        inverses = np.argmax(self.table == 0, axis=1)
        inverses.setflags(write=False)
        return inverses

    def multiply(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inverse(self, x: int) -> int:
        return int(self.inverses[x])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverse(x), -k
        result = 0
        for _ in range(k):
            result = self.multiply(result, x)
        return result

    @cached_property
    def powers(self) -> np.ndarray:
        """Row g lists g^0, g^1, ..., g^(N-1)."""
        n = self.order
        powers = np.zeros((n, n), dtype=np.int64)
        elements = np.arange(n)
        for k in range(1, n):
            powers[:, k] = self.table[powers[:, k - 1], elements]
        powers.setflags(write=False)
        return powers

    @cached_property
    def element_orders(self) -> np.ndarray:
        # The first positive k with g^k = 1; column 0 is always the identity
        hits = self.powers[:, 1:] == 0
        orders = np.where(hits.any(axis=1), np.argmax(hits, axis=1) + 1, self.order)
        orders[0] = 1
        orders.setflags(write=False)
        return orders

    @cached_property
    def cyclic_membership_matrix(self) -> np.ndarray:
        """``M[g, x]`` is True when x lies in the cyclic subgroup generated by g."""
        n = self.order
        matrix = np.zeros((n, n), dtype=bool)
        matrix[np.arange(n)[:, None], self.powers] = True
        matrix.setflags(write=False)
        return matrix

    def check_group_laws(self, seed: int = 0) -> None:
        """Raise GroupLawError unless identity, inverse and associativity laws hold."""
        table = self.table
        n = self.order
        elements = np.arange(n)

        if not (np.array_equal(table[0], elements) and np.array_equal(table[:, 0], elements)):
            raise GroupLawError(f'{self.name}: element 0 is not a two-sided identity')
        if table.min() < 0 or table.max() >= n:
            raise GroupLawError(f'{self.name}: table entries out of range')

        # Every row and column a permutation gives unique solutions of x*y = 1
        if not (
            (np.sort(table, axis=1) == elements).all()
            and (np.sort(table, axis=0) == elements[:, None]).all()
        ):
            raise GroupLawError(f'{self.name}: table is not a Latin square, inverses fail')

        if n <= EXHAUSTIVE_LAW_CHECK_ORDER:
            left = table[table]
            right = table[elements[:, None, None], table[None, :, :]]
            associative = np.array_equal(left, right)
        else:
            rng = np.random.default_rng(seed)
            a, b, c = rng.integers(0, n, size=(3, SAMPLED_LAW_CHECK_TRIPLES))
            associative = np.array_equal(table[table[a, b], c], table[a, table[b, c]])

        if not associative:
            raise GroupLawError(f'{self.name}: composition is not associative')

        logger.debug(f'{self.name}: group laws hold (order {n})')


def build_cyclic(k: int, name: Optional[str] = None) -> FiniteGroup:
    if k < 1:
        raise CatalogError(f'Cyclic group order must be positive, got {k}')

    elements = np.arange(k)
    table = np.add.outer(elements, elements) % k
    labels = ['1', 'x'] + [f'x^{i}' for i in range(2, k)]
    return FiniteGroup(
        name or f'C{k}',
        table,
        labels=labels[:k],
        generators=(1,) if k > 1 else (),
        source={'name': name or f'C{k}', 'kind': 'cyclic', 'k': k},
    )


def build_unitriangular(modulus: int, name: Optional[str] = None) -> FiniteGroup:
    """
    Build the 3x3 upper unitriangular matrices over the integers mod m.

    The matrix with entries x12, x23, x13 above the diagonal is the element
    ``x12 * m^2 + x23 * m + x13``. Products follow
    ``(a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')``.
    """
    if modulus < 1:
        raise CatalogError(f'Unitriangular modulus must be positive, got {modulus}')

    m = modulus
    idx = np.arange(m**3)
    x12, x23, x13 = idx // (m * m), (idx // m) % m, idx % m

    top = (x12[:, None] + x12[None, :]) % m
    right = (x23[:, None] + x23[None, :]) % m
    corner = (x13[:, None] + x13[None, :] + x12[:, None] * x23[None, :]) % m
    table = top * m * m + right * m + corner

    labels = [f'M({a},{b},{c})' for a, b, c in zip(x12, x23, x13)]
    group_name = name or f'UT(3,Z/{m})'
    return FiniteGroup(
        group_name,
        table,
        labels=labels,
        generators=(m * m, m) if m > 1 else (),
        source={'name': group_name, 'kind': 'unitriangular', 'modulus': m},
    )


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation such as ``(1 2 3)(4 5)``; ``()`` is the identity."""
    if CYCLE_RE.sub('', text).strip():
        raise CatalogError(f'Malformed cycle notation {text!r}')

    cycles: List[List[int]] = []
    for body in CYCLE_RE.findall(text):
        points = [item for item in re.split(r'[\s,]+', body.strip()) if item]
        try:
            cycle = [int(point) for point in points]
        except ValueError:
            raise CatalogError(f'Malformed cycle notation {text!r}') from None
        if any(point < 1 or point > degree for point in cycle):
            raise CatalogError(f'{text!r} moves points outside 1..{degree}')
        if len(cycle) > 1:
            cycles.append([point - 1 for point in cycle])

    try:
        return Permutation(cycles, size=degree)
    except ValueError as e:
        raise CatalogError(f'Invalid permutation {text!r}: {e}') from None


def cycle_label(array_form: Sequence[int]) -> str:
    cyclic_form = Permutation([int(point) for point in array_form]).cyclic_form
    if not cyclic_form:
        return '()'
    return ''.join('(' + ' '.join(str(point + 1) for point in cycle) + ')' for cycle in cyclic_form)


def build_permutation_group(
    degree: int,
    generators: Sequence[Union[str, Permutation]],
    name: Optional[str] = None,
    element_cap: int = DEFAULT_ELEMENT_CAP,
) -> FiniteGroup:
    """
    Close the generating permutations under composition by breadth-first search.

    ``x * y`` applies x first and then y.
    """
    if degree < 1:
        raise CatalogError(f'Permutation degree must be positive, got {degree}')

    perms = [g if isinstance(g, Permutation) else parse_cycles(g, degree) for g in generators]
    gen_arrays = [np.array(perm.array_form + list(range(perm.size, degree))) for perm in perms]
    if any(len(array) != degree for array in gen_arrays):
        raise CatalogError(f'Generators act on more than {degree} points')

    identity = np.arange(degree)
    elements: List[np.ndarray] = [identity]
    index: Dict[bytes, int] = {identity.tobytes(): 0}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for gen in gen_arrays:
            product = gen[current]
            key = product.tobytes()
            if key in index:
                continue
            if len(elements) >= element_cap:
                raise EnumerationCapError(
                    f'{name or "permutation group"} exceeds the element cap of {element_cap}'
                )
            index[key] = len(elements)
            elements.append(product)
            queue.append(product)

    perm_table = np.stack(elements)
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, perm in enumerate(elements):
        table[i] = [index[row.tobytes()] for row in perm_table[:, perm]]

    generator_indices = tuple(index[array.tobytes()] for array in gen_arrays)
    group_name = name or f'Perm({degree}; {", ".join(cycle_label(a) for a in gen_arrays)})'
    logger.debug(f'{group_name}: closed {len(gen_arrays)} generators to order {n}')
    return FiniteGroup(
        group_name,
        table,
        labels=[cycle_label(perm) for perm in elements],
        generators=generator_indices,
        source={
            'name': group_name,
            'kind': 'permutation',
            'degree': degree,
            'generators': [cycle_label(a) for a in gen_arrays],
        },
    )
