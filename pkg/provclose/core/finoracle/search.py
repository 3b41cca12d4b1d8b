"""Brute-force searches for finite quotients separating an element from a cyclic subgroup."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import logging
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
from sympy import divisors

from provclose.core.closure import closure_cyclic
from provclose.core.finoracle.catalog import Catalog
from provclose.core.finoracle.groups import FiniteGroup
from provclose.core.finoracle.homs import (
    DEFAULT_HOM_CAP,
    Homomorphism,
    check_hom_cap,
    hom_count,
    images,
)
from provclose.core.freeword import Word, power
from provclose.core.variety import PseudovarietyDescriptor, finite_group_membership

logger = logging.getLogger(__name__)

SEARCH_CHUNK = 1 << 16

PASS = 'pass'
FAIL = 'fail'
VACUOUS = 'vacuous'
SEPARATED = 'separated'
INCONCLUSIVE = 'inconclusive'


@dataclass(frozen=True)
class Witness:
    """A homomorphism into a finite group that separates v from <w>."""

    group: FiniteGroup
    hom: Homomorphism

    @property
    def images(self) -> Dict[str, str]:
        return self.hom.describe(self.group)


@dataclass(frozen=True)
class NecessaryConditionReport:
    status: str
    groups_checked: Tuple[str, ...]
    homs_checked: int
    counterexample: Optional[Witness] = None
    # Groups in V whose homomorphism count exceeds the cap
    groups_skipped: Tuple[str, ...] = ()


@dataclass(frozen=True)
class SeparationOutcome:
    power: int
    candidate: Word
    witness: Optional[Witness]

    @property
    def status(self) -> str:
        return SEPARATED if self.witness is not None else INCONCLUSIVE


@lru_cache(maxsize=128)
def _block_images(word: Word, group: FiniteGroup, rank: int, start: int, stop: int) -> np.ndarray:
    result = images(word, group, rank, start, stop)
    result.setflags(write=False)
    return result


def first_separating_index(
    v: Word, w: Word, group: FiniteGroup, rank: int, start: int, stop: int
) -> Optional[int]:
    """Return the first hom index in [start, stop) sending v outside <image of w>."""
    membership = group.cyclic_membership_matrix
    for low in range(start, stop, SEARCH_CHUNK):
        high = min(stop, low + SEARCH_CHUNK)
        v_images = _block_images(v, group, rank, low, high)
        w_images = _block_images(w, group, rank, low, high)
        escaped = np.flatnonzero(~membership[w_images, v_images])
        if escaped.size:
            return low + int(escaped[0])
    return None


def separating_hom_in_group(
    v: Word,
    w: Word,
    group: FiniteGroup,
    rank: Optional[int] = None,
    cap: int = DEFAULT_HOM_CAP,
    workers: int = 0,
) -> Optional[Homomorphism]:
    """Return the first homomorphism (in index order) separating v from <w>, if any."""
    rank = rank or max(v.rank, w.rank)
    count = check_hom_cap(rank, group, cap)

    if workers > 0 and group.source is not None and group.order > 1:
        from provclose.core.tasks.search import partitioned_first_index

        index = partitioned_first_index(v, w, group, rank, workers)
    else:
        index = first_separating_index(v, w, group, rank, 0, count)

    if index is None:
        return None
    return Homomorphism.from_index(index, rank, group.order)


def eligible_groups(variety: PseudovarietyDescriptor, catalog: Catalog) -> Iterator[FiniteGroup]:
    for group in catalog:
        if finite_group_membership(group, variety):
            yield group


def within_cap(group: FiniteGroup, rank: int, cap: int) -> bool:
    count = hom_count(rank, group)
    if count <= cap:
        return True
    logger.info(f'Skipping {group.name}: {count} homomorphisms exceed the cap of {cap}')
    return False


def find_separating_quotient(
    v: Word,
    w: Word,
    variety: PseudovarietyDescriptor,
    catalog: Catalog,
    rank: Optional[int] = None,
    cap: int = DEFAULT_HOM_CAP,
    workers: int = 0,
) -> Optional[Witness]:
    """
    Scan the catalog groups in V, in order, for a homomorphism separating v from <w>.

    None is inconclusive: a finite catalog can confirm separation but never rule it out. Groups
    with more than ``cap`` homomorphisms from the free group are skipped.
    """
    rank = rank or max(v.rank, w.rank)
    for group in eligible_groups(variety, catalog):
        if not within_cap(group, rank, cap):
            continue
        hom = separating_hom_in_group(v, w, group, rank, cap, workers)
        if hom is not None:
            logger.debug(f'{group.name} separates {v} from <{w}> via {hom.describe(group)}')
            return Witness(group, hom)
    return None


def necessary_condition_check(
    candidate: Word,
    w: Word,
    variety: PseudovarietyDescriptor,
    catalog: Catalog,
    rank: Optional[int] = None,
    cap: int = DEFAULT_HOM_CAP,
    workers: int = 0,
) -> NecessaryConditionReport:
    """
    Check that no catalog group in V separates the candidate from <w>.

    Groups over the homomorphism cap are skipped and reported; a check that skipped any group
    without finding a counterexample is inconclusive.
    """
    rank = rank or max(candidate.rank, w.rank)
    checked: List[str] = []
    skipped: List[str] = []
    homs_checked = 0
    for group in eligible_groups(variety, catalog):
        if not within_cap(group, rank, cap):
            skipped.append(group.name)
            continue
        checked.append(group.name)
        hom = separating_hom_in_group(candidate, w, group, rank, cap, workers)
        if hom is not None:
            homs_checked += hom.index(group.order) + 1
            return NecessaryConditionReport(
                FAIL,
                tuple(checked),
                homs_checked,
                counterexample=Witness(group, hom),
                groups_skipped=tuple(skipped),
            )
        homs_checked += group.order**rank

    if skipped:
        status = INCONCLUSIVE
    else:
        status = PASS if checked else VACUOUS
    logger.info(f'Necessary condition for {candidate} in Cl_{variety}(<{w}>): {status}')
    return NecessaryConditionReport(
        status, tuple(checked), homs_checked, groups_skipped=tuple(skipped)
    )


def separation_sweep(
    w: Word,
    variety: PseudovarietyDescriptor,
    catalog: Catalog,
    rank: Optional[int] = None,
    cap: int = DEFAULT_HOM_CAP,
    workers: int = 0,
) -> List[SeparationOutcome]:
    """Try to separate u^j from <w> for every divisor j of e not divisible by m."""
    result = closure_cyclic(w, variety)
    if w.is_identity:
        return []

    outcomes = []
    for j in divisors(result.exponent):
        if j % result.closure_exponent == 0:
            continue
        candidate = power(result.root, j)
        witness = find_separating_quotient(candidate, w, variety, catalog, rank, cap, workers)
        outcomes.append(SeparationOutcome(j, candidate, witness))
    return outcomes
