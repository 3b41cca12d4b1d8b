"""Structural invariants of finite groups: Sylow normality, derived series, V_p data."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Dict, Iterable

import numpy as np

from provclose.core.finoracle.groups import FiniteGroup
from provclose.core.utils.arith import Factorization, factorize, is_power_of


@dataclass(frozen=True)
class StructureFlags:
    order: int
    order_factorization: Factorization
    abelian: bool
    exponent: int
    sylow_normal: Dict[int, bool]
    nilpotent: bool
    solvable: bool
    derived_length: int
    # For each prime p dividing the order: Syl_p is normal and G/Syl_p is abelian of
    # exponent dividing p - 1
    vp_quotient: Dict[int, bool]

    def vp_member(self, p: int) -> bool:
        if p not in self.order_factorization:
            # Trivial Sylow p-subgroup, so G itself is the quotient
            return self.abelian and (p - 1) % self.exponent == 0
        return self.vp_quotient[p]


def generated_subgroup(group: FiniteGroup, generators: Iterable[int]) -> np.ndarray:
    """Return the membership mask of the subgroup generated by the given elements."""
    mask = np.zeros(group.order, dtype=bool)
    mask[0] = True
    mask[list(generators)] = True
    while True:
        members = np.flatnonzero(mask)
        grown = mask.copy()
        grown[group.table[np.ix_(members, members)].ravel()] = True
        if np.array_equal(grown, mask):
            return mask
        mask = grown


def commutators(group: FiniteGroup, members: np.ndarray) -> np.ndarray:
    """Return every commutator x y x^-1 y^-1 with x, y in the given element indices."""
    table, inverses = group.table, group.inverses
    xy = table[np.ix_(members, members)]
    yx = xy.T
    return np.unique(table[xy, inverses[yx]])


def p_element_mask(group: FiniteGroup, p: int) -> np.ndarray:
    p_orders = {int(k) for k in np.unique(group.element_orders) if is_power_of(int(k), p)}
    return np.isin(group.element_orders, list(p_orders))


@lru_cache(maxsize=128)
def structure_flags(group: FiniteGroup) -> StructureFlags:
    order = group.order
    table = group.table
    factorization = factorize(order)
    exponent = lcm(*(int(k) for k in np.unique(group.element_orders)))
    abelian = bool(np.array_equal(table, table.T))

    derived = np.ones(order, dtype=bool)
    derived_length = 0
    while derived.sum() > 1:
        members = np.flatnonzero(derived)
        next_derived = generated_subgroup(group, commutators(group, members))
        if np.array_equal(next_derived, derived):
            break
        derived = next_derived
        derived_length += 1
    solvable = bool(derived.sum() == 1)

    every = np.arange(order)
    all_commutators = commutators(group, every)
    sylow_normal: Dict[int, bool] = {}
    vp_quotient: Dict[int, bool] = {}
    for p, a in factorization.items():
        # A Sylow subgroup is normal iff it is the only one, i.e. it holds every p-element
        p_elements = p_element_mask(group, p)
        normal = int(p_elements.sum()) == p**a
        sylow_normal[p] = normal

        quotient_ok = False
        if normal:
            # p divides the order, so column p - 1 of the power table exists
            powers = group.powers[:, p - 1]
            quotient_ok = bool(p_elements[all_commutators].all() and p_elements[powers].all())
        vp_quotient[p] = quotient_ok

    return StructureFlags(
        order=order,
        order_factorization=factorization,
        abelian=abelian,
        exponent=exponent,
        sylow_normal=sylow_normal,
        nilpotent=all(sylow_normal.values()),
        solvable=solvable,
        derived_length=derived_length,
        vp_quotient=vp_quotient,
    )
