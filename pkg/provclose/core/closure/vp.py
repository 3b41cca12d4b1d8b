"""
Arithmetic behind closures for V_p.

K_n is the verbal subgroup of the free group for the identities of abelian groups of exponent
p - 1: a word lies in K_n exactly when p - 1 divides every coordinate of its abelianization.
"""
from __future__ import annotations

from math import gcd
from typing import NamedTuple, NewType

import numpy as np
from sympy import isprime

from provclose.core.exceptions import NoRootError, NotInKError, PrimeSetError
from provclose.core.freeword import Word, abelianization, power, root_exp
from provclose.core.utils.arith import p_part

HValue = NewType('HValue', int)


class KRootExp(NamedTuple):
    root_in_K: Word
    exponent_in_K: int


def _check_prime(p: int) -> None:
    if not isprime(p):
        raise PrimeSetError(f'{p} is not prime')


def h_value(w: Word, p: int) -> HValue:
    """The least r >= 1 with w^r in K_n, i.e. (p-1) / gcd(p-1, abelianization coordinates)."""
    _check_prime(p)
    return HValue((p - 1) // gcd(p - 1, *abelianization(w)))


def in_k(w: Word, p: int) -> bool:
    _check_prime(p)
    return all(coordinate % (p - 1) == 0 for coordinate in abelianization(w))


def root_exp_in_K(w: Word, p: int) -> KRootExp:  # noqa: N802
    """Root and exponent of w computed inside K_n: (u^h_u, e / h_u)."""
    _check_prime(p)
    if w.is_identity:
        raise NoRootError('no root of the empty word')

    for i, coordinate in enumerate(abelianization(w), start=1):
        if coordinate % (p - 1):
            raise NotInKError(
                f'{w} is not in K_n for p = {p}: coordinate {i} is {coordinate}, '
                f'not divisible by {p - 1}',
                coordinate=i,
                value=coordinate,
            )

    u, e = root_exp(w)
    h_u = h_value(u, p)
    return KRootExp(power(u, h_u), e // h_u)


def vp_closure_exponent(e: int, h_u: int, p: int) -> int:
    return gcd(e, h_u) * p_part(e, p)


def vtog_consistency_check(w: Word, p: int) -> bool:
    """
    Check the V_p closure exponent against the union of G_p-closure cosets inside <u> = Z.

    Over the window [-N, N] with N = 4 e h_u nu_p(e), the union of (h_u nu_p(e)) Z + i e for
    0 <= i < h_w must equal d_p Z.
    """
    _check_prime(p)
    if w.is_identity:
        raise NoRootError('no root of the empty word')

    u, e = root_exp(w)
    h_u, h_w = h_value(u, p), h_value(w, p)
    step = h_u * p_part(e, p)
    bound = 4 * e * step

    window = np.arange(-bound, bound + 1, dtype=np.int64)
    union = np.zeros(window.shape, dtype=bool)
    for i in range(h_w):
        union |= (window - i * e) % step == 0

    return bool(np.array_equal(union, window % vp_closure_exponent(e, h_u, p) == 0))
