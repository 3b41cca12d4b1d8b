"""Closures of cyclic subgroups of free groups in the pro-V topology."""
from __future__ import annotations

import logging
from math import gcd, lcm
from typing import List, Optional

from provclose.core.closure.result import ClosednessVerdict, ClosureResult, TraceStep
from provclose.core.closure.vp import h_value, vp_closure_exponent
from provclose.core.exceptions import NoClosureFormulaError, NoRootError, VarietyError
from provclose.core.freeword import Word, power, root_exp, signed_exponent_over
from provclose.core.utils.arith import PrimeSet, factorize, is_power_of, max_divisor_in_variety, nu
from provclose.core.variety import Kind, PseudovarietyDescriptor, cyclic_membership

logger = logging.getLogger(__name__)


# Each derivation rule cites the published result it applies
NILPOTENT_RULES = {
    Kind.NILPOTENT: ('nilpotent-closed', 'cyclic subgroups are N-closed', 'Thm 4.1'),
    Kind.SOLVABLE: ('solvable-closed', 'cyclic subgroups are S-closed', 'Cor 3.4(i)'),
}
CONTAINS_NILPOTENT_RULE = (
    'contains-nilpotent',
    'cyclic subgroups are closed in every pseudovariety containing N',
    'Cor 4.2',
)
PRIME_SET_CLOSURE = 'Cor 3.5(iii)'
P_GROUP_CLOSURE = 'Cor 3.6(iii)'
ODD_CLOSURE = 'Cor 3.7(iii)'
VP_CLOSURE = 'Cor 4.7'
EXTENSION_CLOSED_CLOSURE = 'Thm 3.2(iv)'
PRIME_SET_CRITERION = 'Cor 3.5(ii)'
VP_CRITERION = 'Prop 4.6'
CYCLIC_MEMBERSHIP_CRITERION = 'Thm 3.2(iii)'


def _reject_without_formula(variety: PseudovarietyDescriptor) -> None:
    if variety.kind is Kind.ABELIAN:
        raise NoClosureFormulaError(f'Ab({variety.modulus}): no closure formula in scope')


def _trivial_cites(variety: PseudovarietyDescriptor) -> str:
    return 'Cor 3.5(i)' if variety.kind is Kind.PRIME_SET else 'Thm 3.2(i)'


def nilpotent_closure_exponent(e: int) -> int:
    """Intersect the G_p closures over the primes p dividing e: lcm of the p-parts of e."""
    return lcm(1, *(p**a for p, a in factorize(e).items()))


def _nilpotent_step(variety: PseudovarietyDescriptor, e: int) -> TraceStep:
    rule, statement, cites = NILPOTENT_RULES.get(variety.kind, CONTAINS_NILPOTENT_RULE)
    values = {'closure_exponent': e}
    if variety.kind is Kind.NILPOTENT:
        values.update({f'nu_{p}': p**a for p, a in factorize(e).items()})
        values['lcm'] = nilpotent_closure_exponent(e)
    return TraceStep(rule, statement, values, cites)


def _prime_power_step(p: int, m: int, cites: str) -> TraceStep:
    return TraceStep('prime-power-part', f'm = nu_{p}(e)', {'p': p, 'closure_exponent': m}, cites)


def closure_cyclic(w: Word, variety: PseudovarietyDescriptor) -> ClosureResult:
    """
    Compute the closure of <w> in the pro-V topology.

    The closure of <u^e> (u the root of w) is always <u^m> for some m dividing e. Which m depends
    on the pseudovariety, and every step of the choice is recorded in the trace.
    """
    _reject_without_formula(variety)

    if w.is_identity:
        step = TraceStep(
            'trivial-subgroup', 'the trivial subgroup is closed', cites=_trivial_cites(variety)
        )
        return ClosureResult(
            input=w,
            variety=variety,
            root=w,
            exponent=1,
            closure_exponent=1,
            generator=w,
            closed=True,
            trace=(step,),
        )

    u, e = root_exp(w)
    trace: List[TraceStep] = [
        TraceStep('root-exponent', f'{w} = ({u})^{e}', {'exponent': e, 'root_length': len(u)})
    ]

    if variety.contains_N:
        m = e
        trace.append(_nilpotent_step(variety, e))
    elif variety.kind in (Kind.PRIME_SET, Kind.ODD):
        primes = variety.prime_set_view
        m = nu(e, primes)
        if variety.kind is Kind.ODD:
            two_part = e // m
            trace.append(
                TraceStep(
                    'odd-part',
                    'm = e / nu_2(e)',
                    {'nu_2': two_part, 'closure_exponent': m},
                    ODD_CLOSURE,
                )
            )
        elif len(primes.primes) == 1 and not primes.complement:
            (p,) = primes.primes
            trace.append(_prime_power_step(p, m, PRIME_SET_CLOSURE))
        else:
            statement = f'm = nu_P(e) for P = {primes}'
            trace.append(
                TraceStep('prime-set-part', statement, {'closure_exponent': m}, PRIME_SET_CLOSURE)
            )
    elif variety.kind is Kind.VP and variety.prime == 2:
        # V_2 is the pseudovariety of 2-groups
        m = nu(e, PrimeSet.of(2))
        trace.append(_prime_power_step(2, m, P_GROUP_CLOSURE))
    elif variety.kind is Kind.VP:
        p = variety.prime
        h_u, h_w = h_value(u, p), h_value(w, p)
        m = vp_closure_exponent(e, h_u, p)
        trace.append(
            TraceStep(
                'vp-closure',
                f'm = gcd(e, h_u) * nu_{p}(e)',
                {
                    'p': p,
                    'h_u': h_u,
                    'h_w': h_w,
                    'gcd': gcd(e, h_u),
                    'p_part': nu(e, PrimeSet.of(p)),
                    'closure_exponent': m,
                },
                VP_CLOSURE,
            )
        )
    elif variety.extension_closed:
        m = max_divisor_in_variety(e, variety)
        trace.append(
            TraceStep(
                'max-cyclic-divisor',
                'm = max{k : k | e and C_k in V}',
                {'closure_exponent': m},
                EXTENSION_CLOSED_CLOSURE,
            )
        )
    else:
        raise NoClosureFormulaError(
            f'{variety}: no closure formula in scope for a pseudovariety that is not '
            'extension-closed'
        )

    generator = power(u, m)
    logger.debug(f'Closure of <{w}> in {variety}: <{generator}> (m = {m}, e = {e})')
    return ClosureResult(
        input=w,
        variety=variety,
        root=u,
        exponent=e,
        closure_exponent=m,
        generator=generator,
        closed=m == e,
        trace=tuple(trace),
    )


def is_closed_cyclic(w: Word, variety: PseudovarietyDescriptor) -> ClosednessVerdict:
    """Decide whether <w> is V-closed directly from its exponent."""
    _reject_without_formula(variety)
    if w.is_identity:
        return ClosednessVerdict(
            True, 'the trivial subgroup is closed', 'trivial-subgroup', _trivial_cites(variety)
        )

    u, e = root_exp(w)
    if variety.contains_N:
        rule, statement, cites = NILPOTENT_RULES.get(variety.kind, CONTAINS_NILPOTENT_RULE)
        return ClosednessVerdict(True, statement, rule, cites)

    if variety.kind in (Kind.PRIME_SET, Kind.ODD):
        primes = variety.prime_set_view
        outside = [p for p in factorize(e) if p not in primes]
        if outside:
            reason = f'exponent {e} has prime factor {outside[0]} outside {primes}'
        else:
            reason = f'every prime factor of exponent {e} lies in {primes}'
        return ClosednessVerdict(not outside, reason, 'prime-set-criterion', PRIME_SET_CRITERION)

    if variety.kind is Kind.VP:
        p = variety.prime
        h_u, h_w = h_value(u, p), h_value(w, p)
        ratio = h_u // h_w
        closed = e % ratio == 0 and is_power_of(e // ratio, p)
        relation = '=' if closed else '!='
        return ClosednessVerdict(
            closed,
            f'e = {e} {relation} (h_u / h_w) * {p}^s with h_u = {h_u}, h_w = {h_w}',
            'vp-closed-criterion',
            VP_CRITERION,
        )

    if variety.extension_closed:
        closed = cyclic_membership(e, variety)
        return ClosednessVerdict(
            closed,
            f'C_{e} is {"" if closed else "not "}in {variety}',
            'cyclic-membership-criterion',
            CYCLIC_MEMBERSHIP_CRITERION,
        )

    raise NoClosureFormulaError(f'{variety}: no closedness criterion in scope')


def membership_in_closure(v: Word, w: Word, variety: PseudovarietyDescriptor) -> bool:
    """Decide whether v lies in the closure of <w>."""
    result = closure_cyclic(w, variety)
    if v.is_identity:
        return True
    if w.is_identity:
        return False

    k = signed_exponent_over(v, result.root)
    return k is not None and k % result.closure_exponent == 0


def isolation_witness(w: Word, primes: PrimeSet) -> Optional[Word]:
    """
    Return v with v^p in <w> but v not in <w> for the smallest prime p dividing e outside the set.

    None means there is no such prime, and then <w> is G_P-closed.
    """
    if w.is_identity:
        raise NoRootError('no root of the empty word')

    u, e = root_exp(w)
    for p in factorize(e):
        if p not in primes:
            return power(u, e // p)
    return None


def isolation_holds(w: Word, primes: PrimeSet) -> bool:
    return isolation_witness(w, primes) is None


def every_cyclic_closed(variety: PseudovarietyDescriptor) -> bool:
    """Decide whether every cyclic subgroup of a free group is V-closed."""
    _reject_without_formula(variety)
    if variety.contains_N:
        return True
    if variety.kind is Kind.PRIME_SET:
        return variety.primes.is_all
    if variety.kind in (Kind.ODD, Kind.VP):
        return False
    if variety.extension_closed:
        if variety.kind is Kind.CUSTOM and variety.declared_contains_all_abelian is None:
            raise VarietyError(f'{variety}: declare whether it contains every finite abelian group')
        return variety.contains_all_abelian
    raise NoClosureFormulaError(f'{variety}: no closure formula in scope')
