from math import lcm

import pytest

from provclose.core.closure import (
    closure_cyclic,
    every_cyclic_closed,
    is_closed_cyclic,
    isolation_holds,
    isolation_witness,
    membership_in_closure,
    nilpotent_closure_exponent,
)
from provclose.core.exceptions import NoClosureFormulaError, NoRootError, VarietyError
from provclose.core.freeword import Word, parse_word, power, root_exp, signed_exponent_over
from provclose.core.tests.utils import powers_of_short_words, reduced_words, trace_rules
from provclose.core.utils.arith import PrimeSet, factorize, p_part
from provclose.core.variety import PseudovarietyDescriptor, parse_descriptor

CLOSURE_VARIETIES = ['G', 'GP:2', 'GP:3', 'GP:2,3', 'GP:!2,3', 'O', 'N', 'S', 'Su', 'Vp:2', 'Vp:3']


@pytest.mark.parametrize(
    'word,variety,generator,closure_exponent,closed',
    [
        ('1', 'GP:2,3', '1', 1, True),
        ('(ab)^6', 'GP:2', '(ab)^2', 2, False),
        ('a^12', 'O', 'a^3', 3, False),
        ('(ab)^4', 'Vp:3', '(ab)^2', 2, False),
        ('a^6', 'Vp:5', 'a^2', 2, False),
        ('[a,b]^10', 'S', '[a,b]^10', 10, True),
        ('(ab)^6', 'GP:!2', '(ab)^3', 3, False),
        ('ba^8b^-1', 'Vp:2', 'ba^8b^-1', 8, True),
    ],
)
def test_closure_cyclic(word, variety, generator, closure_exponent, closed):
    result = closure_cyclic(parse_word(word), parse_descriptor(variety))
    assert result.generator == parse_word(generator)
    assert result.closure_exponent == closure_exponent
    assert result.closed is closed
    assert result.generator == power(result.root, result.closure_exponent)


@pytest.mark.parametrize(
    'word,variety,rule,cites',
    [
        ('(ab)^6', 'GP:2', 'prime-power-part', 'Cor 3.5(iii)'),
        ('(ab)^6', 'GP:2,3', 'prime-set-part', 'Cor 3.5(iii)'),
        ('a^8', 'Vp:2', 'prime-power-part', 'Cor 3.6(iii)'),
        ('a^12', 'O', 'odd-part', 'Cor 3.7(iii)'),
        ('(ab)^4', 'Vp:3', 'vp-closure', 'Cor 4.7'),
        ('a^6', 'N', 'nilpotent-closed', 'Thm 4.1'),
        ('a^6', 'S', 'solvable-closed', 'Cor 3.4(i)'),
        ('a^6', 'G', 'contains-nilpotent', 'Cor 4.2'),
        ('a^6', 'Su', 'contains-nilpotent', 'Cor 4.2'),
    ],
)
def test_closure_trace(word, variety, rule, cites):
    result = closure_cyclic(parse_word(word), parse_descriptor(variety))
    assert trace_rules(result) == ['root-exponent', rule]
    assert [step.cites for step in result.trace] == [None, cites]


@pytest.mark.parametrize('variety,cites', [('N', 'Thm 3.2(i)'), ('GP:2,3', 'Cor 3.5(i)')])
def test_closure_trace_identity(variety, cites):
    result = closure_cyclic(Word.identity(2), parse_descriptor(variety))
    assert trace_rules(result) == ['trivial-subgroup']
    assert result.trace[0].cites == cites


def test_closure_trace_values():
    result = closure_cyclic(parse_word('(ab)^4'), parse_descriptor('Vp:3'))
    assert result.trace[0].values == {'exponent': 4, 'root_length': 2}
    assert result.trace[1].values == {
        'p': 3,
        'h_u': 2,
        'h_w': 1,
        'gcd': 2,
        'p_part': 1,
        'closure_exponent': 2,
    }

    result = closure_cyclic(parse_word('a^12'), parse_descriptor('N'))
    assert result.trace[1].values == {'closure_exponent': 12, 'nu_2': 4, 'nu_3': 3, 'lcm': 12}


def test_closure_index():
    assert closure_cyclic(parse_word('(ab)^6'), parse_descriptor('GP:2')).index == 3
    assert closure_cyclic(parse_word('1'), parse_descriptor('GP:2')).index == 1


def test_custom_extension_closed_closure():
    two_and_three = PseudovarietyDescriptor.custom(
        lambda k: set(factorize(k)) <= {2, 3}, name='{2,3}-groups', extension_closed=True
    )
    result = closure_cyclic(parse_word('a^30'), two_and_three)
    assert result.closure_exponent == 6
    assert trace_rules(result) == ['root-exponent', 'max-cyclic-divisor']
    assert result.trace[1].cites == 'Thm 3.2(iv)'

    verdict = is_closed_cyclic(parse_word('a^30'), two_and_three)
    assert not verdict.closed
    assert (verdict.rule, verdict.cites) == ('cyclic-membership-criterion', 'Thm 3.2(iii)')


def test_closure_rejects_abelian():
    with pytest.raises(NoClosureFormulaError, match=r'Ab\(6\): no closure formula in scope'):
        closure_cyclic(parse_word('a^2'), parse_descriptor('Ab:6'))
    with pytest.raises(NoClosureFormulaError):
        is_closed_cyclic(parse_word('a^2'), parse_descriptor('Ab:6'))


def test_closure_rejects_custom_without_extension_closed():
    unverified = PseudovarietyDescriptor.custom(lambda k: k < 5)
    with pytest.raises(NoClosureFormulaError, match='not extension-closed'):
        closure_cyclic(parse_word('a^2'), unverified)


def test_closure_n_is_identity(random_words):
    nilpotent = parse_descriptor('N')
    for w in random_words:
        result = closure_cyclic(w, nilpotent)
        assert result.generator == w
        assert result.closed


@pytest.mark.parametrize(
    'word,variety,expected',
    [
        ('(ab)^4', 'GP:2', True),
        ('(ab)^2', 'Vp:3', True),
        ('[a,b]^10', 'S', True),
        ('(ab)^4', 'Vp:3', False),
        ('(ab)^6', 'GP:2', False),
        ('a^9', 'O', True),
        ('a^5', 'Vp:3', False),
        ('a^6', 'Vp:3', True),
        ('1', 'Vp:3', True),
    ],
)
def test_is_closed_cyclic(word, variety, expected):
    verdict = is_closed_cyclic(parse_word(word), parse_descriptor(variety))
    assert verdict.closed is expected
    assert bool(verdict) is expected
    assert verdict.reason


@pytest.mark.parametrize(
    'word,variety,rule,cites',
    [
        ('[a,b]^10', 'S', 'solvable-closed', 'Cor 3.4(i)'),
        ('a^6', 'N', 'nilpotent-closed', 'Thm 4.1'),
        ('a^6', 'G', 'contains-nilpotent', 'Cor 4.2'),
        ('(ab)^6', 'GP:2', 'prime-set-criterion', 'Cor 3.5(ii)'),
        ('a^9', 'O', 'prime-set-criterion', 'Cor 3.5(ii)'),
        ('(ab)^4', 'Vp:3', 'vp-closed-criterion', 'Prop 4.6'),
        ('1', 'Vp:3', 'trivial-subgroup', 'Thm 3.2(i)'),
    ],
)
def test_is_closed_citations(word, variety, rule, cites):
    verdict = is_closed_cyclic(parse_word(word), parse_descriptor(variety))
    assert verdict.rule == rule
    assert verdict.cites == cites


@pytest.mark.parametrize('variety', CLOSURE_VARIETIES)
def test_is_closed_agrees_with_closure(variety):
    descriptor = parse_descriptor(variety)
    for w in reduced_words(2, 4):
        result = closure_cyclic(w, descriptor)
        assert is_closed_cyclic(w, descriptor).closed is result.closed
        assert result.exponent % result.closure_exponent == 0
        # The closure is closed
        assert is_closed_cyclic(result.generator, descriptor).closed
        assert closure_cyclic(result.generator, descriptor).generator == result.generator


@pytest.mark.parametrize(
    'v,w,variety,expected',
    [
        ('(ab)^3', '(ab)^6', 'GP:2', False),
        ('(ab)^-4', '(ab)^6', 'GP:2', True),
        ('1', '(ab)^6', 'GP:2', True),
        ('ab', '1', 'GP:2', False),
        ('a^3', 'a^12', 'O', True),
        ('a', 'a^12', 'O', False),
        ('ba^2b^-1', 'ba^6b^-1', 'Vp:5', True),
        ('ab', 'ba', 'N', False),
    ],
)
def test_membership_in_closure(v, w, variety, expected):
    assert membership_in_closure(parse_word(v), parse_word(w), parse_descriptor(variety)) is (
        expected
    )


@pytest.mark.parametrize('variety', CLOSURE_VARIETIES)
def test_word_lies_in_its_closure(short_words, variety):
    descriptor = parse_descriptor(variety)
    for w in short_words:
        assert membership_in_closure(w, w, descriptor)
        assert membership_in_closure(~w, w, descriptor)


def test_prime_set_monotonicity():
    pairs = [('GP:2', 'GP:2,3'), ('GP:3', 'O'), ('GP:!2,3', 'GP:!2')]
    for smaller, larger in pairs:
        for w in reduced_words(2, 4):
            m_small = closure_cyclic(w, parse_descriptor(smaller)).closure_exponent
            m_large = closure_cyclic(w, parse_descriptor(larger)).closure_exponent
            assert m_large % m_small == 0


def test_nilpotent_closure_is_intersection_of_prime_closures():
    for e in range(1, 201):
        assert nilpotent_closure_exponent(e) == e
        w = power(parse_word('ab'), e)
        prime_closures = [
            closure_cyclic(w, PseudovarietyDescriptor.p_groups(p)).closure_exponent
            for p in factorize(e)
        ]
        assert lcm(1, *prime_closures) == closure_cyclic(w, parse_descriptor('N')).closure_exponent
        assert all(m == p_part(e, p) for m, p in zip(prime_closures, factorize(e)))


@pytest.mark.parametrize('max_length', [4, pytest.param(6, marks=pytest.mark.slow)])
def test_v2_degenerates_to_2_groups(max_length):
    v2, two_groups = parse_descriptor('Vp:2'), parse_descriptor('GP:2')
    for w in powers_of_short_words(max_length):
        assert closure_cyclic(w, v2).generator == closure_cyclic(w, two_groups).generator


@pytest.mark.parametrize('max_length', [4, pytest.param(6, marks=pytest.mark.slow)])
@pytest.mark.parametrize('variety', CLOSURE_VARIETIES + ['Vp:5', 'Vp:7'])
def test_basis_extension_invariance(variety, max_length):
    descriptor = parse_descriptor(variety)
    for w in powers_of_short_words(max_length):
        assert (
            closure_cyclic(w.promote(3), descriptor).closure_exponent
            == closure_cyclic(w, descriptor).closure_exponent
        )


@pytest.mark.parametrize('max_length', [4, pytest.param(6, marks=pytest.mark.slow)])
@pytest.mark.parametrize('variety', ['GP:2', 'GP:3', 'GP:2,3', 'GP:!2', 'O', 'S', 'Vp:3'])
def test_every_short_word_closed_iff_small_cyclic_groups_belong(variety, max_length):
    descriptor = parse_descriptor(variety)
    all_closed = all(
        is_closed_cyclic(w, descriptor).closed for w in powers_of_short_words(max_length)
    )
    assert all_closed == all(descriptor.contains_cyclic(k) for k in range(1, max_length + 1))


@pytest.mark.parametrize(
    'variety,expected',
    [
        ('N', True),
        ('S', True),
        ('G', True),
        ('Su', True),
        ('GP:!', True),
        ('GP:2', False),
        ('GP:!2', False),
        ('O', False),
        ('Vp:3', False),
        ('Vp:2', False),
    ],
)
def test_every_cyclic_closed(variety, expected):
    assert every_cyclic_closed(parse_descriptor(variety)) is expected


def test_every_cyclic_closed_custom():
    declared = PseudovarietyDescriptor.custom(
        lambda k: True, extension_closed=True, contains_all_abelian=True
    )
    assert every_cyclic_closed(declared)

    undeclared = PseudovarietyDescriptor.custom(lambda k: True, extension_closed=True)
    with pytest.raises(VarietyError, match='declare'):
        every_cyclic_closed(undeclared)

    with pytest.raises(NoClosureFormulaError):
        every_cyclic_closed(parse_descriptor('Ab:4'))


@pytest.mark.parametrize(
    'word,primes,expected',
    [
        ('(ab)^6', PrimeSet.of(2), '(ab)^2'),
        ('a^4', PrimeSet.of(2), None),
        ('[a,b]', PrimeSet.of(3), None),
        ('a^15', PrimeSet.of(2), 'a^5'),
        ('a^15', PrimeSet.all_but(2), None),
    ],
)
def test_isolation_witness(word, primes, expected):
    w = parse_word(word)
    witness = isolation_witness(w, primes)
    if expected is None:
        assert witness is None
        assert isolation_holds(w, primes)
        assert is_closed_cyclic(w, PseudovarietyDescriptor.prime_set(primes)).closed
    else:
        assert witness == parse_word(expected)
        assert not isolation_holds(w, primes)
        p = min(q for q in factorize(root_exp(w).exponent) if q not in primes)
        assert signed_exponent_over(power(witness, p), w) is not None
        assert signed_exponent_over(witness, w) is None


def test_isolation_witness_identity():
    with pytest.raises(NoRootError):
        isolation_witness(Word.identity(), PrimeSet.of(2))
