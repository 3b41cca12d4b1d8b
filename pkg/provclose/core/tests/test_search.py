from pathlib import Path
from typing import Optional

import pytest

from provclose.core.closure import closure_cyclic
from provclose.core.exceptions import EnumerationCapError
from provclose.core.finoracle import (
    Catalog,
    FiniteGroup,
    Homomorphism,
    apply_hom,
    enumerate_homs,
    load_catalog,
)
from provclose.core.finoracle.search import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    SEPARATED,
    VACUOUS,
    find_separating_quotient,
    necessary_condition_check,
    separating_hom_in_group,
    separation_sweep,
)
from provclose.core.freeword import Word, parse_word
from provclose.core.tests.utils import SWEEP_VARIETIES, reduced_words
from provclose.core.variety import parse_descriptor

NECESSARY_CATALOG_NAMES = ['C2', 'C4', 'C8', 'UT(3,Z/2)', 'UT(3,Z/4)']


@pytest.fixture
def file_catalog(catalog_file: Path) -> Catalog:
    return load_catalog(catalog_file)


def naive_separating_hom(
    v: Word, w: Word, group: FiniteGroup, rank: int
) -> Optional[Homomorphism]:
    for hom in enumerate_homs(rank, group):
        if not group.cyclic_membership_matrix[apply_hom(hom, w, group), apply_hom(hom, v, group)]:
            return hom
    return None


def assert_separates(v: Word, w: Word, group: FiniteGroup, hom: Homomorphism):
    image = apply_hom(hom, w, group)
    assert not group.cyclic_membership_matrix[image, apply_hom(hom, v, group)]


def test_separating_hom_in_group(catalog: Catalog):
    c4 = catalog['C4']
    hom = separating_hom_in_group(parse_word('ab'), parse_word('(ab)^2'), c4)
    assert hom == Homomorphism(2, (1, 0))
    assert hom.describe(c4) == {'a': 'x', 'b': '1'}

    assert separating_hom_in_group(parse_word('[a,b]'), parse_word('[a,b]^2'), c4) is None

    ut4 = catalog['UT(3,Z/4)']
    hom = separating_hom_in_group(parse_word('[a,b]'), parse_word('[a,b]^2'), ut4)
    assert hom is not None
    assert_separates(parse_word('[a,b]'), parse_word('[a,b]^2'), ut4, hom)


def test_separating_hom_cap(catalog: Catalog):
    with pytest.raises(EnumerationCapError):
        separating_hom_in_group(parse_word('a'), parse_word('a^2'), catalog['S3'], rank=3, cap=100)


@pytest.mark.parametrize('name', ['C4', 'S3', 'D4', 'Q8'])
def test_separating_hom_matches_brute_force(catalog: Catalog, short_words, name):
    group = catalog[name]
    for v in short_words[:24]:
        for w in short_words[::5]:
            assert separating_hom_in_group(v, w, group, rank=2) == naive_separating_hom(
                v, w, group, 2
            )


def test_separating_hom_rank_three(catalog: Catalog):
    group = catalog['C2']
    v, w = parse_word('c', 3), parse_word('a^2', 3)
    hom = separating_hom_in_group(v, w, group)
    assert hom == Homomorphism(3, (0, 0, 1))
    assert hom == naive_separating_hom(v, w, group, 3)


def test_find_separating_quotient_from_file(file_catalog: Catalog):
    two_groups = parse_descriptor('GP:2')

    witness = find_separating_quotient(
        parse_word('(ab)^3'), parse_word('(ab)^6'), two_groups, file_catalog
    )
    assert witness.group.name == 'C4'
    assert witness.images == {'a': 'x', 'b': '1'}

    witness = find_separating_quotient(
        parse_word('[a,b]'), parse_word('[a,b]^2'), two_groups, file_catalog
    )
    assert witness.group.name == 'UT(3,Z/4)'


def test_find_separating_quotient_default_catalog(catalog: Catalog):
    two_groups = parse_descriptor('GP:2')
    witness = find_separating_quotient(
        parse_word('(ab)^3'), parse_word('(ab)^6'), two_groups, catalog
    )
    assert witness.group.name == 'C2'

    witness = find_separating_quotient(
        parse_word('[a,b]'), parse_word('[a,b]^2'), two_groups, catalog
    )
    assert witness.group.name == 'D4'


def test_find_separating_quotient_skips_groups_outside_variety(file_catalog: Catalog):
    # C4 and S3 both separate a from <a^2>; neither is a 3-group and only S3 lies in V_3
    a, a_squared = parse_word('a'), parse_word('a^2')
    assert find_separating_quotient(a, a_squared, parse_descriptor('GP:3'), file_catalog) is None
    witness = find_separating_quotient(a, a_squared, parse_descriptor('Vp:3'), file_catalog)
    assert witness.group.name == 'S3'


def test_find_separating_quotient_none_for_members(small_catalog: Catalog, short_words):
    solvable = parse_descriptor('S')
    for w in short_words[:12]:
        assert find_separating_quotient(w, w, solvable, small_catalog) is None
        assert find_separating_quotient(Word.identity(2), w, solvable, small_catalog) is None


def test_necessary_condition_pass(catalog: Catalog):
    restricted = catalog.restricted_to(NECESSARY_CATALOG_NAMES)
    report = necessary_condition_check(
        parse_word('(ab)^2'), parse_word('(ab)^6'), parse_descriptor('GP:2'), restricted
    )
    assert report.status == PASS
    assert report.groups_checked == tuple(NECESSARY_CATALOG_NAMES)
    assert report.homs_checked == 4 + 16 + 64 + 64 + 4096
    assert report.counterexample is None


def test_necessary_condition_fail(catalog: Catalog):
    restricted = catalog.restricted_to(NECESSARY_CATALOG_NAMES)
    report = necessary_condition_check(
        parse_word('ab'), parse_word('(ab)^6'), parse_descriptor('GP:2'), restricted
    )
    assert report.status == FAIL
    assert report.counterexample.group.name == 'C2'
    assert report.groups_checked == ('C2',)
    assert report.homs_checked == 2

    report = necessary_condition_check(
        parse_word('ab'),
        parse_word('(ab)^6'),
        parse_descriptor('GP:2'),
        catalog.restricted_to(NECESSARY_CATALOG_NAMES[1:]),
    )
    assert report.status == FAIL
    assert report.counterexample.group.name == 'C4'
    assert report.counterexample.images == {'a': 'x', 'b': '1'}


def test_necessary_condition_vacuous(file_catalog: Catalog):
    report = necessary_condition_check(
        parse_word('a'), parse_word('a^5'), parse_descriptor('GP:5'), file_catalog
    )
    assert report.status == VACUOUS
    assert report.groups_checked == ()
    assert report.homs_checked == 0
    assert report.groups_skipped == ()


def test_necessary_condition_rank_three(catalog: Catalog):
    c_squared = parse_word('c^2', 3)
    report = necessary_condition_check(
        c_squared, c_squared, parse_descriptor('GP:2'), catalog, cap=5000
    )
    assert report.status == INCONCLUSIVE
    assert report.groups_skipped == ('UT(3,Z/4)', 'UT(3,Z/8)')
    assert {'C2', 'C16', 'Q8', 'UT(3,Z/2)'} <= set(report.groups_checked)
    assert report.counterexample is None


def test_necessary_condition_skipped_group_does_not_hide_failure(catalog: Catalog):
    report = necessary_condition_check(
        parse_word('c', 3),
        parse_word('c^2', 3),
        parse_descriptor('GP:2'),
        catalog.restricted_to(['UT(3,Z/8)', 'C2']),
    )
    assert report.status == FAIL
    assert report.groups_skipped == ('UT(3,Z/8)',)
    assert report.counterexample.group.name == 'C2'


def test_find_separating_quotient_skips_groups_over_cap(catalog: Catalog):
    restricted = catalog.restricted_to(['UT(3,Z/8)', 'C2'])
    two_groups = parse_descriptor('GP:2')
    c, c_squared = parse_word('c', 3), parse_word('c^2', 3)
    assert find_separating_quotient(c, c_squared, two_groups, restricted).group.name == 'C2'
    assert find_separating_quotient(c_squared, c_squared, two_groups, restricted) is None


def test_necessary_condition_word_itself(small_catalog: Catalog, short_words):
    nilpotent = parse_descriptor('N')
    for w in short_words[:8]:
        assert necessary_condition_check(w, w, nilpotent, small_catalog).status == PASS


def test_separation_sweep(small_catalog: Catalog):
    outcomes = separation_sweep(parse_word('(ab)^6'), parse_descriptor('GP:2'), small_catalog)
    assert [outcome.power for outcome in outcomes] == [1, 3]
    assert [outcome.candidate for outcome in outcomes] == [parse_word('ab'), parse_word('(ab)^3')]
    assert all(outcome.status == SEPARATED for outcome in outcomes)


def test_separation_sweep_closed_word(small_catalog: Catalog):
    outcomes = separation_sweep(parse_word('(ab)^4'), parse_descriptor('GP:2'), small_catalog)
    assert [outcome.power for outcome in outcomes] == [1, 2]


def test_separation_sweep_inconclusive(catalog: Catalog):
    cyclic_two = catalog.restricted_to(['C2'])
    outcomes = separation_sweep(parse_word('a^4'), parse_descriptor('GP:2'), cyclic_two)
    assert [(outcome.power, outcome.status) for outcome in outcomes] == [
        (1, SEPARATED),
        (2, INCONCLUSIVE),
    ]


def test_separation_sweep_identity(small_catalog: Catalog):
    assert separation_sweep(Word.identity(2), parse_descriptor('N'), small_catalog) == []


@pytest.mark.parametrize('variety', SWEEP_VARIETIES)
def test_closure_agrees_with_small_catalog(small_catalog: Catalog, variety):
    """
    On short words the small catalog both confirms the closure generator and separates every
    power of the root outside the closure.
    """
    descriptor = parse_descriptor(variety)
    for w in reduced_words(2, 3):
        result = closure_cyclic(w, descriptor)
        report = necessary_condition_check(result.generator, w, descriptor, small_catalog)
        assert report.status == PASS

        for outcome in separation_sweep(w, descriptor, small_catalog):
            assert outcome.status == SEPARATED, f'{outcome.candidate} against <{w}>'
            witness = outcome.witness
            assert descriptor.contains_group(witness.group)
            assert_separates(outcome.candidate, w, witness.group, witness.hom)
