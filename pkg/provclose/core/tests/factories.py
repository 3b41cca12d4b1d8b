import factory
import factory.fuzzy
import factory.random

from provclose.core.freeword import Letter, Word

MAX_WORD_LENGTH = 8


def random_reduced_letters(rank: int, max_length: int = MAX_WORD_LENGTH):
    rng = factory.random.randgen
    letters = []
    for _ in range(rng.randint(1, max_length)):
        choices = [
            Letter(index, sign)
            for index in range(1, rank + 1)
            for sign in (1, -1)
            if not letters or letters[-1] != Letter(index, -sign)
        ]
        letters.append(rng.choice(choices))
    return tuple(letters)


class WordFactory(factory.Factory):
    class Meta:
        model = Word

    rank = 2
    letters = factory.LazyAttribute(lambda o: random_reduced_letters(o.rank))


class CyclicEntryFactory(factory.DictFactory):
    name = factory.Sequence(lambda n: f'Z{n}')
    kind = 'cyclic'
    k = factory.Faker('pyint', min_value=2, max_value=12)


class UnitriangularEntryFactory(factory.DictFactory):
    name = factory.LazyAttribute(lambda o: f'Heisenberg mod {o.modulus}')
    kind = 'unitriangular'
    modulus = factory.fuzzy.FuzzyChoice([2, 3, 4])


class PermutationEntryFactory(factory.DictFactory):
    name = factory.Faker('pystr', max_chars=12)
    kind = 'permutation'
    degree = 4
    generators = factory.LazyFunction(lambda: ['(1 2 3 4)', '(1 3)'])
