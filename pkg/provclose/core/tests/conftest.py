from pathlib import Path
from typing import List

import factory.random
import pytest
from pytest_factoryboy import register

from provclose.core.finoracle import Catalog, default_catalog
from provclose.core.finoracle.groups import DEFAULT_ELEMENT_CAP
from provclose.core.freeword import Word
from provclose.core.tests.utils import SMALL_CATALOG_NAMES, reduced_words

from .factories import WordFactory

DATA_DIR = Path(__file__).parent / 'data'


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def catalog_file() -> Path:
    return DATA_DIR / 'catalog.json'


@pytest.fixture(scope='session')
def catalog() -> Catalog:
    # Same cache key as the commands, which pass the configured element cap
    return default_catalog(DEFAULT_ELEMENT_CAP)


@pytest.fixture(scope='session')
def small_catalog(catalog: Catalog) -> Catalog:
    return catalog.restricted_to(SMALL_CATALOG_NAMES)


@pytest.fixture(scope='session')
def short_words() -> List[Word]:
    return list(reduced_words(2, 3))


@pytest.fixture
def random_words(word_factory: WordFactory) -> List[Word]:
    return [word_factory() for _ in range(100)]


def pytest_configure():
    factory.random.reseed_random('provclose')


register(WordFactory)
