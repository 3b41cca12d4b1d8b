from __future__ import annotations

from functools import lru_cache
import json
import logging
from pathlib import Path
from typing import Iterator, List, Mapping, Optional, Sequence, Union

from provclose.core.exceptions import CatalogError
from provclose.core.finoracle.groups import (
    DEFAULT_ELEMENT_CAP,
    FiniteGroup,
    build_cyclic,
    build_permutation_group,
    build_unitriangular,
)

logger = logging.getLogger(__name__)

CATALOG_KINDS = ('cyclic', 'permutation', 'unitriangular')

DEFAULT_CATALOG_ENTRIES: List[dict] = [
    *({'name': f'C{k}', 'kind': 'cyclic', 'k': k} for k in range(2, 17)),
    {'name': 'S3', 'kind': 'permutation', 'degree': 3, 'generators': ['(1 2)', '(1 2 3)']},
    {'name': 'D4', 'kind': 'permutation', 'degree': 4, 'generators': ['(1 2 3 4)', '(1 3)']},
    {
        'name': 'Q8',
        'kind': 'permutation',
        'degree': 8,
        'generators': ['(1 2 3 4)(5 6 7 8)', '(1 5 3 7)(2 8 4 6)'],
    },
    {'name': 'A4', 'kind': 'permutation', 'degree': 4, 'generators': ['(1 2 3)', '(1 2)(3 4)']},
    *(
        {'name': f'UT(3,Z/{m})', 'kind': 'unitriangular', 'modulus': m}
        for m in (2, 3, 4, 8, 9)
    ),
]


def build_group(entry: Mapping, element_cap: int = DEFAULT_ELEMENT_CAP) -> FiniteGroup:
    """Build the group described by one catalog entry."""
    kind = entry.get('kind')
    name = entry.get('name')
    try:
        if kind == 'cyclic':
            return build_cyclic(int(entry['k']), name=name)
        if kind == 'permutation':
            return build_permutation_group(
                int(entry['degree']), entry['generators'], name=name, element_cap=element_cap
            )
        if kind == 'unitriangular':
            return build_unitriangular(int(entry['modulus']), name=name)
    except KeyError as e:
        raise CatalogError(f'Catalog entry {name or entry!r} ({kind}) is missing {e}') from e
    except (TypeError, ValueError) as e:
        raise CatalogError(f'Malformed catalog entry {name or entry!r}: {e}') from e

    raise CatalogError(f'Unknown group kind {kind!r}; expected one of {", ".join(CATALOG_KINDS)}')


class Catalog:
    """An ordered list of finite groups, each checked against the group laws when loaded."""

    def __init__(self, groups: Sequence[FiniteGroup]):
        self.groups = tuple(groups)

    @classmethod
    def from_entries(
        cls, entries: Sequence[Mapping], element_cap: int = DEFAULT_ELEMENT_CAP
    ) -> Catalog:
        groups = []
        for entry in entries:
            group = build_group(entry, element_cap)
            group.check_group_laws()
            groups.append(group)

        logger.info(f'Loaded a catalog of {len(groups)} groups')
        return cls(groups)

    def __iter__(self) -> Iterator[FiniteGroup]:
        return iter(self.groups)

    def __len__(self) -> int:
        return len(self.groups)

    def __getitem__(self, name: str) -> FiniteGroup:
        for group in self.groups:
            if group.name == name:
                return group
        raise KeyError(name)

    @property
    def names(self) -> List[str]:
        return [group.name for group in self.groups]

    def restricted_to(self, names: Sequence[str]) -> Catalog:
        return Catalog([self[name] for name in names])


@lru_cache()
def default_catalog(element_cap: int = DEFAULT_ELEMENT_CAP) -> Catalog:
    return Catalog.from_entries(DEFAULT_CATALOG_ENTRIES, element_cap)


def read_catalog_file(path: Union[str, Path]) -> list:
    try:
        with open(path) as f:
            entries = json.load(f)
    except OSError as e:
        raise CatalogError(f'Cannot read catalog {path}: {e.strerror}') from e
    except json.JSONDecodeError as e:
        raise CatalogError(f'Catalog {path} is not valid JSON: {e}') from e

    if not isinstance(entries, list):
        raise CatalogError(f'Catalog {path} must hold a JSON list of group entries')
    return entries


def load_catalog(
    path: Optional[Union[str, Path]] = None, element_cap: int = DEFAULT_ELEMENT_CAP
) -> Catalog:
    """Load a catalog file, or the default catalog when no path is given."""
    if path is None:
        return default_catalog(element_cap)
    return Catalog.from_entries(read_catalog_file(path), element_cap)
