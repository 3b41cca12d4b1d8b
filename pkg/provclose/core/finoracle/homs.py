from __future__ import annotations

from dataclasses import dataclass
import itertools
import logging
from typing import Dict, Iterator, Optional, Tuple

import numpy as np

from provclose.core.exceptions import EnumerationCapError, RankError
from provclose.core.finoracle.groups import FiniteGroup
from provclose.core.freeword import Letter, Word
from provclose.core.freeword.word import LETTERED_ALPHABET_SIZE

logger = logging.getLogger(__name__)

DEFAULT_HOM_CAP = 10_000_000


@dataclass(frozen=True)
class Homomorphism:
    """
    An assignment of group elements to the basis letters of a free group.

    Homomorphisms into a group of order N are indexed by ``sum(images[k] * N**k)``, so the
    image of the first letter varies fastest.
    """

    rank: int
    images: Tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise ValueError(f'Expected {self.rank} images, got {len(self.images)}')

    @classmethod
    def from_index(cls, index: int, rank: int, order: int) -> Homomorphism:
        images = []
        for _ in range(rank):
            index, image = divmod(index, order)
            images.append(image)
        return cls(rank, tuple(images))

    def index(self, order: int) -> int:
        return sum(image * order**k for k, image in enumerate(self.images))

    def describe(self, group: FiniteGroup) -> Dict[str, str]:
        """Map each basis letter name to the label of its image."""
        indexed = self.rank > LETTERED_ALPHABET_SIZE
        return {
            Letter(k + 1, 1).name(indexed): group.labels[image]
            for k, image in enumerate(self.images)
        }


def hom_count(rank: int, group: FiniteGroup) -> int:
    return group.order**rank


def check_hom_cap(rank: int, group: FiniteGroup, cap: int = DEFAULT_HOM_CAP) -> int:
    count = hom_count(rank, group)
    if count > cap:
        raise EnumerationCapError(
            f'{group.name}: {count} homomorphisms from a free group of rank {rank} '
            f'exceed the cap of {cap}'
        )
    logger.debug(f'{group.name}: {count} homomorphisms of rank {rank}')
    return count


def enumerate_homs(
    rank: int, group: FiniteGroup, cap: int = DEFAULT_HOM_CAP
) -> Iterator[Homomorphism]:
    if rank < 1:
        raise RankError(f'Rank must be at least 1, got {rank}')
    check_hom_cap(rank, group, cap)

    # product() varies its last factor fastest; reverse so the first letter does
    for images in itertools.product(range(group.order), repeat=rank):
        yield Homomorphism(rank, tuple(reversed(images)))


def apply_hom(hom: Homomorphism, word: Word, group: FiniteGroup) -> int:
    if word.max_index > hom.rank:
        raise RankError(f'{word} uses generators beyond the homomorphism rank {hom.rank}')

    result = 0
    for letter in word.letters:
        image = hom.images[letter.index - 1]
        if letter.sign < 0:
            image = group.inverse(image)
        result = group.multiply(result, image)
    return result


def images(
    word: Word, group: FiniteGroup, rank: int, start: int = 0, stop: Optional[int] = None
) -> np.ndarray:
    """Evaluate the word under the homomorphisms with indices start..stop-1 at once."""
    if word.max_index > rank:
        raise RankError(f'{word} uses generators beyond rank {rank}')
    if stop is None:
        stop = hom_count(rank, group)

    order = group.order
    indices = np.arange(start, stop, dtype=np.int64)
    generator_images = [(indices // order**k) % order for k in range(rank)]
    inverse_images = {}

    result = np.zeros(len(indices), dtype=np.int64)
    for letter in word.letters:
        k = letter.index - 1
        if letter.sign > 0:
            image = generator_images[k]
        else:
            if k not in inverse_images:
                inverse_images[k] = group.inverses[generator_images[k]]
            image = inverse_images[k]
        result = group.table[result, image]
    return result
