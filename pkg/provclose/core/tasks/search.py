from functools import lru_cache
import json
from typing import Dict, List, Optional, Tuple

from celery import group as celery_group
from celery import shared_task
from celery.utils.log import get_task_logger
from django.conf import settings
from more_itertools import divide

from provclose.core.finoracle.catalog import build_group
from provclose.core.finoracle.groups import FiniteGroup
from provclose.core.finoracle.search import first_separating_index
from provclose.core.freeword import Word, parse_word

from . import ProvcloseCeleryTask

logger = get_task_logger(__name__)


@lru_cache(maxsize=32)
def _group_from_entry(serialized_entry: str) -> FiniteGroup:
    return build_group(json.loads(serialized_entry), settings.PROVCLOSE_ELEMENT_CAP)


@shared_task(base=ProvcloseCeleryTask)
def search_partition(
    v: str, w: str, rank: int, entry: Dict, start: int, stop: int
) -> Optional[int]:
    """Return the first index in [start, stop) whose homomorphism separates v from <w>."""
    group = _group_from_entry(json.dumps(entry, sort_keys=True))
    return first_separating_index(
        parse_word(v, rank), parse_word(w, rank), group, rank, start, stop
    )


def partition_bounds(order: int, rank: int, workers: int) -> List[Tuple[int, int]]:
    """
    Split the homomorphism indices into at most ``workers`` contiguous ranges.

    Ranges follow the image of the last generator: each one covers every homomorphism sending it
    to a run of consecutive elements, so no range is empty.
    """
    block = order ** (rank - 1)
    bounds = []
    for chunk in divide(workers, range(order)):
        leads = list(chunk)
        if leads:
            bounds.append((leads[0] * block, (leads[-1] + 1) * block))
    return bounds


def partitioned_first_index(
    v: Word, w: Word, group: FiniteGroup, rank: int, workers: int
) -> Optional[int]:
    """Fan the search out over ``workers`` tasks; the smallest hit is the sequential answer."""
    bounds = partition_bounds(group.order, rank, workers)
    job = celery_group(
        search_partition.s(
            v=str(v), w=str(w), rank=rank, entry=dict(group.source), start=start, stop=stop
        )
        for start, stop in bounds
    )
    hits = [index for index in job.apply_async().get() if index is not None]
    logger.info(f'{group.name}: {len(hits)} of {len(bounds)} partitions found a separation')
    return min(hits, default=None)
