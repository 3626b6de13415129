import logging
from concurrent.futures import ProcessPoolExecutor
import numpy as np

logger = logging.getLogger(__name__)


def split_work(items, parts):
    """Splits an array of work items into contiguous, order preserving parts.

    :param items: array-like of work items
    :param parts: number of parts (>= 1)
    :return: list of non-empty arrays
    """
    parts = max(1, int(parts))
    return [part for part in np.array_split(np.asarray(items), parts) if len(part) > 0]


def partitioned_map(function, items, jobs=1):
    """Applies function to contiguous parts of items, in worker processes when jobs > 1.

    The results come back in the order of the parts, so a merge that is associative and
    commutative gives the same answer for every jobs setting.

    :param function: picklable callable taking one array of items
    :param items: array-like of work items
    :param jobs: number of worker processes; 1 runs in process
    :return: list of the per-part results
    """
    jobs = max(1, int(jobs))
    parts = split_work(items, jobs)
    if jobs == 1 or len(parts) <= 1:
        return [function(part) for part in parts]
    logger.info("distributing %d items over %d workers", len(items), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, parts))


def merge_counts(results):
    """Adds up dictionaries of integer counts.

    :param results: iterable of dict key -> int
    :return: dict sorted by key
    """
    merged = {}
    for result in results:
        for key, count in result.items():
            merged[key] = merged.get(key, 0) + count
    return dict(sorted(merged.items()))
