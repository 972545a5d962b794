#!/usr/bin/env python
"""Batch positivity scan over an (n, m) grid."""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor

from tqdm import tqdm

from griesskit.positivity import gram_report

log = logging.getLogger(__name__)


def expected_positive(n, m):
    """The classification: m <= 3 for n = 3, m <= 2 for n >= 4."""
    return m <= 3 if n == 3 else m <= 2


def scan_point(point):
    """One row of the scan; top-level so worker processes can pickle it."""
    n, m = point
    report = gram_report(n, m)
    expected = expected_positive(n, m)
    ok = (report.positive_definite == expected and report.block_verdict == report.positive_definite
          and report.determinants_agree and report.mixed_blocks_vanish)
    return {
        'n': n,
        'm': m,
        'positive_definite': report.positive_definite,
        'expected': expected,
        'block_verdict': report.block_verdict,
        'determinants_agree': report.determinants_agree,
        'mixed_blocks_vanish': report.mixed_blocks_vanish,
        'outside_hypothesis': report.outside_hypothesis,
        'pass': ok,
    }


def scan_grid(n_max, m_max, num_workers=0, n_min=3, progress=False):
    """Runs scan_point over n_min <= n <= n_max, 1 <= m <= m_max.

    Args:
        n_max (int): Largest n.
        m_max (int): Largest m.
        num_workers (int): Size of the process pool, 0 runs in-process.
        n_min (int): Smallest n.
        progress (bool): Show a tqdm bar on standard error.

    Returns:
        list of row dicts sorted by (n, m).
    """
    points = list(itertools.product(range(n_min, n_max + 1), range(1, m_max + 1)))
    log.info('scanning %d grid points with %d workers', len(points), num_workers)
    if num_workers and num_workers > 0:
        with ProcessPoolExecutor(max_workers=num_workers) as pool:
            rows = list(tqdm(pool.map(scan_point, points), total=len(points), disable=not progress))
    else:
        rows = [scan_point(pt) for pt in tqdm(points, disable=not progress)]
    return sorted(rows, key=lambda r: (r['n'], r['m']))
