import math
from collections import defaultdict
from typing import NamedTuple

import numpy as np

from influencerank.errors import InvalidParams, NoData


class PercentileCurve(NamedTuple):
    """Per-bin click percentile against the average attribute of a URL's posters.

    ``bins`` holds (bin center, percentile) for every non-empty bin;
    ``fit`` is (slope, intercept) of the least-squares line through
    (log10 center, log10 max(percentile, 1)).
    """
    bins: tuple
    q: float
    fit: tuple


def mentioners(log):
    users = defaultdict(set)
    for event in log.events:
        users[event.url].add(event.user)
    return users


def url_attribute_average(log, scores):
    """Mean score of the distinct users that mentioned (or retweeted) each URL."""
    averages = {}
    for url, users in sorted(mentioners(log).items()):
        values = [scores.get(user) for user in sorted(users) if user in scores]
        if values:
            averages[url] = sum(values) / len(values)

    return averages


def url_early_influence(log, scores, first_n=10):
    """Mean score of the first ``first_n`` distinct users to mention each URL."""
    if first_n < 1:
        raise InvalidParams(f'first_n must be at least 1, got {first_n}')

    early = defaultdict(list)
    for event in log.events:
        seen = early[event.url]
        if len(seen) < first_n and event.user not in seen:
            seen.append(event.user)

    averages = {}
    for url, users in sorted(early.items()):
        values = [scores.get(user) for user in users if user in scores]
        if values:
            averages[url] = sum(values) / len(values)

    return averages


def url_click_points(averages, clicks):
    """(average attribute, clicks) for every URL present in both tables."""
    return [(x, clicks[url]) for url, x in sorted(averages.items()) if url in clicks]


def nearest_rank(values, q):
    """The smallest value whose share of points at or below it exceeds ``q``.

    That is the order statistic at 0-based position floor(q * n), capped at
    the maximum.
    """
    ordered = np.sort(np.asarray(values))
    position = min(int(math.floor(q * len(ordered) + 1e-9)), len(ordered) - 1)
    return ordered[position]


def percentile_curve(points, q=0.999, bin_count=50):
    if not 0.0 < q < 1.0:
        raise InvalidParams(f'q must lie in (0, 1), got {q}')
    if bin_count < 1:
        raise InvalidParams(f'bin_count must be at least 1, got {bin_count}')

    # log-spaced bins are undefined at x <= 0
    kept = [(float(x), int(clicks)) for x, clicks in points if x > 0]
    if not kept:
        raise NoData('no points with a positive attribute value')

    x = np.array([point[0] for point in kept])
    clicks = np.array([point[1] for point in kept], dtype=np.int64)

    low, high = np.log10(x.min()), np.log10(x.max())
    if low == high:
        edges = np.array([low, high])
        assignment = np.zeros(len(x), dtype=np.int64)
    else:
        edges = np.linspace(low, high, bin_count + 1)
        assignment = np.clip(np.searchsorted(edges, np.log10(x), side='right') - 1, 0, bin_count - 1)

    bins = []
    for b in range(len(edges) - 1):
        members = clicks[assignment == b]
        if len(members):
            center = 10 ** ((edges[b] + edges[b + 1]) / 2)
            bins.append((float(center), int(nearest_rank(members, q))))

    return PercentileCurve(tuple(bins), q, fit_line(bins))


def fit_line(bins):
    centers = np.log10([center for center, _ in bins])
    levels = np.log10([max(percentile, 1) for _, percentile in bins])
    if len(bins) < 2:
        return 0.0, float(levels[0])

    slope, intercept = np.polyfit(centers, levels, 1)
    return float(slope), float(intercept)
