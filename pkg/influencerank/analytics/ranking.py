import math
from typing import NamedTuple

import numpy as np
from scipy.stats import rankdata

from influencerank.errors import ConstantRanking, InsufficientOverlap, InvalidParams


class RankRow(NamedTuple):
    user: str
    value: float
    rank: int


class JoinRow(NamedTuple):
    user: str
    rank_a: int
    rank_b: int


class RankReport(NamedTuple):
    """Rows of one ranking (``RankRow``) or of a two-measure join (``JoinRow``)."""
    labels: tuple
    rows: tuple


def ranks(scores):
    """1-based position of every user in the descending ranking (ties by id)."""
    return {user: position for position, user in enumerate(scores.ranking(), start=1)}


def top_k(scores, k, predicate=None):
    if k < 1:
        raise InvalidParams(f'k must be at least 1, got {k}')

    rows = []
    for user in scores.ranking():
        if predicate is not None and not predicate(user):
            continue
        rows.append(RankRow(user, scores[user], len(rows) + 1))
        if len(rows) == k:
            break

    return RankReport((scores.label,), tuple(rows))


def rank_join(a, b):
    """Each shared user's rank under both measures, ordered by the rank under ``a``."""
    ranks_a, ranks_b = ranks(a), ranks(b)
    shared = sorted((user for user in ranks_a if user in ranks_b), key=ranks_a.__getitem__)
    return RankReport((a.label, b.label), tuple(JoinRow(user, ranks_a[user], ranks_b[user]) for user in shared))


def many_followers_low_influence(join, follower_top, k):
    """Among the ``follower_top`` most followed users, those ranked lowest by influence."""
    popular = [row for row in join.rows if row.rank_a <= follower_top]
    popular.sort(key=lambda row: (-row.rank_b, row.user))
    return RankReport(join.labels, tuple(popular[:k]))


def few_followers_high_influence(join, follower_floor, k):
    """Users ranked below ``follower_floor`` by followers, ordered by influence rank."""
    obscure = [row for row in join.rows if row.rank_a > follower_floor]
    obscure.sort(key=lambda row: (row.rank_b, row.user))
    return RankReport(join.labels, tuple(obscure[:k]))


def rank_correlation(a, b):
    """Spearman correlation over the users both vectors score, average ranks on ties."""
    shared = sorted(user for user in a.nodes if user in b)
    if len(shared) < 2:
        raise InsufficientOverlap(f'{a.label} and {b.label} share {len(shared)} users, need at least 2')

    rank_a = rankdata([a[user] for user in shared], method='average')
    rank_b = rankdata([b[user] for user in shared], method='average')
    # ranks are multiples of 1/2, so the deviations below are exact
    dev_a = rank_a - np.mean(rank_a)
    dev_b = rank_b - np.mean(rank_b)
    spread = np.dot(dev_a, dev_a) * np.dot(dev_b, dev_b)
    if spread == 0:
        raise ConstantRanking(f'{a.label} or {b.label} is constant over the shared users')

    return float(np.dot(dev_a, dev_b) / math.sqrt(spread))


def followers_vs_influence(follows, influence):
    """(user, followers, influence) for every scored user."""
    return [(user, len(follows.followers_of(user)), value) for user, value in influence.items()]
