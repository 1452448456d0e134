"""Seeded synthetic traces and graphs.

Randomness comes from numpy's PCG64 generator (``numpy.random.default_rng``),
whose output stream is fixed for a given seed on every platform. Draws are
taken in this order:

1. follows: one uniform per ordered (followee, follower) pair, row-major over
   the users, diagonal included and ignored;
2. original mentions: one Poisson count per user, then one URL index per
   mention, then one timestamp per mention;
3. retweets: original mentions in (time, user, url) order; for each one, one
   uniform per follower of the author (followers ascending), then one delay per
   follower that retweets.
"""
import os
from dataclasses import dataclass

import numpy as np

from influencerank.errors import InvalidParams
from influencerank.graphs.graph import InfluenceGraph
from influencerank.ingest.events import serialize_events
from influencerank.ingest.records import ActivityLog, EventKind, FollowEdgeList, TweetEvent

HORIZON_MS = 300 * 3600 * 1000
MAX_RETWEET_DELAY_MS = 6 * 3600 * 1000
BROADCASTER_BOOST = 5


@dataclass(frozen=True)
class SynthParams:
    users: int = 200
    broadcasters: int = 10
    follow_prob: float = 0.05
    mention_rate: float = 4.0
    retweet_prob: float = 0.1
    url_pool: int = 2000
    seed: int = 1

    def __post_init__(self):
        if self.users < 1 or not 0 <= self.broadcasters <= self.users:
            raise InvalidParams('need users >= 1 and 0 <= broadcasters <= users')
        for name in ('follow_prob', 'retweet_prob'):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise InvalidParams(f'{name} must lie in [0, 1]')
        if self.mention_rate < 0 or self.url_pool < 1:
            raise InvalidParams('need mention_rate >= 0 and url_pool >= 1')


def user_name(index):
    return f'u{index:05d}'


def synth_trace(params):
    """A deterministic (ActivityLog, FollowEdgeList).

    The first ``broadcasters`` users post and are followed more often; every
    follower retweets each post it receives with ``retweet_prob``.
    """
    rng = np.random.default_rng(params.seed)
    n = params.users
    names = [user_name(k) for k in range(n)]
    broadcaster = np.arange(n) < params.broadcasters

    follow_draws = rng.random((n, n))
    follow_prob = np.where(broadcaster, min(1.0, BROADCASTER_BOOST * params.follow_prob), params.follow_prob)
    followed = follow_draws < follow_prob[:, None]
    np.fill_diagonal(followed, False)
    follows = FollowEdgeList((names[i], names[j]) for i, j in zip(*np.nonzero(followed)))

    rates = np.where(broadcaster, BROADCASTER_BOOST * params.mention_rate, params.mention_rate)
    mention_counts = rng.poisson(rates)
    authors = np.repeat(np.arange(n), mention_counts)
    urls = rng.integers(params.url_pool, size=len(authors))
    times = rng.integers(HORIZON_MS, size=len(authors))

    originals = sorted((TweetEvent(int(t), names[a], f'url{int(u):06d}') for a, u, t in zip(authors, urls, times)),
                       key=TweetEvent.sort_key)
    followers = {name: sorted(follows.followers_of(name)) for name in names}

    events = list(originals)
    for original in originals:
        audience = followers[original.user]
        if not audience:
            continue
        decisions = rng.random(len(audience)) < params.retweet_prob
        retweeters = [follower for follower, chosen in zip(audience, decisions) if chosen]
        delays = rng.integers(1, MAX_RETWEET_DELAY_MS + 1, size=len(retweeters))
        for retweeter, delay in zip(retweeters, delays):
            events.append(TweetEvent(original.time + int(delay), retweeter, original.url,
                                     EventKind.retweet, original.user))

    return ActivityLog(events), follows


def planted_contrast(audience_size=3):
    """Two broadcasters with equally large audiences of different quality.

    A's audience is dedicated and passive: each member follows A only and
    retweets three of A's four URLs. B's audience follows B, X1 and X2 and
    retweets from all three. Influence should rank A above B.
    """
    if audience_size < 1:
        raise InvalidParams('audience_size must be at least 1')

    events = []
    follows = set()
    posters = ['A', 'B', 'X1', 'X2']
    for offset, poster in enumerate(posters):
        for k in range(4):
            events.append(TweetEvent(10 * offset + k, poster, f'{poster}-url{k}'))

    def retweet(time, user, poster, k):
        events.append(TweetEvent(time, user, f'{poster}-url{k}', EventKind.retweet, poster))

    for member in range(audience_size):
        a, b = f'a{member:03d}', f'b{member:03d}'
        follows.add(('A', a))
        for poster in ('B', 'X1', 'X2'):
            follows.add((poster, b))

        base = 100 + 100 * member
        for k in range(3):
            retweet(base + 1 + k, a, 'A', k)
        retweet(base + 11, b, 'B', 0)
        retweet(base + 12, b, 'B', 1)
        for k in range(3):
            retweet(base + 20 + k, b, 'X1', k)
            retweet(base + 30 + k, b, 'X2', k)

    return ActivityLog(events), FollowEdgeList(follows)


def node_names(n):
    width = len(str(max(n - 1, 0)))
    return [f'n{k:0{width}d}' for k in range(n)]


def random_graph(n, edge_prob, seed):
    """Erdos-Renyi digraph with weights uniform in (0, 1]."""
    rng = np.random.default_rng(seed)
    names = node_names(n)
    present = rng.random((n, n)) < edge_prob
    np.fill_diagonal(present, False)
    src, dst = np.nonzero(present)
    weights = 1.0 - rng.random(len(src))
    return InfluenceGraph(names, {(names[i], names[j]): w for i, j, w in zip(src, dst, weights)})


def random_sparse_graph(n, arc_count, seed):
    """About ``arc_count`` random arcs (self-arcs and repeats dropped) on ``n`` nodes."""
    rng = np.random.default_rng(seed)
    names = node_names(n)
    src = rng.integers(n, size=arc_count)
    dst = rng.integers(n, size=arc_count)
    keys = np.unique(src[src != dst] * n + dst[src != dst])
    weights = 1.0 - rng.random(len(keys))
    return InfluenceGraph(names, {(names[k // n], names[k % n]): w for k, w in zip(keys.tolist(), weights)})


def write_trace(log, follows, directory, clicks=None):
    """Writes ``events.tsv``, ``follows.tsv`` and, given ``clicks``, ``clicks.tsv``."""
    os.makedirs(directory, exist_ok=True)
    events_path = os.path.join(directory, 'events.tsv')
    follows_path = os.path.join(directory, 'follows.tsv')
    with open(events_path, 'wb') as file:
        file.write(serialize_events(log))
    with open(follows_path, 'w', encoding='utf-8') as file:
        for followee, follower in follows:
            file.write(f'{followee}\t{follower}\n')
    if clicks is not None:
        with open(os.path.join(directory, 'clicks.tsv'), 'w', encoding='utf-8') as file:
            for url, count in sorted(clicks.items()):
                file.write(f'{url}\t{count}\n')

    return events_path, follows_path


def synth_clicks(log, seed):
    """Heavy-tailed click totals for every URL in ``log``."""
    rng = np.random.default_rng(seed)
    urls = sorted({event.url for event in log.events})
    clicks = np.floor(rng.pareto(1.5, size=len(urls)) * 10).astype(np.int64)
    return dict(zip(urls, clicks.tolist()))
