from collections import Counter, defaultdict

import numpy as np

from influencerank.scoring.vector import ScoreVector


def h_index_from_counts(counts):
    """Largest h such that at least h of the counts are >= h."""
    ordered = np.sort(np.asarray(list(counts), dtype=np.int64))[::-1]
    ranks = np.arange(1, len(ordered) + 1)
    return int(np.count_nonzero(ordered >= ranks))


def url_retweet_counts(log):
    """Retweet events crediting each user, per URL that user posted."""
    posted = defaultdict(set)
    for event in log.events:
        posted[event.user].add(event.url)

    counts = defaultdict(Counter)
    for event in log.events:
        if event.is_retweet and event.url in posted[event.source]:
            counts[event.source][event.url] += 1

    return counts


def h_index(log, user):
    return h_index_from_counts(url_retweet_counts(log).get(user, Counter()).values())


def h_index_vector(log):
    counts = url_retweet_counts(log)
    return ScoreVector.from_mapping('hindex', {
        user: h_index_from_counts(counts.get(user, Counter()).values()) for user in log.users
    })


def follower_count(follows):
    return ScoreVector.from_mapping('followers', {user: len(follows.followers_of(user)) for user in follows.users})


def retweet_count(log):
    credited = Counter(event.source for event in log.events if event.is_retweet)
    users = set(log.users) | set(credited)
    return ScoreVector.from_mapping('retweets', {user: credited.get(user, 0) for user in users})
