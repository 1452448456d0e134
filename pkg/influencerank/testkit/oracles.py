"""Naive reference implementations.

Nothing here shares code with the main path: each oracle recomputes its
answer from raw events or dense matrices so the two can be compared.
"""
import numpy as np

from influencerank.errors import DegenerateGraph, EmptyGraph, EmptyNodeSet, TooLarge
from influencerank.scoring.ip import ScorePair
from influencerank.scoring.vector import ScoreVector

DENSE_LIMIT = 200


def dense_matrix(graph):
    if graph.node_count > DENSE_LIMIT:
        raise TooLarge(f'dense oracles handle at most {DENSE_LIMIT} nodes, got {graph.node_count}')

    nodes = list(graph.nodes)
    n = len(nodes)
    weights = np.zeros((n, n))
    present = np.zeros((n, n), dtype=bool)
    for (i, j), w in graph.weights.items():
        weights[nodes.index(i), nodes.index(j)] = w
        present[nodes.index(i), nodes.index(j)] = True
    return weights, present


def dense_ip_oracle(graph, iterations):
    weights, present = dense_matrix(graph)
    if not present.any():
        raise EmptyGraph('the influence graph has no arcs')

    n = len(graph.nodes)
    u = np.zeros((n, n))
    v = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if present[i, j]:
                u[i, j] = weights[i, j] / weights[:, j].sum()
                rejected = sum(1 - weights[i, k] for k in range(n) if present[i, k])
                if rejected > 0:
                    v[i, j] = (1 - weights[i, j]) / rejected

    influence = np.ones(n)
    passivity = np.ones(n)
    for _ in range(iterations):
        raw_passivity = np.array([sum(v[j, i] * influence[j] for j in range(n)) for i in range(n)])
        raw_influence = np.array([sum(u[i, j] * raw_passivity[j] for j in range(n)) for i in range(n)])
        if raw_passivity.sum() == 0 or raw_influence.sum() == 0:
            raise DegenerateGraph('scores vanished')
        influence = raw_influence / raw_influence.sum()
        passivity = raw_passivity / raw_passivity.sum()

    return ScorePair(graph.nodes, influence, passivity, iterations_run=iterations)


def dense_pagerank_oracle(graph, params):
    if not graph.node_count:
        raise EmptyNodeSet('PageRank needs at least one node')
    weights, present = dense_matrix(graph)

    n = len(graph.nodes)
    transitions = np.zeros((n, n))
    for i in range(n):
        total = weights[i].sum()
        for j in range(n):
            transitions[j, i] = weights[i, j] / total if total > 0 else 1.0 / n

    google = params.damping * transitions + (1 - params.damping) / n
    x = np.full(n, 1.0 / n)
    for _ in range(params.max_iterations):
        x_new = google @ x
        change = np.abs(x_new - x).sum()
        x = x_new
        if change < params.epsilon:
            break

    return ScoreVector('pagerank', graph.nodes, x / x.sum())


def naive_comention(log, follows, min_urls):
    """(nodes, {arc: weight}) by scanning every follow pair against raw events."""
    events = list(log.events)
    nodes = {user for user in {e.user for e in events} if len({e.url for e in events if e.user == user}) >= min_urls}

    weights = {}
    for followee, follower in follows.edges:
        if followee not in nodes or follower not in nodes:
            continue
        urls_i = {e.url for e in events if e.user == followee}
        s = f = 0
        for url in urls_i:
            first_i = min(e.time for e in events if e.user == followee and e.url == url)
            times_j = [e.time for e in events if e.user == follower and e.url == url]
            if not times_j:
                f += 1
            elif any(t > first_i for t in times_j):
                s += 1
        if s:
            weights[(followee, follower)] = s / (f + s)

    return nodes, weights


def naive_retweet(log, min_urls, follows=None):
    events = list(log.events)
    nodes = {user for user in {e.user for e in events} if len({e.url for e in events if e.user == user}) >= min_urls}

    weights = {}
    for i in nodes:
        posted = {e.url for e in events if e.user == i}
        for j in nodes:
            if i == j or (follows is not None and (i, j) not in follows.edges):
                continue
            retweeted = {e.url for e in events if e.user == j and e.is_retweet and e.source == i and e.url in posted}
            if retweeted:
                weights[(i, j)] = len(retweeted) / len(posted)

    return nodes, weights


def naive_h_index(counts):
    counts = list(counts)
    best = 0
    for h in range(len(counts) + 1):
        if sum(1 for c in counts if c >= h) >= h:
            best = h
    return best


def naive_percentile(values, q):
    """Smallest value with more than q * n points at or below it, by counting."""
    threshold = q * len(values) + 1e-9
    covering = [v for v in values if sum(1 for x in values if x <= v) > threshold]
    return min(covering) if covering else max(values)


def naive_average_ranks(values):
    ranks = [0.0] * len(values)
    for position, value in enumerate(values):
        below = sum(1 for other in values if other < value)
        equal = sum(1 for other in values if other == value)
        ranks[position] = below + (equal + 1) / 2
    return ranks


def naive_spearman(a, b):
    """Rank both mappings over their shared keys, then take Pearson's r."""
    shared = sorted(set(a) & set(b))
    ra = naive_average_ranks([a[user] for user in shared])
    rb = naive_average_ranks([b[user] for user in shared])
    n = len(shared)
    mean_a, mean_b = sum(ra) / n, sum(rb) / n
    cov = sum((x - mean_a) * (y - mean_b) for x, y in zip(ra, rb))
    var_a = sum((x - mean_a) ** 2 for x in ra)
    var_b = sum((y - mean_b) ** 2 for y in rb)
    return cov / (var_a * var_b) ** 0.5


def naive_url_average(log, scores):
    result = {}
    for url in {e.url for e in log.events}:
        users = {e.user for e in log.events if e.url == url and e.user in scores}
        if users:
            result[url] = sum(scores[user] for user in sorted(users)) / len(users)
    return result


def naive_follower_counts(follows):
    users = {user for edge in follows.edges for user in edge}
    return {user: sum(1 for followee, _ in follows.edges if followee == user) for user in users}


def naive_retweet_counts(log):
    users = {e.user for e in log.events} | {e.source for e in log.events if e.is_retweet}
    return {user: sum(1 for e in log.events if e.is_retweet and e.source == user) for user in users}


def naive_user_rate(log, follows, user):
    received = 0
    retweeted = 0
    for followee, follower in follows.edges:
        if follower != user:
            continue
        received += sum(1 for e in log.events if e.user == followee)
        retweeted += sum(1 for e in log.events if e.is_retweet and e.user == user and e.source == followee)
    return retweeted / received if received else None


def naive_audience_rate(log, follows, user):
    reached = 0
    retweeted = 0
    for followee, follower in follows.edges:
        if followee != user:
            continue
        reached += sum(1 for e in log.events if e.user == user)
        retweeted += sum(1 for e in log.events if e.is_retweet and e.user == follower and e.source == user)
    return retweeted / reached if reached else None
