from influencerank.graphs.builder import GraphBuilder, MentionTimes
from influencerank.graphs.graph import PairwiseCounts


class CoMentionBuilder(GraphBuilder):
    """Arc (i, j) when follower j mentions a URL after followee i did.

    S_ij counts the URLs j mentioned strictly after i's first mention of them,
    F_ij the URLs of i that j never mentioned; the weight is S/(F+S).
    """

    @staticmethod
    def name():
        return 'comention'

    @staticmethod
    def needs_follows():
        return True

    def build(self, log, follows=None):
        times = MentionTimes(log)
        nodes = times.eligible(self.min_urls)

        weights = {}
        for followee, follower in sorted(follows.edges):
            if followee not in nodes or follower not in nodes:
                continue

            counts = comention_counts(times, followee, follower)
            if counts.s:
                weights[(followee, follower)] = counts.s / (counts.f + counts.s)

        return self.make_graph(nodes, weights)


def comention_counts(times, i, j):
    first_i = times.first.get(i, {})
    last_j = times.last.get(j, {})

    s = f = 0
    for url, first in first_i.items():
        last = last_j.get(url)
        if last is None:
            f += 1
        elif last > first:
            s += 1

    return PairwiseCounts(s=s, f=f, p=len(first_i))
