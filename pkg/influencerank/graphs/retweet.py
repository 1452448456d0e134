from collections import defaultdict

from influencerank.graphs.builder import GraphBuilder, MentionTimes
from influencerank.graphs.graph import PairwiseCounts


class RetweetBuilder(GraphBuilder):
    """Arc (i, j) when j retweeted, crediting i, a URL that i mentioned.

    The weight is S_ij / P_i: the share of i's distinct URLs that j retweeted.
    """

    @staticmethod
    def name():
        return 'rt'

    def build(self, log, follows=None):
        times = MentionTimes(log)
        nodes = times.eligible(self.min_urls)

        weights = {}
        for (source, retweeter), counts in retweet_counts(log, times, nodes).items():
            if self.keep(source, retweeter, follows):
                weights[(source, retweeter)] = counts.s / counts.p

        return self.make_graph(nodes, weights)

    def keep(self, source, retweeter, follows):
        return True


class RetweetFollowerBuilder(RetweetBuilder):
    """The retweet graph restricted to arcs where j also follows i."""

    @staticmethod
    def name():
        return 'rt-follower'

    @staticmethod
    def needs_follows():
        return True

    def keep(self, source, retweeter, follows):
        return (source, retweeter) in follows


def retweet_counts(log, times, nodes):
    """PairwiseCounts for every (source, retweeter) pair with S >= 1."""
    retweeted = defaultdict(set)
    for event in log.events:
        if not event.is_retweet:
            continue
        if event.source not in nodes or event.user not in nodes:
            continue
        # attribution follows the credited source only, and only for URLs it posted
        if event.url in times.first[event.source]:
            retweeted[(event.source, event.user)].add(event.url)

    counts = {}
    for (source, retweeter), urls in sorted(retweeted.items()):
        posted = len(times.urls(source))
        counts[(source, retweeter)] = PairwiseCounts(s=len(urls), f=posted - len(urls), p=posted)

    return counts
