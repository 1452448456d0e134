import logging
from collections import defaultdict

from influencerank.errors import InvalidParams
from influencerank.graphs.graph import InfluenceGraph

logger = logging.getLogger(__name__)


class GraphBuilder:
    def __init__(self, min_urls=3):
        if min_urls < 1:
            raise InvalidParams(f'min_urls must be at least 1, got {min_urls}')
        self.min_urls = min_urls

    @staticmethod
    def name():
        raise NotImplementedError

    @staticmethod
    def needs_follows():
        return False

    def build(self, log, follows=None):
        raise NotImplementedError

    def make_graph(self, nodes, weights):
        graph = InfluenceGraph(nodes, weights)
        logger.info('%s graph: %d nodes, %d arcs', self.name(), graph.node_count, graph.arc_count)
        return graph


class MentionTimes:
    """First and last time each user mentioned each URL (retweets included)."""

    def __init__(self, log):
        self.first = defaultdict(dict)
        self.last = defaultdict(dict)
        # events are time-sorted, so the first sighting is the earliest
        for event in log.events:
            first = self.first[event.user]
            if event.url not in first:
                first[event.url] = event.time
            self.last[event.user][event.url] = event.time

    def urls(self, user):
        return self.first.get(user, {}).keys()

    def eligible(self, min_urls):
        return {user for user, urls in self.first.items() if len(urls) >= min_urls}
